from setuptools import Extension, setup

# The compiled kernels are an optional speedup; the package falls back to
# mumlim._kernels_py when the extension is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "mumlim._kernels",
                ["src/mumlim/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
