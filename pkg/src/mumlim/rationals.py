"""Exact rational scalars.

All exact arithmetic in the package runs over ``QQ``: gmpy2.mpq when
available (much faster on gcd-heavy workloads), fractions.Fraction
otherwise. Both keep values reduced with a positive denominator and print
identically ("num/den", or "num" when the denominator is 1), so everything
above this module is backend-agnostic. Set MUMLIM_NO_GMPY=1 to force the
Fraction backend.
"""

import os

if os.environ.get("MUMLIM_NO_GMPY"):
    _HAVE_GMPY = False
else:
    try:
        from gmpy2 import mpq as _mpq

        _HAVE_GMPY = True
    except ImportError:
        _HAVE_GMPY = False

if _HAVE_GMPY:
    QQ = _mpq
else:
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


def scalar_backend():
    return "gmpy2" if _HAVE_GMPY else "fractions"


def rational_str(x) -> str:
    """Canonical "num/den" (or "num") form, identical for both backends."""
    return str(x)


def as_integer_pair(x):
    return int(x.numerator), int(x.denominator)
