"""Truncated power series over exact rationals.

A TruncatedSeries of order N stores exactly the coefficients a_0..a_N and
never reports anything beyond index N. Arithmetic mixing different
truncation orders is a bug, not a feature, and raises.
"""

from . import backend
from .rationals import QQ, ZERO, ONE
from .poly import Poly


class TruncatedSeries:
    __slots__ = ("nmax", "c")

    def __init__(self, nmax, coeffs=()):
        if nmax < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [x if isinstance(x, type(ZERO)) else QQ(x) for x in coeffs]
        if len(cs) > nmax + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs.extend([ZERO] * (nmax + 1 - len(cs)))
        object.__setattr__(self, "nmax", nmax)
        object.__setattr__(self, "c", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, nmax):
        return cls(nmax)

    @classmethod
    def one(cls, nmax):
        return cls(nmax, (ONE,))

    @classmethod
    def monomial(cls, nmax, k, coeff=1):
        if k > nmax:
            return cls(nmax)
        return cls(nmax, (ZERO,) * k + (QQ(coeff),))

    @classmethod
    def from_poly(cls, p: Poly, nmax):
        return cls(nmax, p.c[: nmax + 1])

    def coeff(self, n):
        if n > self.nmax:
            raise IndexError(f"coefficient {n} beyond truncation order {self.nmax}")
        return self.c[n]

    def value_at_zero(self):
        return self.c[0]

    def is_zero(self):
        return not any(self.c)

    def _check(self, other):
        if self.nmax != other.nmax:
            raise ValueError("truncation orders differ")

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.nmax == other.nmax
            and self.c == other.c
        )

    def __hash__(self):
        return hash(("TruncatedSeries", self.nmax, self.c))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(self.nmax, tuple(x + y for x, y in zip(self.c, other.c)))

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(self.nmax, tuple(x - y for x, y in zip(self.c, other.c)))

    def __neg__(self):
        return TruncatedSeries(self.nmax, tuple(-x for x in self.c))

    def scale(self, s):
        s = QQ(s)
        return TruncatedSeries(self.nmax, tuple(s * x for x in self.c))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(
            self.nmax, backend.kernels.cauchy_mul(list(self.c), list(other.c))
        )

    def mul_poly(self, p: Poly):
        return TruncatedSeries(self.nmax, backend.kernels.mul_poly(list(self.c), list(p.c)))

    def div_poly(self, p: Poly):
        """Series division by a polynomial with p(0) != 0."""
        if p.is_zero() or not p.c[0]:
            raise ZeroDivisionError("series division needs a unit constant term")
        return TruncatedSeries(self.nmax, backend.kernels.div_poly(list(self.c), list(p.c)))

    def mul_ratfunc(self, f):
        """Multiply by a rational function analytic at 0 (duck-typed num/den)."""
        return self.mul_poly(f.num).div_poly(f.den)

    def theta(self):
        """Euler operator t d/dt: a_n -> n a_n."""
        return TruncatedSeries(self.nmax, tuple(n * x for n, x in enumerate(self.c)))

    def truncate(self, nmax):
        if nmax > self.nmax:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(nmax, self.c[: nmax + 1])

    def __repr__(self):
        head = Poly(self.c[:6]).to_string("t")
        tail = " + ..." if self.nmax > 5 else ""
        return f"TruncatedSeries(N={self.nmax}: {head}{tail})"
