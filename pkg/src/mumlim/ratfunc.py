"""Rational functions over the exact rationals, in canonical form.

Canonical means gcd(num, den) = 1 with a monic denominator, so equal
functions compare equal structurally. Pole detection at t=0 is then just a
constant-term test on the denominator.
"""

from .rationals import QQ, ZERO, ONE
from .poly import Poly, poly_gcd
from .series import TruncatedSeries
from .errors import PoleAtZero


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly.const(num) if not isinstance(num, (tuple, list)) else Poly(num)
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly.const(den) if not isinstance(den, (tuple, list)) else Poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading()
            if lead != ONE:
                num = num.scale(ONE / lead)
                den = den.scale(ONE / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def t(cls):
        return cls(Poly.x())

    @classmethod
    def const(cls, x):
        return cls(Poly.const(x))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash(("RationalFunction", self.num, self.den))

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __sub__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def scale(self, s):
        return RationalFunction(self.num.scale(s), self.den)

    def derivative(self):
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def theta_derivative(self):
        """t * d/dt of self; the derivation behind theta * g = g * theta + (t g')."""
        return RationalFunction(Poly.x(), Poly.const(1)) * self.derivative()

    def has_pole_at_zero(self):
        return not self.den.coeff(0)

    def value_at_zero(self):
        """f(0), or PoleAtZero when the reduced denominator vanishes at 0."""
        d0 = self.den.coeff(0)
        if not d0:
            raise PoleAtZero(f"{self.to_string()} has a pole at t=0")
        return self.num.coeff(0) / d0

    def __call__(self, x):
        """Evaluate at a scalar (exact or mpmath); caller avoids poles."""
        return self.num(x) / self.den(x)

    def series(self, nmax) -> TruncatedSeries:
        """Power-series expansion at 0; requires den(0) != 0."""
        if self.has_pole_at_zero():
            raise PoleAtZero(f"{self.to_string()} has a pole at t=0")
        return TruncatedSeries.from_poly(self.num, nmax).div_poly(self.den)

    def to_string(self, var="t"):
        return f"({self.num.to_string(var)})/({self.den.to_string(var)})"

    def __repr__(self):
        return f"RationalFunction({self.to_string()})"


RF_ZERO = RationalFunction(Poly())
RF_ONE = RationalFunction(Poly.const(1))
