"""Dense univariate polynomials over exact rationals.

One class serves every variable in the package: t-polynomials (operator
coefficients), rho-polynomials (indicial), theta-polynomials (the p_j of a
t-graded operator) and tau-polynomials (formal 2*pi*i in monodromy
matrices). The variable name only matters when printing.
"""

from .rationals import QQ, ZERO, ONE, rational_str


class Poly:
    """Immutable polynomial; coefficients indexed by degree, no trailing zeros."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        cs = [x if isinstance(x, type(ZERO)) else QQ(x) for x in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "c", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, x):
        return cls((QQ(x),))

    @classmethod
    def x(cls):
        return cls((ZERO, ONE))

    @classmethod
    def monomial(cls, coeff, k):
        return cls((ZERO,) * k + (QQ(coeff),))

    def degree(self):
        """Degree, with the convention degree(0) = -1."""
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def leading(self):
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else ZERO

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(("Poly", self.c))

    def __neg__(self):
        return Poly(tuple(-x for x in self.c))

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
        return Poly(out)

    def scale(self, s):
        s = QQ(s)
        return Poly(tuple(x * s for x in self.c))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Horner evaluation; works for QQ, int and mpmath scalars alike."""
        if not self.c:
            return ZERO if isinstance(x, (int, type(ZERO))) else 0 * x
        acc = self.c[-1]
        for k in range(len(self.c) - 2, -1, -1):
            acc = acc * x + self.c[k]
        return acc

    def derivative(self):
        return Poly(tuple(k * self.c[k] for k in range(1, len(self.c))))

    def monic(self):
        if not self.c:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.c[-1]
        if lead == ONE:
            return self
        return Poly(tuple(x / lead for x in self.c))

    def divmod(self, other):
        """Euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        d = other.degree()
        lead = other.c[-1]
        if len(rem) - 1 < d:
            return Poly(), self
        quot = [ZERO] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            if not rem[k]:
                continue
            q = rem[k] / lead
            quot[k - d] = q
            for i in range(d + 1):
                rem[k - d + i] -= q * other.c[i]
        return Poly(quot), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def to_string(self, var="t"):
        if not self.c:
            return "0"
        parts = []
        for k, x in enumerate(self.c):
            if not x:
                continue
            s = rational_str(x)
            if k == 0:
                parts.append(s)
            elif k == 1:
                parts.append(f"{s}*{var}")
            else:
                parts.append(f"{s}*{var}^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_string('x')})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a
