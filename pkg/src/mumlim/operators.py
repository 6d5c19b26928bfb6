"""Differential operators in theta form and their t-graded counterpart.

A ThetaOperator is theta^r + q_1(t) theta^(r-1) + ... + q_r(t) with
rational-function coefficients, monic by construction. For series work it
is regraded as sum_j t^j p_j(theta) (a TPolyOperator), which turns
application into the convolution b_n = sum_j p_j(n-j) a_{n-j}.
"""

from .rationals import QQ, ZERO, ONE
from .poly import Poly
from .ratfunc import RationalFunction, RF_ZERO
from .series import TruncatedSeries
from .errors import PoleAtZero


class ThetaOperator:
    """Monic operator of order r >= 1; coeffs[j-1] holds q_j."""

    __slots__ = ("r", "q")

    def __init__(self, r, q):
        if r < 1:
            raise ValueError("operator order must be >= 1")
        q = tuple(q)
        if len(q) != r:
            raise ValueError(f"expected {r} coefficients q_1..q_{r}, got {len(q)}")
        if not all(isinstance(f, RationalFunction) for f in q):
            raise TypeError("coefficients must be RationalFunction")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("ThetaOperator is immutable")

    @classmethod
    def theta_power(cls, r):
        return cls(r, (RF_ZERO,) * r)

    @classmethod
    def from_theta_coeffs(cls, coeffs):
        """Build the monic form from c_0 + c_1 theta + ... + c_r theta^r."""
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        r = len(coeffs) - 1
        if r < 1:
            from .errors import ZeroLeadingCoefficient

            raise ZeroLeadingCoefficient(
                "expression is not a differential operator of order >= 1"
            )
        lead = coeffs[r]
        return cls(r, tuple(coeffs[r - j] / lead for j in range(1, r + 1)))

    def __eq__(self, other):
        return isinstance(other, ThetaOperator) and self.r == other.r and self.q == other.q

    def __hash__(self):
        return hash(("ThetaOperator", self.r, self.q))

    def coefficient(self, j):
        """q_j for 1 <= j <= r; q_0 = 1 for convenience."""
        if j == 0:
            from .ratfunc import RF_ONE

            return RF_ONE
        return self.q[j - 1]

    def to_string(self, var="t"):
        parts = [f"theta^{self.r}"]
        for j, f in enumerate(self.q, start=1):
            if f.is_zero():
                continue
            power = self.r - j
            tpart = "" if power == 0 else (" * theta" if power == 1 else f" * theta^{power}")
            parts.append(f"({f.to_string(var)}){tpart}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ThetaOperator({self.to_string()})"


def legendre_picard_fuchs() -> ThetaOperator:
    """The order-2 operator annihilating the Legendre-family periods.

    theta^2 - (t/(1-t)) theta - (1/4) t/(1-t); its holomorphic solution is
    2F1(1/2, 1/2; 1; t).
    """
    t = Poly.x()
    one_minus_t = Poly((ONE, -ONE))
    q1 = RationalFunction(-t, one_minus_t)
    q2 = RationalFunction(t.scale(QQ(-1) / 4), one_minus_t)
    return ThetaOperator(2, (q1, q2))


class TPolyOperator:
    """The t-graded form sum_{j<=nmax} t^j p_j(theta), deg p_j <= r."""

    __slots__ = ("r", "nmax", "p", "_ptable")

    def __init__(self, r, nmax, p):
        p = tuple(p)
        if len(p) != nmax + 1:
            raise ValueError("need exactly nmax+1 theta-polynomials")
        if any(pj.degree() > r for pj in p):
            raise ValueError("theta-degree exceeds the operator order")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "nmax", nmax)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "_ptable", None)

    def __setattr__(self, name, value):
        raise AttributeError("TPolyOperator is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, TPolyOperator)
            and (self.r, self.nmax, self.p) == (other.r, other.nmax, other.p)
        )

    def __hash__(self):
        return hash(("TPolyOperator", self.r, self.nmax, self.p))

    def is_mum_graded(self):
        """p_0(theta) = theta^r, the regraded form of all q_j(0) = 0."""
        return self.p[0] == Poly.monomial(1, self.r)

    def ptable(self):
        """Rows P[j][m] = p_j(m) for j + m <= nmax; cached, rows shrink with j."""
        if self._ptable is None:
            table = []
            for j, pj in enumerate(self.p):
                row = [pj(m) for m in range(self.nmax + 1 - j)]
                table.append(row)
            object.__setattr__(self, "_ptable", table)
        return self._ptable


def theta_to_tpoly(L: ThetaOperator, nmax) -> TPolyOperator:
    """Regrade theta^r + sum q_j theta^(r-j) as sum_j t^j p_j(theta).

    Expands every q_j at t=0, so each q_j must be pole-free there;
    p_0 = theta^r exactly when all q_j(0) = 0.
    """
    r = L.r
    expansions = []
    for j, f in enumerate(L.q, start=1):
        if f.has_pole_at_zero():
            raise PoleAtZero(f"q_{j} = {f.to_string()} has a pole at t=0")
        expansions.append(f.series(nmax))
    p = []
    for i in range(nmax + 1):
        coeffs = [ZERO] * (r + 1)
        if i == 0:
            coeffs[r] = ONE
        for j in range(1, r + 1):
            coeffs[r - j] += expansions[j - 1].coeff(i)
        p.append(Poly(coeffs))
    return TPolyOperator(r, nmax, p)


def op_theta_derivative(L: TPolyOperator, j) -> TPolyOperator:
    """Formal j-th derivative in theta; drops the order to r - j."""
    if not 0 <= j <= L.r:
        raise ValueError(f"derivative order {j} outside 0..{L.r}")
    p = L.p
    for _ in range(j):
        p = tuple(pi.derivative() for pi in p)
    return TPolyOperator(L.r - j, L.nmax, p)


def apply_operator(L: TPolyOperator, f: TruncatedSeries) -> TruncatedSeries:
    """Apply the t-graded operator; b_n = sum_{j<=n} p_j(n-j) a_{n-j}."""
    if f.nmax != L.nmax:
        raise ValueError("series and operator truncation orders differ")
    from . import backend

    return TruncatedSeries(f.nmax, backend.kernels.apply_ptable(L.ptable(), list(f.c)))
