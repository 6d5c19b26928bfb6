"""Frobenius solutions at a maximally unipotent regular singularity.

standard_basis() produces the unique power series f_0 in 1 + t*Q[[t]],
f_1, ..., f_{r-1} in t*Q[[t]] such that

    phi_k(t) = sum_{j=0}^k log(t)^j / j! * f_{k-j}(t),   k < r,

solve the operator. The construction is the k-induction on the coupled
system L f_k + L' f_{k-1} + L''/2! f_{k-2} + ... = 0, each step solved by
the coefficient recurrence n^r a_n = b_n - sum_{j>=1} p_j(n-j) a_{n-j};
residual() re-checks the result through a derivation-independent route.
"""

from .rationals import QQ, ZERO, ONE
from .poly import Poly
from .series import TruncatedSeries
from .operators import (
    ThetaOperator,
    TPolyOperator,
    theta_to_tpoly,
    op_theta_derivative,
    apply_operator,
)
from .errors import NotMaximallyUnipotent, PoleAtZero
from . import backend


def indicial_polynomial(L: ThetaOperator) -> Poly:
    """rho^r + sum_j q_j(0) rho^(r-j); its roots are the local exponents.

    Raises PoleAtZero when some q_j is not finite at 0 (the singularity is
    then not in the normalized regular form this package handles).
    """
    coeffs = [ZERO] * (L.r + 1)
    coeffs[L.r] = ONE
    for j in range(1, L.r + 1):
        coeffs[L.r - j] = L.q[j - 1].value_at_zero()
    return Poly(coeffs)


def check_mum(L: ThetaOperator):
    """Verify q_j(0) = 0 for all j; raise NotMaximallyUnipotent otherwise.

    The error lists every failing q_j (pole or nonzero value) and carries
    the indicial polynomial when it exists, as diagnostics.
    """
    failures = []
    saw_pole = False
    for j in range(1, L.r + 1):
        f = L.q[j - 1]
        if f.has_pole_at_zero():
            failures.append((j, "pole", None))
            saw_pole = True
        else:
            v = f.value_at_zero()
            if v:
                failures.append((j, "nonzero", v))
    if failures:
        indicial = None if saw_pole else indicial_polynomial(L)
        parts = []
        for j, reason, v in failures:
            parts.append(f"q_{j} has a pole at 0" if reason == "pole" else f"q_{j}(0) = {v}")
        raise NotMaximallyUnipotent(
            "not maximally unipotent: " + "; ".join(parts),
            failures=failures,
            indicial=indicial,
        )


def is_mum(L: ThetaOperator) -> bool:
    try:
        check_mum(L)
    except NotMaximallyUnipotent:
        return False
    return True


class StandardBasis:
    """The series f_0..f_{r-1}; f[k] is the coefficient of log(t)^0 in phi_k."""

    __slots__ = ("r", "nmax", "f")

    def __init__(self, r, nmax, f):
        f = tuple(f)
        if len(f) != r:
            raise ValueError("need exactly r series")
        if f[0].value_at_zero() != ONE:
            raise ValueError("f_0 must have constant term 1")
        if any(fj.value_at_zero() for fj in f[1:]):
            raise ValueError("f_j must vanish at 0 for j >= 1")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "nmax", nmax)
        object.__setattr__(self, "f", f)

    def __setattr__(self, name, value):
        raise AttributeError("StandardBasis is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, StandardBasis)
            and (self.r, self.nmax, self.f) == (other.r, other.nmax, other.f)
        )

    def phi(self, k) -> "LogSeries":
        """phi_k as a LogSeries: component j is f_{k-j}, j <= k."""
        if not 0 <= k < self.r:
            raise IndexError(f"phi_{k} outside 0..{self.r - 1}")
        return LogSeries(tuple(self.f[k - j] for j in range(k + 1)))


class LogSeries:
    """sum_j log(t)^j / j! * g_j(t) with truncated-series components g_j.

    The Euler operator acts componentwise through
    theta(log^j/j! * g) = log^j/j! * theta g + log^(j-1)/(j-1)! * g,
    i.e. g_j -> theta g_j + g_{j+1}.
    """

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("LogSeries needs at least one component")
        if len({g.nmax for g in components}) != 1:
            raise ValueError("components must share a truncation order")
        object.__setattr__(self, "components", components)

    def __setattr__(self, name, value):
        raise AttributeError("LogSeries is immutable")

    @property
    def nmax(self):
        return self.components[0].nmax

    def __eq__(self, other):
        return isinstance(other, LogSeries) and self.components == other.components

    def is_zero(self):
        return all(g.is_zero() for g in self.components)

    def __add__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        a, b = self.components, other.components
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, g in enumerate(b):
            out[i] = out[i] + g
        return LogSeries(out)

    def __neg__(self):
        return LogSeries(tuple(-g for g in self.components))

    def __sub__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        return self + (-other)

    def theta(self) -> "LogSeries":
        comps = self.components
        d = len(comps)
        out = []
        for j in range(d):
            g = comps[j].theta()
            if j + 1 < d:
                g = g + comps[j + 1]
            out.append(g)
        return LogSeries(out)

    def mul_ratfunc(self, f) -> "LogSeries":
        return LogSeries(tuple(g.mul_ratfunc(f) for g in self.components))


def standard_basis(L: ThetaOperator, nmax) -> StandardBasis:
    """Solve the coupled system by induction on k; all coefficients exact.

    f_0 is normalized by a_0 = 1; for k >= 1 the right-hand side is
    b = -sum_{j=1}^k (1/j!) L^(j) f_{k-j}, which lies in t*Q[[t]], and the
    recurrence divides by n^r at every step n >= 1.
    """
    check_mum(L)
    r = L.r
    Lt = theta_to_tpoly(L, nmax)
    derivs = [Lt] + [op_theta_derivative(Lt, j) for j in range(1, r)]
    ptable = Lt.ptable()
    zero_rhs = [ZERO] * (nmax + 1)

    f = []
    factorial = 1
    for k in range(r):
        if k == 0:
            rhs = zero_rhs
        else:
            acc = TruncatedSeries.zero(nmax)
            factorial = 1
            for j in range(1, k + 1):
                factorial *= j
                term = apply_operator(derivs[j], f[k - j])
                acc = acc + term.scale(QQ(-1, factorial))
            rhs = list(acc.c)
            if rhs[0]:
                raise AssertionError("right-hand side not in t*Q[[t]]")
        a0 = ONE if k == 0 else ZERO
        coeffs = backend.kernels.solve_ptable(ptable, rhs, r, a0)
        f.append(TruncatedSeries(nmax, coeffs))
    return StandardBasis(r, nmax, f)


def residual(L: ThetaOperator, basis: StandardBasis, k) -> LogSeries:
    """Apply L directly to phi_k; must vanish identically up to nmax.

    Independent of the recurrence route: phi_k is expanded as a LogSeries,
    theta acts by the componentwise commutation rule, and each q_j
    multiplies as a rational function. Nonzero output pins down exactly
    which coefficient of which log-power fails.
    """
    phi = basis.phi(k)
    powers = [phi]
    for _ in range(L.r):
        powers.append(powers[-1].theta())
    out = powers[L.r]
    for j in range(1, L.r + 1):
        qj = L.q[j - 1]
        if qj.is_zero():
            continue
        if qj.has_pole_at_zero():
            raise PoleAtZero(f"q_{j} not analytic at 0")
        out = out + powers[L.r - j].mul_ratfunc(qj)
    return out
