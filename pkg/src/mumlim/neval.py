"""Multiprecision evaluation and the period-identity verifications.

Everything here is mpmath-based. Branch conventions: principal logarithm
(real on (0,1)), and in the second Legendre integral the square root of
x-1 on (t,1) is taken as i*sqrt(1-x), which reproduces the standard-basis
expression -4i log(2) phi_0 + i phi_1.
"""

from dataclasses import dataclass

from mpmath import mp, mpf, mpc, workprec

from .errors import OutOfDisk, ZeroArgument, QuadratureNoConvergence
from .operators import legendre_picard_fuchs
from .solver import standard_basis

_GUARD_BITS = 32


@dataclass(frozen=True)
class EvalConfig:
    precision: int = 128  # working precision, bits
    n_max: int = 200  # series truncation order
    radius: float = 0.75  # max |t|; keep < 1 for operators singular at t=1
    log_branch: str = "principal"

    def __post_init__(self):
        if self.precision < 64:
            raise ValueError("precision below 64 bits is not supported")
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        if self.log_branch != "principal":
            raise ValueError("only the principal branch is implemented")


@dataclass(frozen=True)
class EvalResult:
    value: object  # mpf or mpc at the configured precision
    tail_estimate: object  # magnitude of the last retained series term

    def __iter__(self):
        return iter((self.value, self.tail_estimate))


DEFAULT_CONFIG = EvalConfig()


def to_mp(q):
    """Exact rational -> mpf at the current working precision."""
    return mpf(int(q.numerator)) / mpf(int(q.denominator))


def eval_series(s, t):
    """Horner sum of a TruncatedSeries; returns (value, |last kept term|)."""
    coeffs = [to_mp(x) for x in s.c]
    acc = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        acc = acc * t + coeffs[k]
    return acc, abs(coeffs[-1] * t ** s.nmax)


def eval_poly(p, t):
    if not p.c:
        return mpf(0)
    acc = to_mp(p.c[-1])
    for k in range(len(p.c) - 2, -1, -1):
        acc = acc * t + to_mp(p.c[k])
    return acc


def eval_ratfunc(f, t):
    den = eval_poly(f.den, t)
    if den == 0:
        raise ZeroDivisionError(f"{f.to_string()} has a pole at t = {t}")
    return eval_poly(f.num, t) / den


def eval_log_series(ls, t, log_t):
    """Evaluate sum_j log_t^j / j! * g_j(t) with an explicit log value.

    Passing log_t decouples the branch choice: phi_k on the punctured disk
    uses the principal log, while on the covering space log_t = 2*pi*i*z.
    """
    value = mpf(0)
    tail = mpf(0)
    power = mpc(1)
    fact = 1
    for j, g in enumerate(ls.components):
        if j:
            fact *= j
            power *= log_t
        v, tl = eval_series(g, t)
        weight = power / fact
        value += weight * v
        tail += abs(weight) * tl
    return value, tail


def _check_disk(t, cfg):
    a = abs(t)
    if a == 0:
        raise ZeroArgument("t = 0 is the singular point")
    if a > cfg.radius:
        raise OutOfDisk(f"|t| = {float(a):.6g} exceeds the configured radius {cfg.radius}")


def eval_phi(basis, k, t, cfg=DEFAULT_CONFIG) -> EvalResult:
    """phi_k(t) = sum_j log(t)^j / j! f_{k-j}(t), principal branch."""
    with workprec(cfg.precision + _GUARD_BITS):
        t = mpc(t) if mpc(t).imag != 0 else mpf(mpc(t).real)
        _check_disk(t, cfg)
        log_t = mp.log(t)
        value, tail = eval_log_series(basis.phi(k), t, log_t)
    with workprec(cfg.precision):
        return EvalResult(+value, +tail)


def eval_phi_at_z(basis, k, z, cfg=DEFAULT_CONFIG) -> EvalResult:
    """phi_k on the covering space: log t = 2*pi*i*z, t = e(z)."""
    with workprec(cfg.precision + _GUARD_BITS):
        z = mpc(z)
        log_t = 2j * mp.pi * z
        t = mp.exp(log_t)
        if abs(t) > cfg.radius:
            raise OutOfDisk(
                f"|e(z)| = {float(abs(t)):.6g} exceeds the configured radius {cfg.radius}"
            )
        value, tail = eval_log_series(basis.phi(k), t, log_t)
    with workprec(cfg.precision):
        return EvalResult(+value, +tail)


def hypergeom_2f1_half(t, cfg=DEFAULT_CONFIG) -> EvalResult:
    """Direct summation of sum ((1/2)_n / n!)^2 t^n, |t| < 1.

    Deliberately independent of the Frobenius solver: the coefficient
    ratio ((2n+1)/(2n+2))^2 is applied term by term.
    """
    with workprec(cfg.precision + _GUARD_BITS):
        t = mpc(t) if mpc(t).imag != 0 else mpf(mpc(t).real)
        if abs(t) >= 1:
            raise OutOfDisk("the hypergeometric series needs |t| < 1")
        term = mpf(1)
        acc = mpf(1)
        for n in range(cfg.n_max):
            term = term * t * mpf((2 * n + 1) ** 2) / mpf(4 * (n + 1) ** 2)
            acc += term
    with workprec(cfg.precision):
        return EvalResult(+acc, abs(term))


def tanh_sinh_quad(f, a, b, cfg=DEFAULT_CONFIG, tolerance=None):
    """Double-exponential quadrature of f over [a, b].

    mpmath's tanh-sinh rule does the refinement; its level-to-level error
    estimate is checked against the tolerance (default 2^-precision scaled)
    and QuadratureNoConvergence is raised when the levels disagree.
    """
    if tolerance is None:
        tolerance = mpf(2) ** (-cfg.precision // 2)
    with workprec(cfg.precision + _GUARD_BITS):
        value, err = mp.quad(f, [a, b], method="tanh-sinh", error=True)
    if not err < tolerance:
        raise QuadratureNoConvergence(
            f"refinement levels disagree by {mp.nstr(err, 5)} > {mp.nstr(mpf(tolerance), 5)}"
        )
    return value, err


def legendre_period_first(t, cfg=DEFAULT_CONFIG) -> EvalResult:
    """The integral over [1, oo) of dx / sqrt(x (x-1) (x-t)), 0 < t < 1.

    The substitution x = 1/u maps it to the finite interval:
    integral over [0,1] of du / sqrt(u (1-u) (1-t u)), with inverse-
    square-root endpoint singularities that tanh-sinh absorbs.
    """
    t = mpf(t)
    if not 0 < t < 1:
        raise OutOfDisk("need 0 < t < 1")
    with workprec(cfg.precision + _GUARD_BITS):

        def integrand(u):
            return 1 / mp.sqrt(u * (1 - u) * (1 - t * u))

        value, err = tanh_sinh_quad(integrand, mpf(0), mpf(1), cfg)
    with workprec(cfg.precision):
        return EvalResult(+value, +err)


def legendre_period_second(t, cfg=DEFAULT_CONFIG) -> EvalResult:
    """The integral over [t, 1] of dx / sqrt(x (x-1) (x-t)), 0 < t < 1.

    On (t, 1) the factor x-1 is negative; with sqrt(x-1) = i sqrt(1-x) the
    integrand is -i / sqrt(x (1-x) (x-t)), so the result is -i times a real
    positive integral and equals -4i log(2) phi_0(t) + i phi_1(t).
    """
    t = mpf(t)
    if not 0 < t < 1:
        raise OutOfDisk("need 0 < t < 1")
    with workprec(cfg.precision + _GUARD_BITS):

        def integrand(x):
            return 1 / mp.sqrt(x * (1 - x) * (x - t))

        value, err = tanh_sinh_quad(integrand, t, mpf(1), cfg)
    with workprec(cfg.precision):
        return EvalResult(mpc(0, -1) * value, +err)


_legendre_basis_cache = {}


def legendre_basis(n_max):
    """Standard basis of the Legendre operator, cached per truncation order."""
    basis = _legendre_basis_cache.get(n_max)
    if basis is None:
        basis = standard_basis(legendre_picard_fuchs(), n_max)
        _legendre_basis_cache[n_max] = basis
    return basis


def verify_identity_hg(t, cfg=DEFAULT_CONFIG, basis=None):
    """|pi * phi_0(1-t) - 4 log(2) phi_0(t) + phi_1(t)|, exactly zero in truth.

    Needs both t and 1-t inside the configured radius.
    """
    if basis is None:
        basis = legendre_basis(cfg.n_max)
    t = mpf(t)
    with workprec(cfg.precision + _GUARD_BITS):
        lhs = mp.pi * eval_phi(basis, 0, 1 - t, cfg).value
        rhs = 4 * mp.log(2) * eval_phi(basis, 0, t, cfg).value - eval_phi(
            basis, 1, t, cfg
        ).value
        resid = abs(lhs - rhs)
    with workprec(cfg.precision):
        return +resid


def pi_series_partial_sums(n_terms, cfg=DEFAULT_CONFIG, inner_cutoff=None):
    """Partial sums of sum_n ((1/2)_n/n!)^2 * sum_{k>n} 1/(k(k-1/2)).

    The inner tails are summed to a cutoff through the partial-fraction
    form 1/(k(k-1/2)) = 2(1/(k-1/2) - 1/k); the part beyond the cutoff is
    bounded by a p-series comparison and returned as the uncertainty.
    """
    if n_terms < 1:
        raise ValueError("need at least one term")
    if inner_cutoff is None:
        inner_cutoff = max(100 * n_terms, 10_000)
    with workprec(cfg.precision + _GUARD_BITS):
        # inner(n) = sum_{k=n+1}^{cutoff}; built backwards from the cutoff
        half = mpf("0.5")
        inner = [mpf(0)] * n_terms
        acc = mpf(0)
        for k in range(inner_cutoff, n_terms - 1, -1):
            acc += 2 * (1 / (mpf(k) - half) - 1 / mpf(k))
        inner[n_terms - 1] = acc
        for n in range(n_terms - 2, -1, -1):
            k = n + 1
            inner[n] = inner[n + 1] + 2 * (1 / (mpf(k) - half) - 1 / mpf(k))
        # tail beyond the cutoff: 0 < sum_{k>K} 1/(k(k-1/2)) < 1/(K-1/2)
        tail_bound = 1 / (mpf(inner_cutoff) - mpf("0.5"))

        partials = []
        total = mpf(0)
        uncertainty = mpf(0)
        coeff = mpf(1)  # ((1/2)_n / n!)^2
        for n in range(n_terms):
            if n:
                coeff = coeff * mpf((2 * n - 1) ** 2) / mpf(4 * n**2)
            total += coeff * inner[n]
            uncertainty += coeff * tail_bound
            partials.append(+total)
    with workprec(cfg.precision):
        return [+p for p in partials], +uncertainty


def pi_series(n_terms, cfg=DEFAULT_CONFIG) -> EvalResult:
    """Value of the n_terms-term partial sum; tail_estimate carries the
    accumulated inner-tail uncertainty (the outer truncation is the caller's
    choice and is not folded in)."""
    partials, uncertainty = pi_series_partial_sums(n_terms, cfg)
    return EvalResult(partials[-1], uncertainty)
