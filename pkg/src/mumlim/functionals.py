"""Algebraic families of linear functionals and their limits at t=0.

A family with symbol m = sum_j v_j(t) theta^j acts on solutions (viewed on
the covering space, t = e(z) = exp(2 pi i z)) by

    pi_z(u) = sum_j v_j(e(z)) (2 pi i)^(-j) u^(j)(z).

Coordinates are taken in the dual standard basis. The monodromy-corrected
family pi'_z = pi_z o exp(-zN) is 1-periodic and, for symbols analytic at
0, converges to sum_j v_j(0) phi_j-dual as Im(z) grows; that limit is
exact rational data and lives in limit_functional().
"""

from dataclasses import dataclass

from mpmath import mp, mpf, mpc, workprec

from .rationals import ZERO
from .ratfunc import RationalFunction
from .solver import StandardBasis, LogSeries
from .errors import NotAnalyticAtZero, OutOfDisk, PoleInDisk, InternalMismatch
from .neval import EvalConfig, DEFAULT_CONFIG, eval_series, eval_poly, _GUARD_BITS


@dataclass(frozen=True)
class SymbolM:
    """Symbol of a functional family: coefficients v_0..v_{r-1} of theta^j."""

    v: tuple

    def __post_init__(self):
        if not self.v or not all(isinstance(f, RationalFunction) for f in self.v):
            raise TypeError("symbol coefficients must be RationalFunction")

    @classmethod
    def from_coeffs(cls, coeffs, r):
        coeffs = list(coeffs)
        if len(coeffs) > r:
            from .errors import DegreeOverflow

            raise DegreeOverflow(
                f"symbol has theta-degree {len(coeffs) - 1}, operator order is {r}"
            )
        from .ratfunc import RF_ZERO

        coeffs.extend([RF_ZERO] * (r - len(coeffs)))
        return cls(tuple(coeffs))

    @property
    def r(self):
        return len(self.v)


@dataclass(frozen=True)
class DualVector:
    """Coordinates in the dual standard basis phi_0-dual .. phi_{r-1}-dual."""

    coords: tuple

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def limit_functional(m: SymbolM) -> DualVector:
    """The Im(z) -> oo limit of pi'_z: exactly (v_0(0), ..., v_{r-1}(0)).

    Raises NotAnalyticAtZero, naming the first offending coefficient, when
    some v_j has a pole at t=0 (the family then has no limit).
    """
    coords = []
    for j, vj in enumerate(m.v):
        if vj.has_pole_at_zero():
            raise NotAnalyticAtZero(
                f"v_{j} = {vj.to_string()} has a pole at t=0", index=j
            )
        coords.append(vj.value_at_zero())
    return DualVector(tuple(coords))


def _theta_series_table(basis: StandardBasis, smax):
    """theta^s f_i for 0 <= s <= smax, shared by both evaluation routes."""
    table = []
    for fi in basis.f:
        row = [fi]
        for _ in range(smax):
            row.append(row[-1].theta())
        table.append(row)
    return table


def _d_chain(phi: LogSeries, depth):
    """phi, D phi, ..., D^depth phi with D = (2 pi i)^(-1) d/dz.

    In the w = 2 pi i z representation u = sum_i w^i/i! g_i(e(z)), D acts
    exactly like theta on a LogSeries: g_i -> theta g_i + g_{i+1}.
    """
    chain = [phi]
    for _ in range(depth):
        chain.append(chain[-1].theta())
    return chain


def _symbol_values(m, t):
    vals = []
    for j, vj in enumerate(m.v):
        den = eval_poly(vj.den, t)
        if abs(den) < mpf(2) ** (-mp.prec + 8) * (1 + abs(eval_poly(vj.num, t))):
            raise PoleInDisk(f"v_{j} = {vj.to_string()} has a pole at t = e(z)")
        vals.append(eval_poly(vj.num, t) / den)
    return vals


def _covering_point(z, cfg):
    z = mpc(z)
    log_t = 2j * mp.pi * z
    t = mp.exp(log_t)
    if abs(t) > cfg.radius:
        raise OutOfDisk(
            f"|e(z)| = {float(abs(t)):.6g} exceeds the configured radius {cfg.radius}"
        )
    return t, log_t


def functional_at_z(m: SymbolM, z, basis: StandardBasis, cfg=DEFAULT_CONFIG) -> DualVector:
    """Coordinates of pi_z in the dual standard basis: entry k is pi_z(phi_k).

    Each phi_k is differentiated term by term (exactly, on the truncated
    series) and the pieces are evaluated at t = e(z).
    """
    r = basis.r
    if m.r != r:
        raise ValueError("symbol size does not match the basis order")
    with workprec(cfg.precision + _GUARD_BITS):
        t, log_t = _covering_point(z, cfg)
        vvals = _symbol_values(m, t)
        coords = []
        for k in range(r):
            chain = _d_chain(basis.phi(k), r - 1)
            acc = mpc(0)
            for j in range(r):
                if not m.v[j].is_zero():
                    value, _tail = _eval_logseries(chain[j], t, log_t)
                    acc += vvals[j] * value
            coords.append(acc)
    with workprec(cfg.precision):
        return DualVector(tuple(+c for c in coords))


def _eval_logseries(ls, t, log_t):
    value = mpc(0)
    tail = mpf(0)
    power = mpc(1)
    fact = 1
    for j, g in enumerate(ls.components):
        if j:
            fact *= j
            power *= log_t
        v, tl = eval_series(g, t)
        value += power / fact * v
        tail += abs(power / fact) * tl
    return value, tail


def _twisted_matrix_route(m, z, basis, cfg):
    """Apply exp(-zN) to the pi_z coordinates: c'_j = sum_i E_ij c_i with
    E = exp(-z N), N = 2 pi i times the shift on the standard basis."""
    r = basis.r
    plain = functional_at_z(m, z, basis, cfg)
    with workprec(cfg.precision + _GUARD_BITS):
        z = mpc(z)
        w = -2j * mp.pi * z
        # E[i][j] = w^(j-i)/(j-i)!
        pow_cache = [mpc(1)]
        fact = 1
        for k in range(1, r):
            fact *= k
            pow_cache.append(w ** k / fact)
        coords = []
        for j in range(r):
            acc = mpc(0)
            for i in range(j + 1):
                acc += pow_cache[j - i] * plain.coords[i]
            coords.append(acc)
        return coords


def _twisted_closed_form(m, z, basis, cfg):
    """Periodic closed form: entry k is
    sum_{s<=k} sum_{j>=s} v_j(e(z)) (theta^(j-s) f_{k-s})(e(z))."""
    r = basis.r
    with workprec(cfg.precision + _GUARD_BITS):
        t, _log_t = _covering_point(z, cfg)
        vvals = _symbol_values(m, t)
        table = _theta_series_table(basis, r - 1)
        fvals = [
            [eval_series(table[i][s], t)[0] for s in range(r)] for i in range(r)
        ]
        coords = []
        for k in range(r):
            acc = mpc(0)
            for s in range(k + 1):
                for j in range(s, r):
                    if not m.v[j].is_zero():
                        acc += vvals[j] * fvals[k - s][j - s]
            coords.append(acc)
        return coords


def twisted_functional_at_z(
    m: SymbolM, z, basis: StandardBasis, cfg=DEFAULT_CONFIG, tolerance=None
) -> DualVector:
    """pi'_z = pi_z o exp(-zN), computed along two independent routes.

    The matrix route twists the functional_at_z coordinates by exp(-zN);
    the closed-form route uses the z-free expression in t = e(z) that makes
    1-periodicity manifest. Disagreement beyond the tolerance raises
    InternalMismatch -- that means a bug, so it is surfaced loudly.
    """
    direct = _twisted_matrix_route(m, z, basis, cfg)
    closed = _twisted_closed_form(m, z, basis, cfg)
    with workprec(cfg.precision + _GUARD_BITS):
        scale = 1 + max(abs(c) for c in closed)
        if tolerance is None:
            # exp(-zN) amplifies roundoff by roughly its largest entry
            amp = max(abs(2 * mp.pi * mpc(z)) ** k for k in range(basis.r))
            tolerance = mpf(2) ** (-cfg.precision + 8) * scale * (1 + amp)
        gap = max(abs(a - b) for a, b in zip(direct, closed))
        if not gap <= tolerance:
            raise InternalMismatch(
                f"matrix and closed-form routes differ by {mp.nstr(gap, 5)} "
                f"(tolerance {mp.nstr(mpf(tolerance), 5)})"
            )
    with workprec(cfg.precision):
        return DualVector(tuple(+c for c in closed))
