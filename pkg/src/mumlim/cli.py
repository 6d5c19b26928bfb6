"""Command-line front end.

One subcommand per pipeline stage (solve / indicial / monodromy /
filtrations / limit / functional / eval) plus named verification suites
under `verify`. Output is a single JSON document, deterministic for
identical inputs: exact rationals go out as "num/den" strings, complex
numbers as decimal-string pairs tagged with the precision, and wall-clock
timings are only included when --timings is passed.

Exit codes: 0 success, 1 domain errors (e.g. a non-MUM operator), 2 usage
or syntax errors.
"""

import argparse
import json
import random
import sys
import time

from mpmath import mp, mpf, mpc, workprec

from . import __version__
from .backend import backend_name
from .rationals import rational_str
from .monodromy import (
    monodromy_matrix,
    log_monodromy,
    weight_filtration,
    limiting_hodge_filtration,
    mhs_checks,
    formal_str,
)
from .operators import legendre_picard_fuchs
from .solver import standard_basis, indicial_polynomial, is_mum
from .functionals import (
    SymbolM,
    limit_functional,
    functional_at_z,
    twisted_functional_at_z,
)
from .neval import (
    EvalConfig,
    eval_phi,
    legendre_basis,
    legendre_period_first,
    legendre_period_second,
    verify_identity_hg,
    pi_series_partial_sums,
)
from .parsing import parse_expression, normalize_operator, normalize_symbol
from .ratfunc import RationalFunction
from .poly import Poly
from .errors import (
    MumlimError,
    OperatorSyntaxError,
    InvalidDivisor,
    DegreeOverflow,
    ZeroLeadingCoefficient,
)

_USAGE_ERRORS = (OperatorSyntaxError, InvalidDivisor, DegreeOverflow, ZeroLeadingCoefficient)


# ---------------------------------------------------------------------------
# serialization


def _num_str(x, dps):
    return mp.nstr(x, dps, strip_zeros=False)


def _complex_json(x, precision):
    dps = max(1, int(precision * 0.30103))
    x = mpc(x)
    return {
        "re": _num_str(x.real, dps),
        "im": _num_str(x.imag, dps),
        "precision": precision,
    }


def _real_str(x, precision):
    return _num_str(mpf(x), max(1, int(precision * 0.30103)))


def _operator_json(L):
    if L is None:
        return None
    return {"order": L.r, "q": [f.to_string() for f in L.q]}


def _filtration_json(filt):
    return {
        "direction": filt.direction,
        "labels": list(filt.labels()),
        "dims": filt.dims(),
        "subspaces": [sorted(s) for _, s in filt.steps],
    }


def _emit(doc, out_path):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(p, op_required=False, symbol=False):
    p.add_argument("--op", required=op_required, help="operator expression over t, theta, D")
    if symbol:
        p.add_argument("--symbol", required=True, help="symbol expression, theta-degree < r")
    p.add_argument("--nmax", type=int, default=200, help="series truncation order")
    p.add_argument("--precision", type=int, default=128, help="working precision in bits")
    p.add_argument("--tolerance", type=str, default=None, help="override the suite tolerance")
    p.add_argument("--radius", type=float, default=0.75, help="max |t| for evaluation")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")


def _parse_z(text):
    try:
        re_s, im_s = text.split(",")
        return mpc(mpf(re_s), mpf(im_s))
    except ValueError:
        raise OperatorSyntaxError("--z expects 're,im'", 0) from None


def _config(args):
    return EvalConfig(precision=args.precision, n_max=args.nmax, radius=args.radius)


def _operator(args, default=None):
    if args.op is None:
        if default is not None:
            return default
        raise OperatorSyntaxError("an --op expression is required", 0)
    return normalize_operator(parse_expression(args.op))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_solve(args):
    L = _operator(args)
    basis = standard_basis(L, args.nmax)
    return L, {"f": [[rational_str(c) for c in fj.c] for fj in basis.f]}, {}


def _cmd_indicial(args):
    L = _operator(args)
    poly = indicial_polynomial(L)
    return L, {
        "indicial": [rational_str(c) for c in poly.c],
        "is_mum": is_mum(L),
    }, {}


def _resolve_order(args):
    if args.order is not None:
        return args.order, None
    L = _operator(args)
    return L.r, L


def _cmd_monodromy(args):
    r, L = _resolve_order(args)
    gamma = monodromy_matrix(r)
    N = log_monodromy(gamma)
    report = mhs_checks(r)
    return L, {
        "order": r,
        "gamma": [[formal_str(e) for e in row] for row in gamma],
        "log": [[formal_str(e) for e in row] for row in N],
        "rational_conjugate": [
            [rational_str(e) for e in row] for row in report.rational_conjugate
        ],
    }, {}


def _cmd_filtrations(args):
    r, L = _resolve_order(args)
    return L, {
        "order": r,
        "weight": _filtration_json(weight_filtration(r)),
        "hodge": _filtration_json(limiting_hodge_filtration(r)),
    }, {}


def _cmd_limit(args):
    L = _operator(args)
    m = normalize_symbol(parse_expression(args.symbol), L.r)
    vec = limit_functional(m)
    return L, {"coords": [rational_str(c) for c in vec]}, {}


def _cmd_functional(args):
    L = _operator(args)
    m = normalize_symbol(parse_expression(args.symbol), L.r)
    cfg = _config(args)
    basis = standard_basis(L, args.nmax)
    z = _parse_z(args.z)
    plain = functional_at_z(m, z, basis, cfg)
    twisted = twisted_functional_at_z(m, z, basis, cfg)
    result = {
        "z": _complex_json(z, args.precision),
        "pi_z": [_complex_json(c, args.precision) for c in plain],
        "pi_prime_z": [_complex_json(c, args.precision) for c in twisted],
    }
    try:
        result["limit"] = [rational_str(c) for c in limit_functional(m)]
    except MumlimError:
        result["limit"] = None
    return L, result, {}


def _cmd_eval(args):
    L = _operator(args)
    cfg = _config(args)
    basis = standard_basis(L, args.nmax)
    with workprec(args.precision):
        t = mpf(args.t)
    res = eval_phi(basis, args.k, t, cfg)
    return L, {
        "k": args.k,
        "t": args.t,
        "value": _complex_json(res.value, args.precision),
    }, {"phi": _real_str(res.tail_estimate, args.precision)}


# ---------------------------------------------------------------------------
# verification suites


def _suite_hypergeom_identity(args, cfg):
    tol = mpf(args.tolerance) if args.tolerance else mpf("1e-20")
    ts = args.t or ["0.3", "0.5"]
    basis = legendre_basis(cfg.n_max)
    rows = []
    tails = {}
    for ts_i in ts:
        with workprec(cfg.precision):
            t = mpf(ts_i)
        resid = verify_identity_hg(t, cfg, basis)
        rows.append(
            {
                "t": ts_i,
                "residual": _real_str(resid, cfg.precision),
                "ok": bool(resid < tol),
            }
        )
        tails[ts_i] = _real_str(
            eval_phi(basis, 0, t, cfg).tail_estimate, cfg.precision
        )
    return {
        "suite": "hypergeom-identity",
        "tolerance": _real_str(tol, cfg.precision),
        "cases": rows,
        "ok": all(row["ok"] for row in rows),
    }, tails


def _suite_legendre(args, cfg):
    tol = mpf(args.tolerance) if args.tolerance else mpf("1e-8")
    ts = args.t or ["0.25", "0.5"]
    basis = legendre_basis(cfg.n_max)
    rows = []
    for ts_i in ts:
        with workprec(cfg.precision + 32):
            t = mpf(ts_i)
            first = legendre_period_first(t, cfg)
            second = legendre_period_second(t, cfg)
            phi0 = eval_phi(basis, 0, t, cfg).value
            phi1 = eval_phi(basis, 1, t, cfg).value
            err1 = abs(first.value - mp.pi * phi0)
            expected2 = -4j * mp.log(2) * phi0 + 1j * phi1
            err2 = abs(second.value - expected2)
            firstc = legendre_period_first(1 - t, cfg)
            err3 = abs(second.value - mpc(0, -1) * firstc.value)
        rows.append(
            {
                "t": ts_i,
                "first_vs_series": _real_str(err1, cfg.precision),
                "second_vs_series": _real_str(err2, cfg.precision),
                "second_vs_first_reflected": _real_str(err3, cfg.precision),
                "ok": bool(err1 < tol and err2 < tol and err3 < tol),
            }
        )
    return {
        "suite": "legendre",
        "tolerance": _real_str(tol, cfg.precision),
        "cases": rows,
        "ok": all(row["ok"] for row in rows),
    }, {}


def _suite_pi_series(args, cfg):
    tol = mpf(args.tolerance) if args.tolerance else mpf("1e-3")
    partials, uncertainty = pi_series_partial_sums(args.terms, cfg)
    with workprec(cfg.precision):
        err = abs(mp.pi - partials[-1])
        monotone = all(a < b for a, b in zip(partials, partials[1:]))
    return {
        "suite": "pi-series",
        "terms": args.terms,
        "partial_sum": _real_str(partials[-1], cfg.precision),
        "error": _real_str(err, cfg.precision),
        "inner_tail_uncertainty": _real_str(uncertainty, cfg.precision),
        "monotone": bool(monotone),
        "tolerance": _real_str(tol, cfg.precision),
        "ok": bool(monotone and err < tol),
    }, {}


def _suite_mhs_checks(args, cfg):
    orders = [args.order] if args.order else list(range(1, 9))
    rows = []
    for r in orders:
        rep = mhs_checks(r)
        rows.append(
            {
                "order": r,
                "opposite": rep.opposite_ok,
                "graded_dims": rep.graded_dims,
                "graded": rep.graded_ok,
                "weight_image": rep.weight_image_ok,
                "n_lowers_weight": rep.n_lowers_weight_ok,
                "rational_conjugate": rep.rational_conjugate_ok,
                "ok": rep.all_ok,
            }
        )
    return {
        "suite": "mhs-checks",
        "cases": rows,
        "ok": all(row["ok"] for row in rows),
    }, {}


def random_symbol(r, rng) -> SymbolM:
    """Small random symbol analytic at 0 with genuine t-dependence."""
    coeffs = []
    for _ in range(r):
        a = rng.randint(-3, 3)
        b = rng.choice([-2, -1, 1, 2])
        d = rng.choice([2, 3, 4])
        # (a + b t) / (1 + t/d): analytic at 0, pole well outside |t| < 1
        num = Poly((a, b))
        den = Poly((1, rng.choice([-1, 1]) * 1)) if d == 2 else Poly((d, 1))
        coeffs.append(RationalFunction(num, den))
    return SymbolM(tuple(coeffs))


def _suite_periodicity(args, cfg):
    tol = mpf(args.tolerance) if args.tolerance else mpf("1e-20")
    L = _operator(args, default=legendre_picard_fuchs())
    basis = standard_basis(L, cfg.n_max)
    rng = random.Random(args.seed)
    rows = []
    for i in range(5):
        m = random_symbol(L.r, rng)
        lim = limit_functional(m)
        with workprec(cfg.precision + 32):
            z3 = mpc(mpf("0.3"), 3)
            a = twisted_functional_at_z(m, z3, basis, cfg)
            b = twisted_functional_at_z(m, z3 + 1, basis, cfg)
            period_gap = max(abs(x - y) for x, y in zip(a, b))
            errs = {}
            for im in (3, 5, 10):
                z = mpc(mpf("0.3"), im)
                tw = twisted_functional_at_z(m, z, basis, cfg)
                from .neval import to_mp

                errs[im] = max(abs(x - to_mp(y)) for x, y in zip(tw, lim))
            decay_ok = errs[3] > 2 * errs[5] and errs[5] > 2 * errs[10]
        rows.append(
            {
                "symbol": i,
                "periodicity_gap": _real_str(period_gap, cfg.precision),
                "limit_error_im10": _real_str(errs[10], cfg.precision),
                "decay": {str(im): _real_str(errs[im], cfg.precision) for im in errs},
                "ok": bool(period_gap < tol and errs[10] < tol and decay_ok),
            }
        )
    return {
        "suite": "periodicity",
        "seed": args.seed,
        "cases": rows,
        "ok": all(row["ok"] for row in rows),
    }, {}


_SUITES = {
    "hypergeom-identity": _suite_hypergeom_identity,
    "legendre": _suite_legendre,
    "pi-series": _suite_pi_series,
    "mhs-checks": _suite_mhs_checks,
    "periodicity": _suite_periodicity,
}


def _cmd_verify(args):
    cfg = _config(args)
    result, tails = _SUITES[args.suite](args, cfg)
    L = None
    return L, result, tails


# ---------------------------------------------------------------------------
# entry point


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mumlim",
        description="Frobenius bases, monodromy filtrations and period checks "
        "for theta-form operators with a maximally unipotent singularity at t=0",
    )
    parser.add_argument("--version", action="version", version=f"mumlim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="standard basis series f_0..f_{r-1}")
    _add_common(p, op_required=True)

    p = sub.add_parser("indicial", help="indicial polynomial and MUM test")
    _add_common(p, op_required=True)

    p = sub.add_parser("monodromy", help="gamma, log(gamma), rational conjugate")
    _add_common(p)
    p.add_argument("--order", type=int, default=None, help="order r (instead of --op)")

    p = sub.add_parser("filtrations", help="weight and limiting Hodge filtrations")
    _add_common(p)
    p.add_argument("--order", type=int, default=None, help="order r (instead of --op)")

    p = sub.add_parser("limit", help="limit of the functional family of a symbol")
    _add_common(p, op_required=True, symbol=True)

    p = sub.add_parser("functional", help="pi_z and pi'_z coordinates at a point z")
    _add_common(p, op_required=True, symbol=True)
    p.add_argument("--z", required=True, help="evaluation point as 're,im'")

    p = sub.add_parser("eval", help="evaluate phi_k at a point t")
    _add_common(p, op_required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", required=True)

    p = sub.add_parser("verify", help="named verification suites")
    _add_common(p)
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    p.add_argument("--t", action="append", default=None, help="evaluation point(s)")
    p.add_argument("--terms", type=int, default=50, help="pi-series term count")
    p.add_argument("--order", type=int, default=None, help="mhs-checks order")
    p.add_argument("--seed", type=int, default=0, help="periodicity suite seed")

    return parser


_COMMANDS = {
    "solve": _cmd_solve,
    "indicial": _cmd_indicial,
    "monodromy": _cmd_monodromy,
    "filtrations": _cmd_filtrations,
    "limit": _cmd_limit,
    "functional": _cmd_functional,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        L, result, tails = _COMMANDS[args.command](args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MumlimError as exc:
        doc = {
            "command": args.command,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        _emit(doc, getattr(args, "out", None))
        return 1
    diagnostics = {"tail_estimates": tails}
    if args.timings:
        diagnostics["timings"] = {
            "total_seconds": round(time.perf_counter() - started, 6),
            "backend": backend_name(),
        }
    doc = {
        "command": args.command,
        "operator": _operator_json(L),
        "result": result,
        "diagnostics": diagnostics,
    }
    _emit(doc, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
