"""Local monodromy, its logarithm, and the two filtrations, all exact.

Matrices live over Q[tau] where tau is a formal stand-in for 2*pi*i; only
the numeric layer ever substitutes a value. Coordinates are taken in the
standard solution basis phi_0..phi_{r-1} (for gamma, N) or its dual basis
(for the filtrations), so subspaces here are plain index sets.
"""

from dataclasses import dataclass, field

from .rationals import QQ, ZERO, ONE
from .poly import Poly
from .ratfunc import RationalFunction
from .errors import NonUnipotent

# FormalScalar: a polynomial in tau over Q.
FormalScalar = Poly

TAU = Poly((ZERO, ONE))


def formal_str(x: Poly) -> str:
    return x.to_string("tau")


# ---------------------------------------------------------------------------
# matrices over Q[tau]


def identity_matrix(r):
    return tuple(
        tuple(Poly.const(1) if i == j else Poly() for j in range(r)) for i in range(r)
    )


def zero_matrix(r):
    return tuple(tuple(Poly() for _ in range(r)) for _ in range(r))


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, s):
    s = QQ(s)
    return tuple(tuple(a.scale(s) for a in ra) for ra in A)


def mat_mul(A, B):
    r = len(A)
    cols = len(B[0])
    inner = len(B)
    out = []
    for i in range(r):
        row = []
        for j in range(cols):
            acc = Poly()
            for k in range(inner):
                a = A[i][k]
                b = B[k][j]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_pow(A, n):
    out = identity_matrix(len(A))
    for _ in range(n):
        out = mat_mul(out, A)
    return out


def mat_is_zero(A):
    return all(not a for row in A for a in row)


def mat_transpose(A):
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in range(len(A[0])))


# ---------------------------------------------------------------------------
# gamma and N


def monodromy_matrix(r):
    """gamma in the standard basis: entry (i, j) = tau^(j-i) / (j-i)! above
    the diagonal, 1 on it, 0 below — the exponential of tau times the shift."""
    if r < 1:
        raise ValueError("order must be >= 1")
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            if j < i:
                row.append(Poly())
            else:
                k = j - i
                fact = 1
                for m in range(2, k + 1):
                    fact *= m
                row.append(Poly.monomial(QQ(1, fact), k))
        out.append(tuple(row))
    return tuple(out)


def is_unipotent(A, r=None):
    """(A - I)^r = 0 for r = dim; returns the nilpotency index as a bonus."""
    n = len(A)
    X = mat_sub(A, identity_matrix(n))
    P = identity_matrix(n)
    for h in range(1, n + 1):
        P = mat_mul(P, X)
        if mat_is_zero(P):
            return True, h
    return False, None


def log_monodromy(gamma):
    """N = log(gamma) = sum_{h>=1} (-1)^(h-1) (gamma - I)^h / h, a finite sum
    for unipotent gamma. Raises NonUnipotent when (gamma - I)^r != 0."""
    r = len(gamma)
    ok, _ = is_unipotent(gamma)
    if not ok:
        raise NonUnipotent(f"(gamma - I)^{r} is nonzero")
    X = mat_sub(gamma, identity_matrix(r))
    out = zero_matrix(r)
    P = identity_matrix(r)
    sign = 1
    for h in range(1, r + 1):
        P = mat_mul(P, X)
        if mat_is_zero(P):
            break
        out = mat_add(out, mat_scale(P, QQ(sign, h)))
        sign = -sign
    return out


def exp_nilpotent(N):
    """exp(N) = sum_h N^h / h! for nilpotent N; raises on non-nilpotent input."""
    r = len(N)
    out = identity_matrix(r)
    P = identity_matrix(r)
    fact = 1
    for h in range(1, r + 1):
        P = mat_mul(P, N)
        if mat_is_zero(P):
            return out
        fact *= h
        out = mat_add(out, mat_scale(P, QQ(1, fact)))
    # an r x r nilpotent has index <= r, so surviving the loop means non-nilpotent
    raise ValueError("matrix is not nilpotent")


def dual_matrix(A):
    """Matrix of the induced action on dual coordinates: pi -> pi o A."""
    return mat_transpose(A)


def tau_rescaled(gamma):
    """gamma in the basis tau^(-k) phi_k; entries must come out rational.

    Entry (i, j) is gamma_ij * tau^(i-j), which is a number exactly when
    gamma_ij is a rational multiple of tau^(j-i). Returns the QQ matrix,
    raising ValueError otherwise.
    """
    r = len(gamma)
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            entry = gamma[i][j]
            if entry.is_zero():
                row.append(ZERO)
                continue
            if j < i or entry.degree() != j - i or any(entry.c[: j - i]):
                raise ValueError(
                    f"entry ({i},{j}) = {formal_str(entry)} is not a rational "
                    f"multiple of tau^{j - i}"
                )
            row.append(entry.c[j - i])
        out.append(tuple(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# filtrations as index sets over the dual basis


@dataclass(frozen=True)
class Filtration:
    """Nested coordinate subspaces of the dual solution space.

    steps maps each integer label to a frozenset of dual-basis indices;
    direction is "increasing" (weight) or "decreasing" (Hodge). Labels
    outside the stored range clamp to the empty set / full space.
    """

    direction: str
    dimension: int
    steps: tuple  # ordered tuple of (label, frozenset)

    def __post_init__(self):
        sets = [s for _, s in self.steps]
        for a, b in zip(sets, sets[1:]):
            small, large = (a, b) if self.direction == "increasing" else (b, a)
            if not small <= large:
                raise ValueError("filtration steps are not nested")

    def labels(self):
        return [lab for lab, _ in self.steps]

    def subspace(self, label) -> frozenset:
        labs = self.labels()
        full = frozenset(range(self.dimension))
        if self.direction == "increasing":
            if label < labs[0]:
                return frozenset()
            for lab, s in reversed(self.steps):
                if label >= lab:
                    return s
            return frozenset()
        if label <= labs[0]:
            return full
        for lab, s in self.steps:
            if label <= lab:
                return s
        return frozenset()

    def dims(self):
        return [len(s) for _, s in self.steps]


def weight_filtration(r) -> Filtration:
    """W_{2k} = W_{2k+1} = span(phi_{r-1-k}^v, ..., phi_{r-1}^v), W_{-1} = 0.

    This is the Jacobson filtration of N = log(gamma), shifted by r-1; for
    one Jordan block W_{2k} is exactly the image of N^(r-1-k) on the dual.
    """
    steps = [(-1, frozenset())]
    for w in range(2 * r - 1):
        k = w // 2
        steps.append((w, frozenset(range(r - 1 - k, r))))
    return Filtration("increasing", r, tuple(steps))


def limiting_hodge_filtration(r) -> Filtration:
    """F^p = span(phi_0^v, ..., phi_{r-1-p}^v) for 0 <= p <= r-1."""
    steps = [(p, frozenset(range(r - p))) for p in range(r)]
    return Filtration("decreasing", r, tuple(steps))


# ---------------------------------------------------------------------------
# exact linear algebra over Q(tau), used to cross-check the index sets


def _rf(p: Poly) -> RationalFunction:
    return RationalFunction(p)


def matrix_rank(A):
    """Rank over the fraction field Q(tau) by Gaussian elimination."""
    rows = [[_rf(a) for a in row] for row in A]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        pivot = next((i for i in range(rank, nrows) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col]
        for i in range(rank + 1, nrows):
            if rows[i][col]:
                factor = rows[i][col] / inv
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def column_span_indices(A):
    """Row-support of the column space, assuming it is a coordinate subspace.

    Returns (indices, rank); the span equals span(e_i : i in indices) iff
    rank == len(indices), which the caller should assert.
    """
    support = frozenset(
        i for i in range(len(A)) if any(A[i][j] for j in range(len(A[0])))
    )
    return support, matrix_rank(A)


# ---------------------------------------------------------------------------
# mixed-Hodge-structure consistency report


@dataclass
class MHSReport:
    r: int
    opposite_ok: bool
    opposite_detail: list = field(default_factory=list)
    graded_ok: bool = True
    graded_dims: list = field(default_factory=list)
    weight_image_ok: bool = True
    n_lowers_weight_ok: bool = True
    rational_conjugate_ok: bool = True
    rational_conjugate: tuple = ()

    @property
    def all_ok(self):
        return (
            self.opposite_ok
            and self.graded_ok
            and self.weight_image_ok
            and self.n_lowers_weight_ok
            and self.rational_conjugate_ok
        )


def mhs_checks(r) -> MHSReport:
    """Exact consistency checks for the limiting mixed Hodge structure.

    (a) W_{2k} and F^{k+1} are complementary for every k (the filtrations
        are opposite); (b) the weight-graded dimensions are 1, 0, 1, 0, ...;
    (c) W_{2k} equals the column space of N^(r-1-k) on the dual and N drops
        the weight by 2; (d) gamma rescaled by diag(tau^k) is rational.
    Failures are recorded in the report, never raised.
    """
    gamma = monodromy_matrix(r)
    N = log_monodromy(gamma)
    Nd = dual_matrix(N)
    W = weight_filtration(r)
    F = limiting_hodge_filtration(r)
    report = MHSReport(r=r, opposite_ok=True)

    for k in range(r):
        w = W.subspace(2 * k)
        f = F.subspace(k + 1)
        ok = not (w & f) and len(w) + len(f) == r
        report.opposite_detail.append((k, sorted(w), sorted(f), ok))
        if not ok:
            report.opposite_ok = False

    dims = []
    for m in range(-1, 2 * r - 1):
        dims.append(len(W.subspace(m)))
    graded = [dims[i + 1] - dims[i] for i in range(len(dims) - 1)]  # gr at 0..2r-2
    report.graded_dims = graded
    expected = [1 if m % 2 == 0 else 0 for m in range(2 * r - 1)]
    report.graded_ok = graded == expected

    # W_{2k} as the exact column space of N^(r-1-k) on the dual side
    for k in range(r):
        P = mat_pow(Nd, r - 1 - k)
        support, rank = column_span_indices(P)
        if support != W.subspace(2 * k) or rank != len(support):
            report.weight_image_ok = False

    # N * W_{2k} inside W_{2k-2}: columns of Nd restricted to W_{2k} must be
    # supported on W_{2k-2}
    for k in range(r):
        target = W.subspace(2 * k - 2)
        for j in W.subspace(2 * k):
            col_support = {i for i in range(r) if Nd[i][j]}
            if not col_support <= target:
                report.n_lowers_weight_ok = False

    try:
        report.rational_conjugate = tau_rescaled(gamma)
    except ValueError:
        report.rational_conjugate_ok = False
    return report
