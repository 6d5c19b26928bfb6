import pytest

from mumlim.rationals import QQ
from mumlim.poly import Poly
from mumlim.monodromy import (
    TAU,
    monodromy_matrix,
    identity_matrix,
    mat_mul,
    mat_sub,
    mat_pow,
    mat_is_zero,
    mat_scale,
    mat_add,
    is_unipotent,
    log_monodromy,
    exp_nilpotent,
    dual_matrix,
    tau_rescaled,
    weight_filtration,
    limiting_hodge_filtration,
    matrix_rank,
    column_span_indices,
    mhs_checks,
)
from mumlim.errors import NonUnipotent


def C(x):
    return Poly.const(x)


def test_monodromy_matrix_small_orders():
    assert monodromy_matrix(1) == ((C(1),),)
    g2 = monodromy_matrix(2)
    assert g2 == ((C(1), TAU), (Poly(), C(1)))
    g3 = monodromy_matrix(3)
    half_tau_sq = Poly((0, 0, QQ(1, 2)))
    assert g3[0] == (C(1), TAU, half_tau_sq)
    assert g3[1] == (Poly(), C(1), TAU)
    assert g3[2] == (Poly(), Poly(), C(1))


def test_log_of_single_block():
    N = log_monodromy(monodromy_matrix(2))
    assert N == ((Poly(), TAU), (Poly(), Poly()))
    assert mat_is_zero(log_monodromy(identity_matrix(3)))


def _exp_series_oracle(N):
    """Independent exponential: plain sum N^h/h! with its own loop."""
    r = len(N)
    out = identity_matrix(r)
    term = identity_matrix(r)
    fact = 1
    for h in range(1, r + 2):
        term = mat_mul(term, N)
        if mat_is_zero(term):
            break
        fact *= h
        out = mat_add(out, mat_scale(term, QQ(1, fact)))
    return out


@pytest.mark.parametrize("r", range(1, 9))
def test_exp_log_roundtrip_exact(r):
    gamma = monodromy_matrix(r)
    N = log_monodromy(gamma)
    assert exp_nilpotent(N) == gamma
    assert _exp_series_oracle(N) == gamma
    # N is tau times the shift matrix
    for i in range(r):
        for j in range(r):
            assert N[i][j] == (TAU if j == i + 1 else Poly())


@pytest.mark.parametrize("r", range(1, 9))
def test_maximal_unipotency(r):
    gamma = monodromy_matrix(r)
    X = mat_sub(gamma, identity_matrix(r))
    assert mat_is_zero(mat_pow(X, r))
    if r > 1:
        assert not mat_is_zero(mat_pow(X, r - 1))
    ok, index = is_unipotent(gamma)
    assert ok and index == r


def test_non_unipotent_rejected():
    bad = ((C(2), Poly()), (Poly(), C(1)))
    with pytest.raises(NonUnipotent):
        log_monodromy(bad)


def test_tau_rescaled_rational():
    conj = tau_rescaled(monodromy_matrix(2))
    assert conj == ((QQ(1), QQ(1)), (QQ(0), QQ(1)))
    conj3 = tau_rescaled(monodromy_matrix(3))
    assert conj3[0] == (QQ(1), QQ(1), QQ(1, 2))
    with pytest.raises(ValueError):
        tau_rescaled(((C(1), C(1)), (Poly(), C(1))))  # entry not tau-graded


def test_weight_filtration_shapes():
    w1 = weight_filtration(1)
    assert w1.labels() == [-1, 0]
    assert w1.dims() == [0, 1]

    w2 = weight_filtration(2)
    assert w2.dims() == [0, 1, 1, 2]
    assert w2.subspace(0) == frozenset({1})
    assert w2.subspace(1) == frozenset({1})
    assert w2.subspace(2) == frozenset({0, 1})

    w3 = weight_filtration(3)
    assert w3.labels() == [-1, 0, 1, 2, 3, 4]
    assert w3.dims() == [0, 1, 1, 2, 2, 3]
    # clamping outside the stored labels
    assert w3.subspace(-5) == frozenset()
    assert w3.subspace(99) == frozenset(range(3))


def test_hodge_filtration_shapes():
    f1 = limiting_hodge_filtration(1)
    assert f1.dims() == [1]

    f2 = limiting_hodge_filtration(2)
    assert f2.subspace(0) == frozenset({0, 1})
    assert f2.subspace(1) == frozenset({0})
    assert f2.subspace(2) == frozenset()

    f3 = limiting_hodge_filtration(3)
    assert f3.dims() == [3, 2, 1]
    assert f3.subspace(-1) == frozenset({0, 1, 2})


@pytest.mark.parametrize("r", range(1, 7))
def test_weight_steps_match_dual_nilpotent_images(r):
    N = dual_matrix(log_monodromy(monodromy_matrix(r)))
    W = weight_filtration(r)
    for k in range(r):
        P = mat_pow(N, r - 1 - k)
        support, rank = column_span_indices(P)
        assert support == W.subspace(2 * k)
        assert rank == len(support)


def test_matrix_rank_over_fraction_field():
    A = ((TAU, Poly()), (Poly(), Poly((0, 0, QQ(3)))))
    assert matrix_rank(A) == 2
    B = ((TAU, TAU), (TAU, TAU))
    assert matrix_rank(B) == 1
    assert matrix_rank(((Poly(), Poly()), (Poly(), Poly()))) == 0


@pytest.mark.parametrize("r", range(1, 9))
def test_mhs_checks_pass(r):
    report = mhs_checks(r)
    assert report.all_ok
    assert report.graded_dims == [1 if m % 2 == 0 else 0 for m in range(2 * r - 1)]
    for k, w, f, ok in report.opposite_detail:
        assert ok
        assert len(w) + len(f) == r


def test_mhs_report_conjugate_entries():
    report = mhs_checks(2)
    assert report.rational_conjugate == ((QQ(1), QQ(1)), (QQ(0), QQ(1)))
