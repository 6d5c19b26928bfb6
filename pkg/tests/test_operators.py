import random

import pytest

from mumlim.rationals import QQ
from mumlim.poly import Poly
from mumlim.ratfunc import RationalFunction, RF_ZERO
from mumlim.series import TruncatedSeries
from mumlim.operators import (
    ThetaOperator,
    theta_to_tpoly,
    op_theta_derivative,
    apply_operator,
    legendre_picard_fuchs,
)
from mumlim.errors import PoleAtZero

from conftest import random_mum_operator


def test_theta_power_regrading():
    Lt = theta_to_tpoly(ThetaOperator.theta_power(2), 8)
    assert Lt.p[0] == Poly([0, 0, QQ(1)])
    assert all(pj.is_zero() for pj in Lt.p[1:])
    assert Lt.is_mum_graded()


def test_legendre_regrading():
    # q-expansions are geometric, so every p_j for j >= 1 is -theta - 1/4
    Lt = theta_to_tpoly(legendre_picard_fuchs(), 12)
    assert Lt.p[0] == Poly([0, 0, QQ(1)])
    expected = Poly([QQ(-1, 4), QQ(-1)])
    assert all(pj == expected for pj in Lt.p[1:])


def test_regrading_pole_rejected():
    L = ThetaOperator(1, (RationalFunction(Poly([QQ(1)]), Poly([0, QQ(1)])),))
    with pytest.raises(PoleAtZero):
        theta_to_tpoly(L, 5)


def test_theta_derivative_of_tpoly():
    Lt = theta_to_tpoly(ThetaOperator.theta_power(2), 5)
    D1 = op_theta_derivative(Lt, 1)
    assert D1.r == 1
    assert D1.p[0] == Poly([0, QQ(2)])

    Lh = theta_to_tpoly(legendre_picard_fuchs(), 5)
    D1h = op_theta_derivative(Lh, 1)
    assert D1h.p[0] == Poly([0, QQ(2)])
    assert all(pj == Poly([QQ(-1)]) for pj in D1h.p[1:])

    # top derivative is the constant r!
    D2h = op_theta_derivative(Lh, 2)
    assert D2h.p[0] == Poly([QQ(2)])
    assert all(pj.is_zero() for pj in D2h.p[1:])


def test_apply_theta_squared():
    Lt = theta_to_tpoly(ThetaOperator.theta_power(2), 6)
    t = TruncatedSeries.monomial(6, 1)
    assert apply_operator(Lt, t) == t
    assert apply_operator(Lt, TruncatedSeries.zero(6)).is_zero()


def _legendre_f0_by_recurrence(nmax):
    """Independent route: n^2 a_n = sum_{m<n} (m + 1/4) a_m, a_0 = 1.

    Comes from clearing 1-t in the operator, with no p_j tables involved.
    """
    a = [QQ(1)]
    acc = QQ(1, 4)  # running sum of (m + 1/4) a_m
    for n in range(1, nmax + 1):
        a.append(acc / n**2)
        acc += (QQ(n) + QQ(1, 4)) * a[n]
    return TruncatedSeries(nmax, a)


def test_legendre_annihilates_its_solution():
    nmax = 60
    f0 = _legendre_f0_by_recurrence(nmax)
    Lt = theta_to_tpoly(legendre_picard_fuchs(), nmax)
    assert apply_operator(Lt, f0).is_zero()


def test_regrade_roundtrip_against_series_route(mum_corpus):
    """Applying sum t^j p_j(theta) must equal applying through the q_j."""
    rng = random.Random(3)
    nmax = 24
    for L in mum_corpus[:8]:
        f = TruncatedSeries(
            nmax, [QQ(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(nmax + 1)]
        )
        Lt = theta_to_tpoly(L, nmax)
        got = apply_operator(Lt, f)

        powers = [f]
        for _ in range(L.r):
            powers.append(powers[-1].theta())
        expected = powers[L.r]
        for j in range(1, L.r + 1):
            if not L.q[j - 1].is_zero():
                expected = expected + powers[L.r - j].mul_ratfunc(L.q[j - 1])
        assert got == expected


def test_mum_iff_p0_is_theta_power(mum_corpus):
    for L in mum_corpus:
        assert theta_to_tpoly(L, 6).is_mum_graded()
    not_mum = ThetaOperator(
        2, (RF_ZERO, RationalFunction(Poly([QQ(-1, 4)]), Poly([QQ(1), QQ(-1)])))
    )
    assert not theta_to_tpoly(not_mum, 6).is_mum_graded()


def test_random_operator_shapes():
    rng = random.Random(11)
    for _ in range(20):
        L = random_mum_operator(rng)
        assert 1 <= L.r <= 4
        assert all(q.has_pole_at_zero() is False for q in L.q)
        assert all(q.value_at_zero() == QQ(0) for q in L.q)
