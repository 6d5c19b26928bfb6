from fractions import Fraction

import pytest

from mumlim.rationals import QQ
from mumlim.poly import Poly
from mumlim.ratfunc import RationalFunction, RF_ZERO
from mumlim.series import TruncatedSeries
from mumlim.operators import ThetaOperator, legendre_picard_fuchs
from mumlim.solver import (
    check_mum,
    is_mum,
    indicial_polynomial,
    standard_basis,
    residual,
    StandardBasis,
    LogSeries,
)
from mumlim.errors import NotMaximallyUnipotent, PoleAtZero


def _not_mum_operator():
    # theta^2 - (1/4)/(1-t): q_2(0) = -1/4
    q2 = RationalFunction(Poly([QQ(-1, 4)]), Poly([QQ(1), QQ(-1)]))
    return ThetaOperator(2, (RF_ZERO, q2))


def _pole_operator():
    # theta + 1/t
    return ThetaOperator(1, (RationalFunction(Poly([QQ(1)]), Poly([0, QQ(1)])),))


def test_check_mum_accepts_legendre():
    check_mum(legendre_picard_fuchs())
    assert is_mum(legendre_picard_fuchs())


def test_check_mum_reports_nonzero_value():
    with pytest.raises(NotMaximallyUnipotent) as exc:
        check_mum(_not_mum_operator())
    assert exc.value.failures == [(2, "nonzero", QQ(-1, 4))]
    # diagnostics include the indicial polynomial rho^2 - 1/4
    assert exc.value.indicial == Poly([QQ(-1, 4), 0, QQ(1)])


def test_check_mum_reports_pole():
    with pytest.raises(NotMaximallyUnipotent) as exc:
        check_mum(_pole_operator())
    assert exc.value.failures == [(1, "pole", None)]
    assert exc.value.indicial is None


def test_indicial_polynomial():
    assert indicial_polynomial(legendre_picard_fuchs()) == Poly([0, 0, QQ(1)])
    assert indicial_polynomial(_not_mum_operator()) == Poly([QQ(-1, 4), 0, QQ(1)])
    assert indicial_polynomial(ThetaOperator.theta_power(3)) == Poly([0, 0, 0, QQ(1)])
    with pytest.raises(PoleAtZero):
        indicial_polynomial(_pole_operator())


def test_theta_power_basis():
    for r in (1, 2, 4):
        basis = standard_basis(ThetaOperator.theta_power(r), 30)
        assert basis.f[0] == TruncatedSeries.one(30)
        assert all(fj.is_zero() for fj in basis.f[1:])


# --- golden values for the Legendre operator ---------------------------
#
# Closed forms: f_0 has coefficients ((1/2)_n / n!)^2 and f_1 has
# ((1/2)_n / n!)^2 * sum_{k<=n} 1/(k(k-1/2)); frozen here through an
# independent Fraction computation.


def _pochhammer_half_sq(nmax):
    c = [Fraction(1)]
    for n in range(1, nmax + 1):
        c.append(c[-1] * Fraction((2 * n - 1) ** 2, 4 * n**2))
    return c


def _legendre_f1_closed_form(nmax):
    c = _pochhammer_half_sq(nmax)
    h = Fraction(0)
    out = [Fraction(0)]
    for n in range(1, nmax + 1):
        h += Fraction(1) / (Fraction(n) * (n - Fraction(1, 2)))
        out.append(c[n] * h)
    return out


def test_legendre_golden_coefficients():
    basis = standard_basis(legendre_picard_fuchs(), 40)
    f0, f1 = basis.f

    assert [f0.coeff(n) for n in range(5)] == [
        QQ(1),
        QQ(1, 4),
        QQ(9, 64),
        QQ(25, 256),
        QQ(1225, 16384),
    ]
    assert f1.coeff(1) == QQ(1, 2)
    assert f1.coeff(2) == QQ(21, 64)

    closed0 = _pochhammer_half_sq(40)
    closed1 = _legendre_f1_closed_form(40)
    for n in range(41):
        assert f0.coeff(n) == QQ(closed0[n])
        assert f1.coeff(n) == QQ(closed1[n])


def test_normalization_is_forced(mum_corpus):
    for L in mum_corpus:
        basis = standard_basis(L, 12)
        assert basis.f[0].value_at_zero() == QQ(1)
        assert all(fj.value_at_zero() == QQ(0) for fj in basis.f[1:])


def test_residual_vanishes_on_corpus(mum_corpus):
    for L in mum_corpus:
        basis = standard_basis(L, 60)
        for k in range(L.r):
            assert residual(L, basis, k).is_zero(), (L, k)


def test_theta_squared_log_solution():
    # theta^2 annihilates log t: residual of phi_1 is identically zero
    L = ThetaOperator.theta_power(2)
    basis = standard_basis(L, 20)
    assert residual(L, basis, 1).is_zero()


def test_perturbed_basis_has_nonzero_residual():
    L = legendre_picard_fuchs()
    basis = standard_basis(L, 30)
    bumped = list(basis.f[1].c)
    bumped[7] += QQ(1, 3)
    broken = StandardBasis(2, 30, (basis.f[0], TruncatedSeries(30, bumped)))
    assert not residual(L, broken, 1).is_zero()
    # f_0 untouched, so phi_0 still solves
    assert residual(L, broken, 0).is_zero()


def test_rerun_is_bit_identical(mum_corpus):
    for L in mum_corpus[:6]:
        assert standard_basis(L, 25) == standard_basis(L, 25)


def test_truncation_stability(mum_corpus):
    for L in mum_corpus[:8]:
        short = standard_basis(L, 20)
        long = standard_basis(L, 40)
        for fs, fl in zip(short.f, long.f):
            assert fs.c == fl.c[:21]


def test_order_one_degenerate_case():
    # r = 1: basis is just f_0; t/(1+t) makes it nontrivial
    q1 = RationalFunction(Poly([0, QQ(1)]), Poly([QQ(1), QQ(1)]))
    L = ThetaOperator(1, (q1,))
    basis = standard_basis(L, 15)
    assert basis.r == 1
    assert residual(L, basis, 0).is_zero()


def test_solver_requires_mum():
    with pytest.raises(NotMaximallyUnipotent):
        standard_basis(_not_mum_operator(), 10)


def test_log_series_theta_rule():
    # theta(log t) = 1: components (0, 1) -> (1, 0)
    zero = TruncatedSeries.zero(5)
    one = TruncatedSeries.one(5)
    log_t = LogSeries((zero, one))
    assert log_t.theta() == LogSeries((one, zero))
