import pytest
from mpmath import mp, mpf, mpc, workprec

from mumlim.rationals import QQ
from mumlim.poly import Poly
from mumlim.ratfunc import RationalFunction, RF_ZERO, RF_ONE
from mumlim.operators import ThetaOperator, legendre_picard_fuchs
from mumlim.solver import standard_basis
from mumlim.functionals import (
    SymbolM,
    limit_functional,
    functional_at_z,
    twisted_functional_at_z,
)
from mumlim.neval import EvalConfig, eval_phi_at_z, to_mp
from mumlim.errors import NotAnalyticAtZero, OutOfDisk, PoleInDisk, DegreeOverflow

CFG = EvalConfig()


def _rf(num_coeffs, den_coeffs=(1,)):
    return RationalFunction(Poly([QQ(c) for c in num_coeffs]), Poly([QQ(c) for c in den_coeffs]))


@pytest.fixture(scope="module")
def legendre_basis_200():
    return standard_basis(legendre_picard_fuchs(), 200)


def test_limit_unit_vectors():
    for j in range(3):
        coeffs = [RF_ZERO] * j + [RF_ONE]
        m = SymbolM.from_coeffs(coeffs, 3)
        vec = limit_functional(m)
        assert list(vec) == [QQ(1) if i == j else QQ(0) for i in range(3)]


def test_limit_constant_symbols():
    m = SymbolM((_rf([2]), _rf([-7, 0])))
    assert list(limit_functional(m)) == [QQ(2), QQ(-7)]


def test_limit_depends_only_on_values_at_zero():
    # v and w differ away from 0 but agree at 0
    v = SymbolM((_rf([1, 5]), _rf([0, 3])))
    w = SymbolM((_rf([1, -2], [1, 1]), _rf([0, 6], [2, 1])))
    assert list(limit_functional(v)) == list(limit_functional(w))


def test_limit_rejects_pole():
    m = SymbolM((_rf([1], [0, 1]), _rf([1])))  # v_0 = 1/t
    with pytest.raises(NotAnalyticAtZero) as exc:
        limit_functional(m)
    assert exc.value.index == 0


def test_symbol_degree_overflow():
    with pytest.raises(DegreeOverflow):
        SymbolM.from_coeffs([RF_ONE, RF_ONE, RF_ONE], 2)


# --- theta^r closed forms ----------------------------------------------
#
# For L = theta^r the basis is phi_k(z) = w^k / k! with w = 2 pi i z, so
# pi_z(theta^j)(phi_k) = w^(k-j)/(k-j)! exactly; an independent oracle.


def test_functional_theta_power_closed_form():
    r = 3
    basis = standard_basis(ThetaOperator.theta_power(r), 40)
    for j in range(r):
        m = SymbolM.from_coeffs([RF_ZERO] * j + [RF_ONE], r)
        for z in (mpc("0.2", "2.0"), mpc("-0.4", "3.5")):
            vec = functional_at_z(m, z, basis, CFG)
            with workprec(CFG.precision + 20):
                w = 2j * mp.pi * mpc(z)
                for k in range(r):
                    if k >= j:
                        expected = w ** (k - j) / mp.factorial(k - j)
                    else:
                        expected = mpc(0)
                    assert abs(vec[k] - expected) < mpf(2) ** (-CFG.precision + 16) * (
                        1 + abs(expected)
                    )


def test_evaluation_functional_matches_direct_sum(legendre_basis_200):
    # symbol 1 is evaluation at z; coordinates are phi_k(z) themselves
    m = SymbolM.from_coeffs([RF_ONE], 2)
    z = mpc("0.1", "3.0")
    vec = functional_at_z(m, z, legendre_basis_200, CFG)
    for k in range(2):
        direct = eval_phi_at_z(legendre_basis_200, k, z, CFG).value
        assert abs(vec[k] - direct) < mpf("1e-30")


def test_zero_symbol_gives_zero_vector(legendre_basis_200):
    m = SymbolM.from_coeffs([], 2)
    vec = functional_at_z(m, mpc("0.3", "3.0"), legendre_basis_200, CFG)
    assert all(c == 0 for c in vec)


def test_functional_domain_errors(legendre_basis_200):
    m = SymbolM.from_coeffs([RF_ONE], 2)
    with pytest.raises(OutOfDisk):
        functional_at_z(m, mpc("0.0", "0.01"), legendre_basis_200, CFG)


def test_pole_in_disk_detected(legendre_basis_200):
    # e(z) is exactly real 1/2 when z = i log(2) / (2 pi); v = 1/(t - 1/2)
    m = SymbolM((_rf([1], [QQ(-1, 2), 1]), RF_ZERO))
    cfg = EvalConfig(radius=0.9)
    with workprec(200):
        z = mpc(0, mp.log(2) / (2 * mp.pi))
    with pytest.raises(PoleInDisk):
        functional_at_z(m, z, legendre_basis_200, cfg)


# --- twisted families ---------------------------------------------------


def test_twisted_constants_exact_for_theta_power():
    r = 2
    basis = standard_basis(ThetaOperator.theta_power(r), 30)
    m = SymbolM((_rf([2]), _rf([-3])))
    for z in (mpc("0.2", "2.5"), mpc("1.7", "4.0")):
        vec = twisted_functional_at_z(m, z, basis, CFG)
        assert abs(vec[0] - 2) < mpf("1e-30")
        assert abs(vec[1] + 3) < mpf("1e-30")


def test_twisted_periodicity(legendre_basis_200):
    m = SymbolM((_rf([1, 1], [2, -1]), _rf([0, 1], [3, 1])))
    z = mpc("0.25", "3.0")
    a = twisted_functional_at_z(m, z, legendre_basis_200, CFG)
    b = twisted_functional_at_z(m, z + 1, legendre_basis_200, CFG)
    gap = max(abs(x - y) for x, y in zip(a, b))
    assert gap < mpf("1e-20")


def test_twisted_converges_to_limit(legendre_basis_200):
    m = SymbolM((_rf([1, 1], [2, -1]), _rf([0, 1], [3, 1])))
    lim = limit_functional(m)
    errs = {}
    for im in (3, 5, 10):
        vec = twisted_functional_at_z(m, mpc("0.3", im), legendre_basis_200, CFG)
        errs[im] = max(abs(c - to_mp(l)) for c, l in zip(vec, lim))
    assert errs[10] < mpf("1e-20")
    assert errs[3] > 2 * errs[5] > 4 * errs[10]


def test_twisted_constant_correction_scales_with_t(legendre_basis_200):
    # for nontrivial f the constant-symbol family is off the limit by O(t)
    m = SymbolM((_rf([2]), _rf([-3])))
    z = mpc(0, 3)
    vec = twisted_functional_at_z(m, z, legendre_basis_200, CFG)
    with workprec(160):
        t_mag = mp.exp(-2 * mp.pi * 3)
        gap = abs(vec[0] - 2)
    assert mpf("0.1") * t_mag < gap < 10 * t_mag
