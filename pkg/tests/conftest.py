import random

import pytest

from mumlim.poly import Poly
from mumlim.ratfunc import RationalFunction
from mumlim.operators import ThetaOperator, legendre_picard_fuchs


def random_mum_operator(rng, order=None, max_order=4):
    """Random operator with q_j(0) = 0 and small rational coefficients."""
    r = order if order else rng.randint(1, max_order)
    qs = []
    for _ in range(r):
        num = Poly((0, rng.randint(-3, 3), rng.randint(-2, 2)))
        den = Poly((1, rng.randint(-2, 2)))
        qs.append(RationalFunction(num, den))
    return ThetaOperator(r, qs)


@pytest.fixture(scope="session")
def legendre_op():
    return legendre_picard_fuchs()


@pytest.fixture(scope="session")
def mum_corpus():
    """theta^r for r <= 5, the Legendre operator, and 10 seeded random ones."""
    rng = random.Random(20260810)
    ops = [ThetaOperator.theta_power(r) for r in range(1, 6)]
    ops.append(legendre_picard_fuchs())
    ops.extend(random_mum_operator(rng) for _ in range(10))
    return ops
