from fractions import Fraction

import pytest

from qmock.mockforms import hurwitz_ideal_series
from qmock.mockforms import ideal_sums
from qmock.quadfield import fundamental_totally_positive_unit
from qmock.quadfield import QuadFieldElem
from qmock.testing import oracles
from qmock.thetaeta import hurwitz_series
from tests.helper import SeriesTest


@pytest.mark.parametrize('d', [6, 2])
def test_generators_against_reduction(d):
    unit = fundamental_totally_positive_unit(d)
    generators = ideal_sums.principal_generators(d, 30)
    expected = oracles.brute_force_ideal_generators(d, unit, 30, 40)
    assert sorted((int(g.a), int(g.b)) for g in generators) == expected
    assert all(g.is_totally_positive() for g in generators)


def test_weights():
    assert ideal_sums.phi6(QuadFieldElem(1, 0, 6)) == -2
    assert ideal_sums.phi6(QuadFieldElem(5, 2, 6)) == -(-10 - 12)
    assert ideal_sums.phi2(QuadFieldElem(1, 0, 2)) == -2
    assert ideal_sums.phi2(QuadFieldElem(2, 1, 2)) == 0


class TestHurwitzIdealSums(SeriesTest):

    def test_sqrt6(self):
        self.expect_series(hurwitz_ideal_series(6, 12), hurwitz_series(12))

    def test_sqrt2(self):
        self.expect_series(hurwitz_ideal_series(2, 12), hurwitz_series(12))

    def test_ring_names(self):
        self.expect_series(hurwitz_ideal_series('Z[sqrt6]', 4),
                           hurwitz_ideal_series(6, 4))


def test_invalid_ring():
    with pytest.raises(ValueError):
        hurwitz_ideal_series(3, 4)
    with pytest.raises(ValueError):
        hurwitz_ideal_series(6, Fraction(-1))
