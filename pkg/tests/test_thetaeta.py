from fractions import Fraction

import pytest

from qmock.qseries import pair_with_vector
from qmock.qseries import RationalQSeries
from qmock.qseries import tensor
from qmock.testing import oracles
from qmock import thetaeta
from tests.helper import SeriesTest


def test_theta_eta_cubed_component():
    f = thetaeta.theta(2, 1, 10)
    assert f.weight == Fraction(3, 2)
    assert f.sign == -1
    assert f.rep == 1
    assert f.component(1).items() == [
        (Fraction(1, 8), 1), (Fraction(9, 8), -3), (Fraction(25, 8), 5),
        (Fraction(49, 8), -7)]
    assert f.component(3) == -f.component(1)
    assert f.component(0).is_zero()


def test_theta_constant_at_zero_cutoff():
    f = thetaeta.theta(1, 0, 0)
    assert f.component(0).items() == [(0, 1)]
    assert f.component(1).is_zero()


@pytest.mark.parametrize('N', [1, 2, 3, 5, 6])
@pytest.mark.parametrize('nu', [0, 1])
def test_theta_symmetry_and_lattice(N, nu):
    f = thetaeta.theta(N, nu, 6)
    assert f.check_symmetry() == []
    assert f.check_exponent_lattice() == []


@pytest.mark.parametrize('N,nu,cutoff', [
    (0, 0, 1), (2, 2, 1), (2, 0, -1)])
def test_theta_invalid(N, nu, cutoff):
    with pytest.raises(ValueError):
        thetaeta.theta(N, nu, cutoff)


class TestEta(SeriesTest):

    def test_pentagonal(self):
        self.expect_series(thetaeta.eta(30), oracles.pentagonal_eta(30))

    def test_inverse_counts_partitions(self):
        s = thetaeta.eta_power(-1, 4)
        expected = RationalQSeries(
            {Fraction(-1, 24) + n: p for n, p in enumerate([1, 1, 2, 3, 5])},
            cutoff=4)
        self.expect_series(s, expected)
        assert s.cutoff == 4

    def test_eta_cubed_is_theta(self):
        self.expect_series(thetaeta.eta_power(3, 10),
                           thetaeta.theta(2, 1, 10).component(1))

    def test_cached(self):
        assert thetaeta.eta_power(-3, 5) is thetaeta.eta_power(-3, 5)

    def test_eta_squared_pairing(self):
        theta3 = thetaeta.theta(3, 0, 8)
        paired = pair_with_vector(tensor(theta3, theta3),
                                  thetaeta.eigenvector('v3'))
        self.expect_series(paired, thetaeta.eta_power(2, 8) * 4, 8)

    def test_eta_pairing(self):
        paired = pair_with_vector(thetaeta.theta(6, 0, 8),
                                  thetaeta.eigenvector('v6'))
        self.expect_series(paired, thetaeta.eta(8) * 2, 8)

    def test_theta_eigenvector_identities_to_fifty(self):
        self.expect_series(
            pair_with_vector(thetaeta.theta(6, 0, 50),
                             thetaeta.eigenvector('v6')),
            thetaeta.eta(50) * 2, 50)
        self.expect_series(
            pair_with_vector(thetaeta.theta(2, 1, 50),
                             thetaeta.eigenvector('v2')),
            oracles.pentagonal_eta(50).power(3) * 2, 50)


def test_eigenvector_groups():
    assert thetaeta.eigenvector('v2').moduli == (4,)
    assert thetaeta.eigenvector('v6').moduli == (12,)
    assert thetaeta.eigenvector('v3').moduli == (6, 6)
    assert thetaeta.eigenvector('v4').moduli == (6, 6, 6, 6)
    with pytest.raises(ValueError):
        thetaeta.eigenvector('v5')


def test_eisenstein_e2():
    assert thetaeta.eisenstein_e2(3).items() == [
        (0, 1), (1, -24), (2, -72), (3, -96)]


def test_appell_f2():
    f = thetaeta.appell_f2(Fraction(5, 2))
    # only (a, b) = (1, 2) and (1, 4) have ab <= 5 and b - a odd
    assert f.coefficient(Fraction(1, 2)) == 0
    assert f.coefficient(1) == 1
    assert f.coefficient(2) == 1
    assert f.coefficient(Fraction(3, 2)) == 0


@pytest.mark.parametrize('n,expected', [
    (0, Fraction(-1, 12)), (1, 0), (2, 0), (3, Fraction(1, 3)),
    (4, Fraction(1, 2)), (7, 1), (8, 1), (11, 1), (12, Fraction(4, 3)),
    (15, 2), (16, Fraction(3, 2)), (20, 2), (23, 3),
])
def test_hurwitz_class_number(n, expected):
    assert thetaeta.hurwitz_class_number(n) == expected


def test_hurwitz_series():
    s = thetaeta.hurwitz_series(8)
    assert [s.coefficient(n) for n in range(9)] == [
        Fraction(-1, 12), 0, 0, Fraction(1, 3), Fraction(1, 2), 0, 0, 1, 1]
