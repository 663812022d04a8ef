from fractions import Fraction

from qmock.heckeops import w_involution
from qmock.mockforms import mock_theta_weight_half
from qmock.mockforms import mock_theta_weight_half_alt
from qmock.mockforms import ramanujan_f
from qmock.mockforms import ramanujan_omega
from qmock.mockforms import ramanujan_vector
from tests.helper import SeriesTest


def test_f_coefficients():
    f = ramanujan_f(5)
    assert [f.coefficient(n) for n in range(6)] == [1, 1, -2, 3, -3, 3]


def test_omega_coefficients():
    omega = ramanujan_omega(5)
    assert [omega.coefficient(n) for n in range(6)] == [1, 2, 3, 4, 6, 8]


def test_vector_layout():
    F = ramanujan_vector(3)
    assert F.level == 6
    assert F.check_symmetry() == []
    assert F.check_exponent_lattice() == []
    assert F.component(1).coefficient(Fraction(-1, 24)) == 1
    assert F.component(5) == -F.component(1)
    assert F.component(2).coefficient(Fraction(1, 3)) == 0
    assert F.component(4).coefficient(Fraction(1, 3)) == -4
    assert F.component(0).is_zero()


class TestLevelSix(SeriesTest):

    def check(self, f):
        F = ramanujan_vector(3)
        self.expect_series((f.component(1) + f.component(7)) * 2,
                           F.component(1))
        self.expect_series(f.component(2), F.component(2) / 4)
        self.expect_series(f.component(4), F.component(4) / 4)
        self.expect_series((f + w_involution(f, 3)) * 2, F)

    def test_unit_region(self):
        self.check(mock_theta_weight_half(6, 3))

    def test_lattice_sum(self):
        self.check(mock_theta_weight_half_alt(6, 3))
