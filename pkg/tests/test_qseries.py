from fractions import Fraction

import pytest

from qmock.mapping import build_auto
from qmock.qseries import GroupRingVector
from qmock.qseries import pair_with_vector
from qmock.qseries import RationalQSeries
from qmock.qseries import scalarize
from qmock.qseries import tensor
from qmock.qseries import VectorQSeries
from qmock.testing import series_generator
from qmock.thetaeta import eta
from qmock.thetaeta import theta


def test_coefficient_beyond_cutoff():
    s = RationalQSeries({0: 1, Fraction(1, 2): 3}, cutoff=2)
    assert s.coefficient(Fraction(1, 2)) == 3
    assert s.coefficient(Fraction(1, 3)) == 0
    assert s.exp_den == 2
    with pytest.raises(ValueError):
        s.coefficient(Fraction(5, 2))


def test_terms_beyond_cutoff_are_dropped():
    s = RationalQSeries({0: 1, 3: 5}, cutoff=2)
    assert s.items() == [(0, 1)]
    assert s.valuation() == 0
    assert RationalQSeries(cutoff=1).valuation() is None


def test_truncate_cannot_extend():
    s = RationalQSeries({0: 1}, cutoff=2)
    assert s.truncate(1).cutoff == 1
    with pytest.raises(ValueError):
        s.truncate(3)


def test_product():
    a = RationalQSeries({0: 1, 1: 1}, cutoff=5)
    b = RationalQSeries({0: 1, 1: -1}, cutoff=5)
    assert (a * b).items() == [(0, 1), (2, -1)]
    assert (a * b).cutoff == 5


def test_product_cutoff_uses_valuations():
    a = RationalQSeries({Fraction(-1, 8): 1}, cutoff=2)
    b = RationalQSeries({0: 1, 1: 2}, cutoff=2)
    assert (a * b).cutoff == Fraction(15, 8)
    c = RationalQSeries({Fraction(1, 2): 1}, cutoff=2)
    assert (b * c).cutoff == Fraction(2)


def test_invert_geometric():
    s = RationalQSeries({0: 1, 1: -1}, cutoff=6)
    inverse = s.invert()
    assert inverse.cutoff == 6
    assert inverse.items() == [(n, 1) for n in range(7)]


def test_invert_with_negative_valuation():
    s = RationalQSeries({Fraction(-1, 24): 1, Fraction(23, 24): -1},
                        cutoff=3)
    inverse = s.invert()
    assert inverse.cutoff == 3 + Fraction(1, 12)
    assert inverse.valuation() == Fraction(1, 24)
    product = (s * inverse).truncate(3)
    assert product == RationalQSeries.constant(1, 3)


def test_invert_zero_series():
    with pytest.raises(ValueError):
        RationalQSeries(cutoff=3).invert()


def test_eta_power_inverse():
    e = eta(10)
    assert (e.power(3) * e.power(-3)).truncate(9) == \
        RationalQSeries.constant(1, 9)


def test_random_product_associative(random_state):
    a, b, c = [series_generator.random_invertible_series(random_state, 6)
               for _ in range(3)]
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_random_inverse(random_state):
    a = series_generator.random_invertible_series(random_state, 6)
    assert a * a.invert() == RationalQSeries.constant(1, 6)


def test_random_product_commutative(random_state):
    for exp_den in (1, 3, 8):
        a = series_generator.random_series(
            random_state, 6, exp_den=exp_den, start=Fraction(-1, exp_den))
        b = series_generator.random_series(random_state, 5, exp_den=2)
        assert a * b == b * a
        assert a + b == b + a


@pytest.mark.parametrize('exp_den,start', [
    (1, 0), (3, Fraction(-1, 3)), (24, Fraction(-1, 24)), (8, Fraction(1, 8))])
def test_random_inversions(random_state, exp_den, start):
    cutoff = 4
    for _ in range(50):
        a = series_generator.random_invertible_series(
            random_state, cutoff, exp_den=exp_den, start=start)
        product = a * a.invert()
        assert product.cutoff == cutoff - start
        assert product == RationalQSeries.constant(1, cutoff - start)


def test_shift_and_rescale():
    s = RationalQSeries({Fraction(1, 8): 1, Fraction(9, 8): -3}, cutoff=2)
    shifted = s.shift(Fraction(-1, 8))
    assert shifted.items() == [(0, 1), (1, -3)]
    assert shifted.cutoff == Fraction(15, 8)
    rescaled = s.rescale(8)
    assert rescaled.items() == [(1, 1), (9, -3)]
    assert rescaled.cutoff == 16
    with pytest.raises(ValueError):
        s.rescale(Fraction(1, 2))


def test_scalar_arithmetic():
    s = RationalQSeries({0: 1, 1: 2}, cutoff=3)
    assert (s * Fraction(1, 2)).coefficient(1) == 1
    assert (s / 4).coefficient(1) == Fraction(1, 2)
    assert (1 - s).items() == [(1, -2)]
    with pytest.raises(ZeroDivisionError):
        s / 0


def test_first_difference():
    a = RationalQSeries({0: 1, 2: 3}, cutoff=4)
    b = RationalQSeries({0: 1, 2: 4}, cutoff=3)
    assert a.first_difference(b) == 2
    assert a.first_difference(b, 1) is None
    with pytest.raises(ValueError):
        a.first_difference(b, 4)


def test_vector_needs_all_components():
    with pytest.raises(ValueError):
        VectorQSeries(2, [RationalQSeries(cutoff=1)] * 3, Fraction(1, 2), -1)


def test_vector_truncates_to_common_cutoff():
    components = [RationalQSeries(cutoff=3), RationalQSeries(cutoff=2)]
    f = VectorQSeries(1, components, Fraction(1, 2), 1, rep=1)
    assert f.cutoff == 2


def test_vector_symmetry_violation():
    good = series_generator.random_vector_series(
        series_generator.default_random_state(), 3, cutoff=4)
    assert good.check_symmetry() == []
    assert good.check_exponent_lattice() == []
    components = list(good.components)
    components[1] = components[1] + RationalQSeries(
        {Fraction(47, 12): 1}, cutoff=4)
    bad = VectorQSeries(3, components, good.weight, good.sign)
    assert Fraction(47, 12) in [e for _, e in bad.check_symmetry()]


def test_vector_combination_checks_level():
    a = VectorQSeries.zeros(2, 3, Fraction(1, 2), -1)
    b = VectorQSeries.zeros(3, 3, Fraction(1, 2), -1)
    with pytest.raises(ValueError):
        a + b


def test_group_ring_vector():
    v = GroupRingVector(4, {1: 1, 3: -1, 5: 1})
    assert v[1] == 2
    assert v[-1] == -1
    assert v.support() == [(1,), (3,)]
    w = v.tensor(GroupRingVector(2, {0: 1}))
    assert w.moduli == (4, 2)
    assert w[(1, 0)] == 2


def test_pair_with_vector_group_mismatch():
    f = theta(2, 1, 5)
    with pytest.raises(ValueError):
        pair_with_vector(f, GroupRingVector(6, {1: 1}))
    with pytest.raises(TypeError):
        pair_with_vector(RationalQSeries(cutoff=1), GroupRingVector(2, {}))


def test_tensor_components():
    f = theta(3, 0, 4)
    t = tensor(f, f)
    assert t.moduli == (6, 6)
    assert t.component((1, 5)) == f.component(1) * f.component(5)
    assert t.component((7, -1)) is t.component((1, 5))
    assert len(t.materialize()) == 36


def test_scalarize_classical_theta():
    # sum over all n of q^(n^2)
    s = scalarize(theta(1, 0, 4), lambda h: 1, 4)
    assert s.cutoff == 16
    assert s.items() == [(0, 1), (1, 2), (4, 2), (9, 2), (16, 2)]


def test_scalarize_accepts_sequences():
    f = theta(1, 0, 4)
    assert scalarize(f, [1], 4) == scalarize(f, {0: 1}, 4)


@pytest.mark.parametrize('weight,N,family', [
    (Fraction(1, 2), 1, 'auto'), (Fraction(1, 2), 2, 'auto'),
    (Fraction(1, 2), 3, 'auto'), (Fraction(1, 2), 5, 'auto'),
    (Fraction(1, 2), 6, 'auto'), (Fraction(1, 2), 8, 'auto'),
    (Fraction(1, 2), 6, 'alt'),
    (Fraction(3, 2), 1, 'auto'), (Fraction(3, 2), 2, 'auto'),
    (Fraction(3, 2), 5, 'auto'), (Fraction(3, 2), 6, 'auto'),
    (Fraction(3, 2), 1, 'alt'), (Fraction(3, 2), 2, 'alt'),
    (Fraction(3, 2), 3, 'alt'),
])
def test_larger_cutoff_extends_smaller(weight, N, family):
    small = build_auto(weight, N, 3, family)
    large = build_auto(weight, N, 8, family)
    assert small.cutoff == 3
    assert large.truncate(3) == small
