from fractions import Fraction

import pytest

from qmock import mapping
from qmock.mockforms import MockFormSpec
from qmock.mockforms import VARIANTS
from qmock.quadfield import unit_for_family

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def test_registry_covers_variants():
    assert sorted(mapping.constructions) == sorted(VARIANTS)


@pytest.mark.parametrize('weight,N,family,expected', [
    (HALF, 2, 'auto', 'P51-square'),
    (HALF, 6, 'auto', 'P51-nonsquare'),
    (HALF, 6, 'alt', 'P52-square'),
    (THREE_HALVES, 6, 'auto', 'P61-square'),
    (THREE_HALVES, 5, 'auto', 'P61-nonsquare'),
    (THREE_HALVES, 2, 'alt', 'P62-square'),
    (THREE_HALVES, 5, 'alt', 'P62-nonsquare'),
])
def test_select_variant(weight, N, family, expected):
    assert mapping.select_variant(weight, N, family) == expected


@pytest.mark.parametrize('weight,N,family', [
    (HALF, 2, 'alt'), (Fraction(1), 2, 'auto'), (HALF, 2, 'other')])
def test_select_variant_rejects(weight, N, family):
    with pytest.raises(ValueError):
        mapping.select_variant(weight, N, family)


def test_spec_validation():
    with pytest.raises(ValueError):
        MockFormSpec(2, HALF, 'P61-square')
    with pytest.raises(ValueError):
        MockFormSpec(2, HALF, 'P53-square')
    with pytest.raises(ValueError):
        MockFormSpec(2, Fraction(5, 2), 'P51-square')
    assert MockFormSpec(2, '1/2', 'P51-square', 3).cutoff == 3


def test_build_with_given_unit():
    unit = unit_for_family(6, 'p51')
    f = mapping.build(MockFormSpec(6, HALF, 'P51-nonsquare', 1, unit=unit))
    assert f.metadata['unit']['unit'] == '97+28√12'
    assert f.cutoff == 1


def test_build_auto():
    f = mapping.build_auto(THREE_HALVES, 5, 1, family='alt')
    assert f.metadata['variant'] == 'P62-nonsquare'
    assert f.metadata['unit']['radicand'] == 10
    assert f.weight == THREE_HALVES
    assert f.sign == 1
