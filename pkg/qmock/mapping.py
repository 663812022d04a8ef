from fractions import Fraction

from qmock.mockforms import weight_half
from qmock.mockforms import weight_threehalf
from qmock.mockforms.applicability import applies
from qmock.mockforms.builder import MockFormSpec


_constructions = None


def _get_constructions():
    global _constructions

    if _constructions is not None:
        return _constructions

    _constructions = {
        'P51-square': weight_half.p51_square,
        'P51-nonsquare': weight_half.p51_nonsquare,
        'P52-square': weight_half.p52_square,
        'P61-square': weight_threehalf.p61_square,
        'P61-nonsquare': weight_threehalf.p61_nonsquare,
        'P62-square': weight_threehalf.p62_square,
        'P62-nonsquare': weight_threehalf.p62_nonsquare,
    }
    return _constructions


constructions = _get_constructions()

# (weight, family) -> variants tried in order
_families = {
    (Fraction(1, 2), 'auto'): ('P51-square', 'P51-nonsquare'),
    (Fraction(1, 2), 'alt'): ('P52-square',),
    (Fraction(3, 2), 'auto'): ('P61-square', 'P61-nonsquare'),
    (Fraction(3, 2), 'alt'): ('P62-square', 'P62-nonsquare'),
}


def select_variant(weight, N, family='auto'):
    """Name of the construction used for ``weight`` and ``N``.

    ``auto`` picks between the two cases of the weight's first
    construction by the square test; ``alt`` selects the other
    construction of the same weight.
    """
    key = (Fraction(weight), family)
    if key not in _families:
        raise ValueError(
            'No construction for weight {} and family {}'.format(
                weight, family))
    for name in _families[key]:
        if applies(constructions[name], N):
            return name
    raise ValueError(
        'No {} construction of weight {} applies to N={}: {} needs {}N to '
        'be a perfect square'.format(
            family, weight, N, _families[key][0],
            constructions[_families[key][0]].square_of))


def build(spec):
    """Computes the vector series described by a ``MockFormSpec``."""
    func = constructions[spec.variant]
    if spec.unit is not None and spec.variant.endswith('nonsquare'):
        return func(spec.N, spec.cutoff, unit=spec.unit)
    return func(spec.N, spec.cutoff)


def build_auto(weight, N, cutoff=None, family='auto'):
    variant = select_variant(weight, N, family)
    return build(MockFormSpec(N, weight, variant, cutoff))
