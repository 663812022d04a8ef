from fractions import Fraction

from qmock.configuration import resolve_cutoff
from qmock.qseries import RationalQSeries
from qmock.qseries import VectorQSeries
from qmock.thetaeta import eta_power


VARIANTS = (
    'P51-square',
    'P51-nonsquare',
    'P52-square',
    'P61-square',
    'P61-nonsquare',
    'P62-square',
    'P62-nonsquare',
)

SHADOWS = {
    Fraction(1, 2): 'θ_N(τ;1)/√N',
    Fraction(3, 2): '√N·θ_N(τ;0)/π',
}


class MockFormSpec(object):

    def __init__(self, N, weight, variant, cutoff=None, unit=None):
        """Parameters of one explicit mock modular form.

        Arguments:
            N (int): Level.
            weight (Fraction): 1/2 or 3/2.
            variant (str): One of ``VARIANTS``.
            cutoff: Largest exponent computed.
            unit (~qmock.quadfield.UnitSpec): Unit of a non-square variant,
                filled in by the construction when omitted.
        """

        weight = Fraction(weight)
        if weight not in SHADOWS:
            raise ValueError(
                'weight must be 1/2 or 3/2, but got {}'.format(weight))
        if variant not in VARIANTS:
            raise ValueError('Unknown variant {}; expected one of {}'.format(
                variant, ', '.join(VARIANTS)))
        expected = Fraction(1, 2) if variant[1] == '5' else Fraction(3, 2)
        if weight != expected:
            raise ValueError(
                'Variant {} has weight {}, but weight {} was requested'.format(
                    variant, expected, weight))
        self.N = int(N)
        self.weight = weight
        self.variant = variant
        self.cutoff = resolve_cutoff(cutoff)
        self.unit = unit

    def __repr__(self):
        return 'MockFormSpec(N={}, weight={}, variant={}, cutoff={})'.format(
            self.N, self.weight, self.variant, self.cutoff)


class MockFormBuilder(object):
    """Collects the inner sum of a construction and divides by ``eta**r``.

    The inner sum is collected through ``cutoff + r/24`` so that the
    quotient is complete through ``cutoff``.

    Arguments:
        N (int): Level.
        cutoff: Largest exponent of the result.
        eta_exponent (int): ``r`` in the prefactor ``eta**-r``.
        weight (Fraction): 1/2 or 3/2; fixes the symmetry sign.
        metadata (dict): Copied onto the result.
    """

    def __init__(self, N, cutoff, eta_exponent, weight, metadata=None):
        self.N = N
        self.cutoff = resolve_cutoff(cutoff)
        self.eta_exponent = eta_exponent
        self.weight = Fraction(weight)
        leading = -Fraction(eta_exponent, 24)
        if self.cutoff < leading:
            raise ValueError(
                'cutoff {} is below the leading exponent {} of the '
                'principal part'.format(self.cutoff, leading))
        self.inner_cutoff = self.cutoff + Fraction(eta_exponent, 24)
        self.metadata = dict(metadata or {})
        self._terms = [{} for _ in range(2 * N)]
        self._series = [[] for _ in range(2 * N)]

    @property
    def sign(self):
        return -1 if self.weight == Fraction(1, 2) else 1

    def add_term(self, h, exponent, coefficient):
        if coefficient == 0 or exponent > self.inner_cutoff:
            return
        terms = self._terms[h % (2 * self.N)]
        terms[exponent] = terms.get(exponent, 0) + coefficient

    def add_series(self, h, series):
        self._series[h % (2 * self.N)].append(series)

    def inner(self):
        components = []
        for terms, extra in zip(self._terms, self._series):
            component = RationalQSeries(terms, cutoff=self.inner_cutoff)
            for series in extra:
                component = component + series.truncate(self.inner_cutoff)
            components.append(component)
        return components

    def build(self):
        prefactor = eta_power(-self.eta_exponent, self.cutoff)
        components = [(prefactor * c).truncate(self.cutoff)
                      for c in self.inner()]
        metadata = dict(self.metadata)
        metadata.setdefault('N', self.N)
        metadata.setdefault('weight', str(self.weight))
        metadata.setdefault('shadow', SHADOWS[self.weight])
        metadata['neg_symmetry'] = self.sign
        return VectorQSeries(
            self.N, components, self.weight, self.sign, rep=-1,
            metadata=metadata)
