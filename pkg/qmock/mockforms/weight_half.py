from fractions import Fraction

from qmock.arith import kronecker
from qmock.arith import periodic_bernoulli
from qmock.arith import sgn
from qmock.mockforms.applicability import applies
from qmock.mockforms.applicability import requires
from qmock.mockforms.builder import MockFormBuilder
from qmock.mockforms.lattice_sums import add_boundary_terms
from qmock.mockforms.lattice_sums import add_region_sum
from qmock.mockforms.lattice_sums import add_square_lattice_sum
from qmock.mockforms.lattice_sums import square_root_of
from qmock.quadfield import QuadFieldElem
from qmock.quadfield import unit_for_family


WEIGHT = Fraction(1, 2)


def p51_square_weight(x, y):
    return kronecker(-4, y) * sgn(x) * y


def p51_square_boundary(b, s):
    return -s * periodic_bernoulli(2, Fraction(b, 2 * s))


def p51_square_alt_weight(x, y, s):
    return kronecker(-4, y) * sgn(x) * (y - Fraction(2 * abs(x), s))


def p51_region_weight(x, y, N, scale):
    # scale = 1 / (1 - eps^-1)
    lam = QuadFieldElem(Fraction(y, 2), Fraction(x, 2 * N), 2 * N)
    return kronecker(-4, y) * sgn(x) * (lam * scale).trace()


def p52_square_weight(x, y):
    return kronecker(12, y) * sgn(x)


def p52_square_boundary(b, s):
    return -periodic_bernoulli(1, Fraction(b, 2 * s))


@requires(2, square=True)
def p51_square(N, cutoff=None):
    """Weight 1/2 mock theta function for ``2N`` a perfect square.

    The lattice sum runs over ``y > sqrt(2)|x|/sqrt(N)`` with weights
    ``(-4/y) sgn(x) y``; the boundary term sits on components
    ``b*sqrt(N/2)``.
    """
    s = square_root_of(2, N)
    builder = MockFormBuilder(
        N, cutoff, 3, WEIGHT,
        metadata={'proposition': '5.1(1)', 'variant': 'P51-square'})
    add_square_lattice_sum(builder, 2, p51_square_weight)
    add_boundary_terms(
        builder, 2, -4,
        lambda b: p51_square_boundary(b, s),
        e2_factor=Fraction(1, 12 * s))
    return builder.build()


@requires(2, square=True)
def p51_square_alt(N, cutoff=None):
    """Second representative for ``2N`` a square.

    Differs from ``p51_square`` by ``eta**-3`` times an Eisenstein series
    of weight 2.
    """
    s = square_root_of(2, N)
    builder = MockFormBuilder(
        N, cutoff, 3, WEIGHT,
        metadata={'proposition': '5.1(1) alternative',
                  'variant': 'P51-square-alt'})
    add_square_lattice_sum(
        builder, 2, lambda x, y: p51_square_alt_weight(x, y, s))
    add_boundary_terms(
        builder, 2, -4, lambda b: Fraction(0),
        e2_factor=Fraction(1, 6 * s))
    return builder.build()


@requires(2, square=False)
def p51_nonsquare(N, cutoff=None, unit=None):
    if unit is None:
        unit = unit_for_family(N, 'p51')
    scale = (1 - unit.unit.inverse()).inverse()
    builder = MockFormBuilder(
        N, cutoff, 3, WEIGHT,
        metadata={'proposition': '5.1(2)', 'variant': 'P51-nonsquare',
                  'unit': unit.to_dict()})
    add_region_sum(
        builder, 'p51', unit,
        lambda x, y: p51_region_weight(x, y, N, scale))
    return builder.build()


@requires(6, square=True)
def p52_square(N, cutoff=None):
    s = square_root_of(6, N)
    builder = MockFormBuilder(
        N, cutoff, 1, WEIGHT,
        metadata={'proposition': '5.2', 'variant': 'P52-square'})
    add_square_lattice_sum(builder, 6, p52_square_weight)
    add_boundary_terms(
        builder, 6, 12,
        lambda b: p52_square_boundary(b, s))
    return builder.build()


def mock_theta_weight_half(N, cutoff=None):
    """Weight 1/2 mock modular form with shadow ``theta_N(tau; 1)/sqrt(N)``.

    Uses the lattice-sum formula when ``2N`` is a square and the unit-region
    formula otherwise.

    Args:
        N (int): Level.
        cutoff: Largest exponent computed.

    Returns:
        ~qmock.qseries.VectorQSeries: Odd series for the conjugate
        representation; component ``h`` has exponents in ``-h^2/4N + Z``.
    """
    if applies(p51_square, N):
        return p51_square(N, cutoff)
    return p51_nonsquare(N, cutoff)


def mock_theta_weight_half_alt(N, cutoff=None):
    return p52_square(N, cutoff)


def mock_theta_weight_half_square_alt(N, cutoff=None):
    return p51_square_alt(N, cutoff)
