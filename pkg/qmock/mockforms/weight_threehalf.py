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


WEIGHT = Fraction(3, 2)


def p61_square_weight(x, y):
    return -2 * kronecker(12, y) * abs(x)


def p61_square_boundary(b, N, s):
    return 2 * N * periodic_bernoulli(2, Fraction(b, 2 * s))


def p61_region_weight(x, y, N, scale):
    # (sqrt(N)/sqrt(6)) y + x written in Q(sqrt(6N))
    mu = QuadFieldElem(x, Fraction(y, 6), 6 * N)
    return kronecker(12, y) * sgn(y) * (mu * scale).trace()


def p62_square_weight(x, y):
    return -2 * kronecker(-4, y) * abs(x) * y


def p62_square_boundary(b, N, s):
    return Fraction(16 * N * N, 3 * s) * periodic_bernoulli(
        3, Fraction(b, 2 * s))


def p62_region_weight(x, y, N, scale):
    lam = QuadFieldElem(Fraction(y, 2), Fraction(x, 2 * N), 2 * N)
    root = QuadFieldElem(0, 1, 2 * N)
    return kronecker(-4, y) * sgn(y) * (root * lam * lam * scale).trace()


@requires(6, square=True)
def p61_square(N, cutoff=None):
    s = square_root_of(6, N)
    builder = MockFormBuilder(
        N, cutoff, 1, WEIGHT,
        metadata={'proposition': '6.1(1)', 'variant': 'P61-square'})
    add_square_lattice_sum(builder, 6, p61_square_weight)
    add_boundary_terms(
        builder, 6, 12,
        lambda b: p61_square_boundary(b, N, s),
        e2_factor=Fraction(1, 12))
    return builder.build()


@requires(6, square=False)
def p61_nonsquare(N, cutoff=None, unit=None):
    """Weight 3/2 mock theta function for ``6N`` not a square.

    The region ``eps^-2 < ratio <= 1`` includes its right endpoint.
    """
    if unit is None:
        unit = unit_for_family(N, 'p61')
    scale = (1 - unit.unit.inverse()).inverse()
    builder = MockFormBuilder(
        N, cutoff, 1, WEIGHT,
        metadata={'proposition': '6.1(2)', 'variant': 'P61-nonsquare',
                  'unit': unit.to_dict()})
    add_region_sum(
        builder, 'p61', unit,
        lambda x, y: p61_region_weight(x, y, N, scale))
    return builder.build()


@requires(2, square=True)
def p62_square(N, cutoff=None):
    s = square_root_of(2, N)
    builder = MockFormBuilder(
        N, cutoff, 3, WEIGHT,
        metadata={'proposition': '6.2(1)', 'variant': 'P62-square'})
    add_square_lattice_sum(builder, 2, p62_square_weight)
    add_boundary_terms(
        builder, 2, -4,
        lambda b: p62_square_boundary(b, N, s))
    return builder.build()


@requires(2, square=False)
def p62_nonsquare(N, cutoff=None, unit=None):
    if unit is None:
        unit = unit_for_family(N, 'p62')
    inverse = unit.unit.inverse()
    scale = (1 - inverse * inverse).inverse()
    builder = MockFormBuilder(
        N, cutoff, 3, WEIGHT,
        metadata={'proposition': '6.2(2)', 'variant': 'P62-nonsquare',
                  'unit': unit.to_dict()})
    add_region_sum(
        builder, 'p62', unit,
        lambda x, y: p62_region_weight(x, y, N, scale))
    return builder.build()


def mock_theta_weight_threehalf(N, cutoff=None):
    """Weight 3/2 mock modular form with shadow
    ``sqrt(N) theta_N(tau; 0) / pi``, built with ``eta**-1``.
    """
    if applies(p61_square, N):
        return p61_square(N, cutoff)
    return p61_nonsquare(N, cutoff)


def mock_theta_weight_threehalf_alt(N, cutoff=None):
    """Same shadow as ``mock_theta_weight_threehalf``, built with
    ``eta**-3``.
    """
    if applies(p62_square, N):
        return p62_square(N, cutoff)
    return p62_nonsquare(N, cutoff)
