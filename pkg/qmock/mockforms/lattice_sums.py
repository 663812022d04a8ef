from fractions import Fraction
import math

from qmock.arith import isqrt_exact
from qmock.arith import kronecker
from qmock.quadfield import enumerate_region
from qmock.quadfield import region_exponent
from qmock.thetaeta import eisenstein_e2


def square_root_of(k, N):
    s = isqrt_exact(k * N)
    if s is None:
        raise ValueError('{}N = {} is not a perfect square'.format(k, k * N))
    return s


def square_case_exponent(N, k, x, y):
    return Fraction(y * y, 4 * k) - Fraction(x * x, 4 * N)


def square_case_pairs(N, k, exponent_cutoff):
    """Pairs ``(x, y)`` with ``y > k|x|/s`` and exponent ``<= cutoff``.

    Here ``s = sqrt(kN)`` and the exponent is ``y^2/4k - x^2/4N``. Writing
    ``alpha = sy - kx`` and ``beta = sy + kx`` the exponent becomes
    ``alpha * beta / (4 N k^2)`` with ``alpha, beta >= 1``, so the pairs are
    found from factorizations instead of a rectangle scan.

    Returns:
        list: ``(x, y)`` pairs in lexicographic order.
    """
    s = square_root_of(k, N)
    bound = math.floor(4 * N * k * k * Fraction(exponent_cutoff))
    pairs = []
    for alpha in range(1, bound + 1):
        beta = (-alpha) % (2 * s) or 2 * s
        top = bound // alpha
        while beta <= top:
            if (beta - alpha) % (2 * k) == 0:
                pairs.append(((beta - alpha) // (2 * k),
                              (alpha + beta) // (2 * s)))
            beta += 2 * s
    return sorted(pairs)


def add_square_lattice_sum(builder, k, weight):
    """Adds ``weight(x, y) q^(y^2/4k - x^2/4N) e_x`` over the cone."""
    N = builder.N
    for x, y in square_case_pairs(N, k, builder.inner_cutoff):
        w = weight(x, y)
        if w:
            builder.add_term(x, square_case_exponent(N, k, x, y), w)


def boundary_residues(N, k):
    """Pairs ``(b, h)`` with ``b`` modulo ``2s`` and ``h = b*sqrt(N/k)``.
    """
    s = square_root_of(k, N)
    step = s // k
    return [(b, (b * step) % (2 * N)) for b in range(2 * s)]


def add_boundary_terms(builder, k, character, constant, e2_factor=None):
    """Adds ``chi(b) * (e2_factor * E2 + constant(b)) e_{b sqrt(N/k)}``.

    Arguments:
        builder (MockFormBuilder): Target.
        k (int): 2 or 6.
        character (int): Upper argument of the Kronecker symbol ``(c/b)``.
        constant (callable): ``b -> Fraction``, the constant part.
        e2_factor (Fraction): Multiple of ``E_2`` added to every term, or
            None.
    """
    e2 = None
    if e2_factor:
        e2 = eisenstein_e2(builder.inner_cutoff)
    for b, h in boundary_residues(builder.N, k):
        chi = kronecker(character, b)
        if chi == 0:
            continue
        value = constant(b)
        if value:
            builder.add_term(h, Fraction(0), chi * value)
        if e2 is not None:
            builder.add_series(h, e2 * (chi * e2_factor))


def add_region_sum(builder, family, unit, weight):
    """Adds the unit-region sum of a non-square construction.

    Arguments:
        builder (MockFormBuilder): Target.
        family (str): ``p51``, ``p61`` or ``p62``.
        unit (~qmock.quadfield.UnitSpec): The unit ``eps_N``.
        weight (callable): ``(x, y) -> Fraction``.
    """
    N = builder.N
    pairs = enumerate_region(
        N, unit.radicand, unit.unit, builder.inner_cutoff, family)
    for x, y in pairs:
        w = weight(x, y)
        if w:
            builder.add_term(x, region_exponent(N, family, x, y), w)
