from fractions import Fraction
import math

from qmock.arith import kronecker
from qmock.configuration import resolve_cutoff
from qmock.quadfield import enumerate_ratio_region
from qmock.quadfield import fundamental_totally_positive_unit
from qmock.quadfield import QuadFieldElem
from qmock.qseries import RationalQSeries
from qmock.thetaeta import eta_power


def phi6(lam):
    """``(12/u) Tr(lam / (2 - sqrt 6))`` for totally positive
    ``lam = u + v sqrt 6``."""
    u, v = int(lam.a), int(lam.b)
    return Fraction(kronecker(12, u) * (-2 * u - 6 * v))


def phi2(lam):
    """``-(-4/u) Tr(lam^2 sqrt 2 / (4 (3 - 2 sqrt 2)))`` for totally
    positive ``lam = u + v sqrt 2``."""
    u, v = int(lam.a), int(lam.b)
    return Fraction(-kronecker(-4, u) * (2 * u * u + 4 * v * v + 6 * u * v))


# radicand -> (ideal weight, power of eta(4 tau) in the denominator)
_RINGS = {
    6: (phi6, 1),
    2: (phi2, 3),
}


def _ring_radicand(ring):
    if isinstance(ring, str):
        digits = ''.join(c for c in ring if c.isdigit())
        ring = int(digits) if digits else 0
    if ring not in _RINGS:
        raise ValueError(
            'Ideal sums are available for Z[sqrt 6] and Z[sqrt 2], but got '
            '{}'.format(ring))
    return ring


def principal_generators(ring, norm_bound):
    """Totally positive generators of the principal ideals of norm at most
    ``norm_bound``, one per ideal, with ratio in ``(eps^-2, 1]``."""
    d = _ring_radicand(ring)
    unit = fundamental_totally_positive_unit(d)
    pairs = enumerate_ratio_region(
        d, unit, norm_bound, closed=True, positive_only=True)
    return [QuadFieldElem(P, Q, d) for P, Q in pairs]


def hurwitz_ideal_series(ring, cutoff=None):
    """Ideal sum over ``Z[sqrt d]`` divided by ``24 eta(4 tau)**r``.

    For ``d = 6`` the weights are ``phi6`` and ``r = 1``; for ``d = 2`` they
    are ``phi2`` and ``r = 3``. Both series equal the generating function of
    Hurwitz class numbers.

    Args:
        ring: 6, 2, or a name such as ``'Z[sqrt6]'``.
        cutoff: Largest exponent computed.

    Returns:
        ~qmock.qseries.RationalQSeries
    """
    d = _ring_radicand(ring)
    cutoff = resolve_cutoff(cutoff)
    if cutoff < 0:
        raise ValueError(
            'cutoff must be nonnegative, but got {}'.format(cutoff))
    weight, r = _RINGS[d]
    inner_cutoff = cutoff + Fraction(r, 6)
    terms = {}
    for lam in principal_generators(d, math.floor(d * inner_cutoff)):
        e = Fraction(lam.norm(), d)
        terms[e] = terms.get(e, 0) + weight(lam)
    inner = RationalQSeries(terms, cutoff=inner_cutoff)
    prefactor = eta_power(-r, cutoff / 4).rescale(4)
    return (inner * prefactor / 24).truncate(cutoff)
