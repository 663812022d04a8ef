from fractions import Fraction
import math
import warnings

from sympy.solvers.diophantine.diophantine import diop_DN

from qmock.arith import ceil_sqrt
from qmock.arith import is_square
from qmock.arith import sgn
from qmock.arith import squarefree_kernel
from qmock.configuration import config


_LARGE_UNIT_POWER = 8
_LARGE_SCAN = 10 ** 6

# family -> (k with radicand = k * N, whether the right endpoint 1 belongs to
# the region)
REGION_FAMILIES = {
    'p51': (2, False),
    'p61': (6, True),
    'p62': (2, True),
}


class QuadFieldElem(object):
    """Exact element ``a + b*sqrt(D)`` of the real quadratic field Q(sqrt D).

    Args:
        a: Rational part.
        b: Coefficient of ``sqrt(D)``.
        D (int): Positive non-square radicand.
    """

    __slots__ = ('a', 'b', 'D')

    def __init__(self, a, b, D):
        D = int(D)
        if D <= 1 or is_square(D):
            raise ValueError(
                'The radicand must be a positive non-square integer, but got '
                '{}'.format(D))
        object.__setattr__(self, 'a', Fraction(a))
        object.__setattr__(self, 'b', Fraction(b))
        object.__setattr__(self, 'D', D)

    def __setattr__(self, name, value):
        raise AttributeError('QuadFieldElem is immutable')

    def _coerce(self, other):
        if isinstance(other, QuadFieldElem):
            if other.D != self.D:
                raise ValueError(
                    'Cannot combine elements of Q(sqrt {}) and '
                    'Q(sqrt {})'.format(self.D, other.D))
            return other
        if isinstance(other, (int, Fraction)):
            return QuadFieldElem(other, 0, self.D)
        return NotImplemented

    def conjugate(self):
        return QuadFieldElem(self.a, -self.b, self.D)

    def norm(self):
        return self.a * self.a - self.D * self.b * self.b

    def trace(self):
        return 2 * self.a

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_integral(self):
        """True if ``a`` and ``b`` are integers (element of Z[sqrt D])."""
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_totally_positive(self):
        return (compare_to_zero(self) > 0 and
                compare_to_zero(self.conjugate()) > 0)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadFieldElem(self.a + other.a, self.b + other.b, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldElem(-self.a, -self.b, self.D)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadFieldElem(self.a - other.a, self.b - other.b, self.D)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadFieldElem(
            self.a * other.a + self.D * self.b * other.b,
            self.a * other.b + self.b * other.a, self.D)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('division by zero in Q(sqrt {})'.format(
                self.D))
        return QuadFieldElem(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadFieldElem(1, 0, self.D)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadFieldElem):
            return NotImplemented
        return (self.D, self.a, self.b) == (other.D, other.a, other.b)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.D, self.a, self.b))

    def __lt__(self, other):
        return compare_to_zero(self - other) < 0

    def __le__(self, other):
        return compare_to_zero(self - other) <= 0

    def __gt__(self, other):
        return compare_to_zero(self - other) > 0

    def __ge__(self, other):
        return compare_to_zero(self - other) >= 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        b_abs = abs(self.b)
        b_str = '' if b_abs == 1 else str(b_abs)
        sign = '-' if self.b < 0 else '+'
        if self.a == 0:
            return '{}{}√{}'.format('-' if self.b < 0 else '', b_str, self.D)
        return '{}{}{}√{}'.format(self.a, sign, b_str, self.D)

    def __repr__(self):
        return 'QuadFieldElem({}, {}, {})'.format(self.a, self.b, self.D)


def conjugate(x):
    return x.conjugate()


def norm(x):
    return x.norm()


def trace(x):
    return x.trace()


def compare_to_zero(x):
    """Exact sign of ``a + b*sqrt(D)``.

    >>> compare_to_zero(QuadFieldElem(2, -1, 6))
    -1
    """
    sa = sgn(x.a)
    sb = sgn(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    if x.a * x.a > x.D * x.b * x.b:
        return sa
    return sb


def fundamental_totally_positive_unit(D):
    """Smallest totally positive unit ``> 1`` of ``Z[sqrt D]``.

    The fundamental solution of the negative Pell equation is squared when it
    exists, otherwise the fundamental solution of ``a^2 - D b^2 = 1`` is
    returned.
    """
    if D <= 1 or is_square(D):
        raise ValueError(
            'The radicand must be a positive non-square integer, but got '
            '{}'.format(D))
    negative = diop_DN(D, -1)
    if negative:
        x, y = negative[0]
        return QuadFieldElem(abs(x), abs(y), D) ** 2
    x, y = diop_DN(D, 1)[0]
    return QuadFieldElem(abs(x), abs(y), D)


class UnitSpec(object):
    """Congruence-constrained totally positive unit ``a + b*sqrt(radicand)``.

    Attributes:
        N (int): Level.
        radicand (int): ``2N`` or ``6N``.
        lcm_modulus (int): Required divisor of ``a - 1``.
        unit (QuadFieldElem): The unit, with integer ``a`` and even ``b``.
        k (int): Power of ``base`` that equals ``unit``.
        base (QuadFieldElem): Fundamental totally positive unit of
            ``Z[sqrt d]``, ``d`` the squarefree kernel of the radicand.
    """

    def __init__(self, N, radicand, lcm_modulus, unit, k, base):
        self.N = N
        self.radicand = radicand
        self.lcm_modulus = lcm_modulus
        self.unit = unit
        self.k = k
        self.base = base

    @property
    def a(self):
        return int(self.unit.a)

    @property
    def b(self):
        return int(self.unit.b)

    def describe(self):
        return '{}+{}√{}'.format(self.a, self.b, self.radicand)

    def to_dict(self):
        return {
            'N': self.N,
            'radicand': self.radicand,
            'a': self.a,
            'b': self.b,
            'k': self.k,
            'lcm_modulus': self.lcm_modulus,
            'unit': self.describe(),
            'base': str(self.base),
        }

    def __repr__(self):
        return 'UnitSpec(N={}, unit={}, k={})'.format(
            self.N, self.describe(), self.k)


def unit_with_congruences(N, radicand, lcm_modulus):
    """Smallest totally positive unit ``a + b*sqrt(radicand) > 1`` with ``b``
    even and ``lcm_modulus | a - 1``.

    Every such unit is a power of the fundamental totally positive unit of
    ``Z[sqrt d]`` where ``radicand = f^2 d``. The exponent is found on
    residues modulo ``lcm(lcm_modulus, 2f)`` and the unit is computed exactly
    once afterwards.

    >>> unit_with_congruences(6, 12, 12).describe()
    '97+28√12'
    """
    if radicand <= 1 or is_square(radicand):
        raise ValueError(
            'The radicand must be a positive non-square integer, but got '
            '{}'.format(radicand))
    f, d = squarefree_kernel(radicand)
    base = fundamental_totally_positive_unit(d)
    a0 = int(base.a)
    b0 = int(base.b)
    modulus = lcm_modulus * 2 * f // math.gcd(lcm_modulus, 2 * f)
    a, b = a0 % modulus, b0 % modulus
    k = 1
    limit = config.unit_search_limit
    while not ((a - 1) % lcm_modulus == 0 and b % (2 * f) == 0):
        if k >= limit:
            raise RuntimeError(
                'No power k <= {} of {} satisfies the congruences for '
                'radicand {} and modulus {}'.format(
                    limit, base, radicand, lcm_modulus))
        a, b = (a * a0 + d * b * b0) % modulus, (a * b0 + b * a0) % modulus
        k += 1
    if k > _LARGE_UNIT_POWER:
        warnings.warn(
            'The unit for N={} needs power k={} of {}; its coefficients are '
            'large and the region enumeration may be slow'.format(N, k, base))
    power = base ** k
    unit = QuadFieldElem(power.a, power.b / f, radicand)
    return UnitSpec(N, radicand, lcm_modulus, unit, k, base)


def unit_for_family(N, family):
    """Unit of the non-square constructions: ``p51``, ``p61`` or ``p62``."""
    if family not in REGION_FAMILIES:
        raise ValueError('Unknown unit family: {}'.format(family))
    k, _ = REGION_FAMILIES[family]
    lcm_modulus = _lcm(2 * N, 4 if k == 2 else 12)
    return unit_with_congruences(N, k * N, lcm_modulus)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _ratio_predicate(nu, unit_conj_sq, n, closed):
    # With n = Nm(nu) > 0 the ratio nu/nu' equals n / nu'^2.
    nu_conj_sq = nu.conjugate() * nu.conjugate()
    if compare_to_zero(n - unit_conj_sq * nu_conj_sq) <= 0:
        return False
    right = compare_to_zero(nu_conj_sq - n)
    return right >= 0 if closed else right > 0


def enumerate_ratio_region(radicand, unit, norm_bound, closed, step=1,
                           widen=None, positive_only=False):
    """All ``P + Q*sqrt(radicand)`` with ``0 < Nm <= norm_bound`` and
    ``unit^-2 < nu/nu' < 1`` (``<= 1`` if ``closed``).

    Args:
        radicand (int): Non-square radicand ``D``.
        unit (QuadFieldElem): Totally positive unit ``> 1`` of Z[sqrt D].
        norm_bound (int): Upper bound of the norm.
        closed (bool): Whether the right endpoint belongs to the region.
        step (int): Only ``P`` divisible by ``step`` are returned.
        widen (int): Multiplier of the outer scan rectangle. Defaults to
            ``config.region_scan_widen``.
        positive_only (bool): Keep only ``P > 0``, one generator per pair
            ``{nu, -nu}``.

    Returns:
        list: Sorted ``(P, Q)`` integer pairs.
    """
    if widen is None:
        widen = config.region_scan_widen
    norm_bound = int(norm_bound)
    if norm_bound < 1:
        return []
    D = radicand
    # unit < 2a because its conjugate is positive.
    unit_bound = 2 * math.ceil(unit.a)
    p_max = ((math.isqrt(norm_bound) + 1) * (1 + unit_bound) // 2 + 1)
    p_max *= widen
    q_max = p_max // math.isqrt(D) + 1
    if 2 * q_max + 1 > _LARGE_SCAN:
        warnings.warn(
            'Scanning {} rows of the unit region for radicand {}; this may be '
            'slow'.format(2 * q_max + 1, D))
    unit_conj_sq = unit.conjugate() * unit.conjugate()
    found = []
    for Q in range(-q_max, q_max + 1):
        base = D * Q * Q
        low = ceil_sqrt(base + 1)
        high = math.isqrt(base + norm_bound)
        high = min(high, p_max)
        for P in range(low, high + 1):
            if P % step:
                continue
            for signed in ((P,) if positive_only else (P, -P)):
                nu = QuadFieldElem(signed, Q, D)
                n = signed * signed - base
                if _ratio_predicate(nu, unit_conj_sq, n, closed):
                    found.append((signed, Q))
    return sorted(found)


def region_norm_bound(N, family, exponent_cutoff):
    k, _ = REGION_FAMILIES[family]
    return math.floor(4 * N * k * N * Fraction(exponent_cutoff))


def region_exponent(N, family, x, y):
    k, _ = REGION_FAMILIES[family]
    return Fraction(N * y * y - k * x * x, 4 * N * k)


def _power_of(base, unit):
    # Returns k with base**k == unit, or None.
    power = base
    k = 1
    while power < unit:
        power = power * base
        k += 1
    return k if power == unit else None


def enumerate_unit_region(radicand, unit, norm_bound, closed, step=1,
                          widen=None):
    """Same result as ``enumerate_ratio_region`` for a unit that is a power
    ``base**k`` of the fundamental totally positive unit of ``Z[sqrt d]``.

    The sector of ``base`` is scanned once and carried into the sector of
    ``unit`` by the powers ``base**-j``, ``0 <= j < k``, so the scan does
    not grow with the size of ``unit``.
    """
    f, d = squarefree_kernel(radicand)
    base = fundamental_totally_positive_unit(d)
    in_base = QuadFieldElem(unit.a, unit.b * f, d)
    k = _power_of(base, in_base)
    if k is None:
        return enumerate_ratio_region(
            radicand, unit, norm_bound, closed, step=step, widen=widen)
    shifts = []
    shift = QuadFieldElem(1, 0, d)
    inverse = base.conjugate()
    for _ in range(k):
        shifts.append((int(shift.a), int(shift.b)))
        shift = shift * inverse
    found = []
    for a, b in enumerate_ratio_region(d, base, norm_bound, True,
                                       widen=widen):
        for sa, sb in shifts:
            P = a * sa + d * b * sb
            Q = a * sb + b * sa
            if Q % f or P % step:
                continue
            if Q == 0 and not closed:
                continue
            found.append((P, Q // f))
    return sorted(found)


def enumerate_region(N, radicand, unit, exponent_cutoff, quadform,
                     widen=None):
    """Integer pairs ``(x, y)`` of a unit-region sum up to an exponent.

    The pair is mapped to ``nu = N*y + x*sqrt(radicand)`` whose ratio
    ``nu/nu'`` is the ratio printed in the region condition, and whose norm
    is ``4*N*radicand`` times the exponent.

    Args:
        N (int): Level.
        radicand (int): ``2N`` for ``p51``/``p62``, ``6N`` for ``p61``.
        unit (QuadFieldElem): The unit ``eps_N``.
        exponent_cutoff: Largest exponent ``y^2/4k - x^2/4N`` returned.
        quadform (str): Region family, one of ``p51``, ``p61``, ``p62``.
        widen (int): Multiplier of the outer scan rectangle.

    Returns:
        list: ``(x, y)`` pairs in lexicographic order.
    """
    if quadform not in REGION_FAMILIES:
        raise ValueError('Unknown region family: {}'.format(quadform))
    k, closed = REGION_FAMILIES[quadform]
    if radicand != k * N:
        raise ValueError(
            'Region family {} at N={} needs radicand {}, but got {}'.format(
                quadform, N, k * N, radicand))
    bound = region_norm_bound(N, quadform, exponent_cutoff)
    pairs = enumerate_unit_region(
        radicand, unit, bound, closed, step=N, widen=widen)
    return sorted((Q, P // N) for P, Q in pairs)


def reduce_associate(lam, unit):
    """Totally positive associate of ``lam`` with ratio in ``(unit^-2, 1]``.

    Returns None when ``lam`` does not have positive norm.
    """
    if lam.norm() <= 0:
        return None
    if compare_to_zero(lam) < 0:
        lam = -lam
    unit_sq = unit * unit
    ratio = lam / lam.conjugate()
    while ratio > 1:
        lam = lam / unit
        ratio = ratio / unit_sq
    while ratio <= unit_sq.inverse():
        lam = lam * unit
        ratio = ratio * unit_sq
    return lam
