from fractions import Fraction
import math
import threading

from qmock.arith import sigma1
from qmock.configuration import resolve_cutoff
from qmock.qseries import GroupRingVector
from qmock.qseries import RationalQSeries
from qmock.qseries import TensorQSeries
from qmock.qseries import VectorQSeries


class ThetaSpec(object):

    def __init__(self, N, nu, cutoff=None):
        """Parameters of the unary theta function ``theta_N(tau; nu)``.

        Arguments:
            N (int): Level, components are indexed modulo ``2N``.
            nu (int): 0 or 1, the power of ``n`` in the coefficients.
            cutoff: Largest exponent computed. Defaults to
                ``config.default_cutoff``.
        """

        N = int(N)
        if N < 1:
            raise ValueError('N must be positive, but got {}'.format(N))
        if nu not in (0, 1):
            raise ValueError('nu must be 0 or 1, but got {}'.format(nu))
        cutoff = resolve_cutoff(cutoff)
        if cutoff < 0:
            raise ValueError(
                'cutoff must be nonnegative, but got {}'.format(cutoff))
        self.N = N
        self.nu = nu
        self.cutoff = cutoff

    @property
    def weight(self):
        return self.nu + Fraction(1, 2)

    @property
    def sign(self):
        return -1 if self.nu else 1


def theta(N, nu, cutoff=None):
    """Unary theta function as a vector series for ``rho_N``.

    Component ``h`` is the sum of ``n**nu * q**(n**2 / 4N)`` over
    ``n = h mod 2N``.

    Component 1 of ``theta(2, 1)`` is ``eta**3``.
    """
    spec = ThetaSpec(N, nu, cutoff)
    N = spec.N
    bound = math.isqrt(math.floor(4 * N * spec.cutoff))
    terms = [{} for _ in range(2 * N)]
    for n in range(-bound, bound + 1):
        coefficient = n ** spec.nu
        if coefficient == 0:
            continue
        e = Fraction(n * n, 4 * N)
        h = n % (2 * N)
        terms[h][e] = terms[h].get(e, 0) + coefficient
    components = [RationalQSeries(t, cutoff=spec.cutoff, exp_den=4 * N)
                  for t in terms]
    return VectorQSeries(
        N, components, spec.weight, spec.sign, rep=1,
        metadata={'object': 'theta', 'N': N, 'nu': spec.nu})


def eta(cutoff=None):
    """Dedekind eta as ``theta_{6,1}(tau; 0) - theta_{6,5}(tau; 0)``."""
    theta6 = theta(6, 0, cutoff)
    return theta6.component(1) - theta6.component(5)


_eta_cache = {}
_eta_lock = threading.Lock()


def eta_power(r, cutoff=None):
    """``eta**r`` complete through ``cutoff`` for any integer ``r``."""
    r = int(r)
    cutoff = resolve_cutoff(cutoff)
    key = (r, cutoff)
    cached = _eta_cache.get(key)
    if cached is not None:
        return cached
    if r == 0:
        result = RationalQSeries.constant(1, cutoff)
    else:
        m = abs(r)
        if r > 0:
            eta_cutoff = cutoff - Fraction(m - 1, 24)
        else:
            eta_cutoff = cutoff + Fraction(m + 1, 24)
        eta_cutoff = max(eta_cutoff, Fraction(1, 24))
        result = eta(eta_cutoff).power(m)
        if r < 0:
            result = result.invert()
        result = result.truncate(cutoff)
    with _eta_lock:
        _eta_cache.setdefault(key, result)
    return _eta_cache[key]


def eisenstein_e2(cutoff=None):
    cutoff = resolve_cutoff(cutoff)
    if cutoff < 0:
        raise ValueError(
            'cutoff must be nonnegative, but got {}'.format(cutoff))
    terms = {0: 1}
    for n in range(1, math.floor(cutoff) + 1):
        terms[n] = -24 * sigma1(n)
    return RationalQSeries(terms, cutoff=cutoff)


def appell_f2(cutoff=None):
    """Sum of ``a * (-1)**b * q**(ab/2)`` over ``b > a > 0``, ``b - a`` odd.
    """
    cutoff = resolve_cutoff(cutoff)
    if cutoff < 0:
        raise ValueError(
            'cutoff must be nonnegative, but got {}'.format(cutoff))
    limit = math.floor(2 * cutoff)
    terms = {}
    a = 1
    while a * (a + 1) <= limit:
        for b in range(a + 1, limit // a + 1, 2):
            e = Fraction(a * b, 2)
            terms[e] = terms.get(e, 0) + a * (-1) ** b
        a += 1
    return RationalQSeries(terms, cutoff=cutoff, exp_den=2)


_V3_SUPPORT = {
    (0, 1): 1, (1, 0): 1, (0, 5): 1, (5, 0): 1,
    (3, 2): -1, (2, 3): -1, (3, 4): -1, (4, 3): -1,
}


def eigenvector(tag):
    """The vectors ``v2``, ``v3``, ``v6`` and ``v4 = v3 (x) v3``."""
    if tag == 'v2':
        return GroupRingVector(4, {1: 1, 3: -1})
    if tag == 'v6':
        return GroupRingVector(12, {1: 1, 5: -1, 7: -1, 11: 1})
    if tag == 'v3':
        return GroupRingVector((6, 6), _V3_SUPPORT)
    if tag == 'v4':
        v3 = eigenvector('v3')
        return v3.tensor(v3)
    raise ValueError(
        'Unknown eigenvector {}; expected one of v2, v3, v4, v6'.format(tag))


def tensor_power(f, n):
    return TensorQSeries([f] * n)


def hurwitz_class_number(n):
    """Hurwitz class number ``H(n)`` by counting reduced forms.

    Forms ``(a, b, c)`` of discriminant ``-n`` with ``|b| <= a <= c`` and
    ``b >= 0`` whenever ``|b| = a`` or ``a = c`` are counted, with weight
    1/2 for multiples of ``x^2 + y^2`` and 1/3 for multiples of
    ``x^2 + xy + y^2``.

    >>> hurwitz_class_number(3)
    Fraction(1, 3)
    """
    if n < 0:
        raise ValueError(
            'H(n) is defined for nonnegative n, but got {}'.format(n))
    if n == 0:
        return Fraction(-1, 12)
    if n % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    b = n % 2
    while 3 * b * b <= n:
        ac = (b * b + n) // 4
        a = max(b, 1)
        while a * a <= ac:
            if ac % a == 0:
                c = ac // a
                if b == 0 and a == c:
                    total += Fraction(1, 2)
                elif b == a and a == c:
                    total += Fraction(1, 3)
                elif b == 0 or b == a or a == c:
                    total += 1
                else:
                    total += 2
            a += 1
        b += 2
    return total


def hurwitz_series(cutoff=None):
    cutoff = resolve_cutoff(cutoff)
    return RationalQSeries(
        {n: hurwitz_class_number(n) for n in range(math.floor(cutoff) + 1)},
        cutoff=cutoff)
