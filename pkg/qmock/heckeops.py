from fractions import Fraction
import math

from sympy import divisors
from sympy.ntheory.modular import solve_congruence

from qmock.arith import mobius
from qmock.configuration import experimental
from qmock.qseries import RationalQSeries
from qmock.qseries import VectorQSeries


def _with_history(f, name):
    metadata = dict(f.metadata)
    metadata['operators'] = list(metadata.get('operators', [])) + [name]
    return metadata


def _weight_power(k):
    power = Fraction(k) - Fraction(1, 2)
    if power.denominator != 1 or power < 0:
        raise ValueError(
            'k - 1/2 must be a nonnegative integer, but got k={}'.format(k))
    return int(power)


def u_operator(f, d):
    """Index raising operator ``U_d``: level ``N`` to level ``N d^2``.

    Component ``mu`` of the result is component ``mu/d mod 2N`` of ``f``
    when ``d`` divides ``mu`` and zero otherwise; exponents are unchanged.
    """
    d = int(d)
    if d < 1:
        raise ValueError('d must be positive, but got {}'.format(d))
    if d == 1:
        return f
    N = f.level
    zero = RationalQSeries(cutoff=f.cutoff)
    components = []
    for mu in range(2 * N * d * d):
        if mu % d:
            components.append(zero)
        else:
            components.append(f.component(mu // d))
    return VectorQSeries(
        N * d * d, components, f.weight, f.sign, rep=f.rep,
        metadata=_with_history(f, 'U_{}'.format(d)))


def v_operator(f, d, k):
    """Hecke type operator ``V_d``: level ``N`` to level ``N d``.

    The coefficient of the result at component ``r`` and exponent ``m`` is
    the sum of ``a^(k-1/2) c(r/a, m d/a^2)`` over the divisors ``a`` of
    ``d`` that divide both ``r`` and ``m - rep r^2/4Nd``. The result is
    complete through ``cutoff / d``.

    Args:
        f (~qmock.qseries.VectorQSeries): Input of level ``N``.
        d (int): Positive integer.
        k (Fraction): Weight; ``k - 1/2`` must be a nonnegative integer.
    """
    d = int(d)
    if d < 1:
        raise ValueError('d must be positive, but got {}'.format(d))
    power = _weight_power(k)
    if d == 1:
        return f
    N = f.level
    modulus = 2 * N * d
    cutoff = f.cutoff / d
    terms = [{} for _ in range(modulus)]
    for a in divisors(d):
        factor = a ** power
        for g in range(2 * N):
            items = f.component(g).items()
            if not items:
                continue
            for t in range(d // a):
                r = (a * (g + 2 * N * t)) % modulus
                offset = Fraction(f.rep * r * r, 4 * N * d)
                for e, c in items:
                    m = a * a * e / d
                    if m > cutoff:
                        break
                    n = m - offset
                    if n.denominator != 1 or n.numerator % a:
                        continue
                    terms[r][m] = terms[r].get(m, 0) + factor * c
    components = [RationalQSeries(t, cutoff=cutoff) for t in terms]
    return VectorQSeries(
        N * d, components, f.weight, f.sign, rep=f.rep,
        metadata=_with_history(f, 'V_{}'.format(d)))


def w_permutation(N, c):
    """Residue permutation of the Atkin-Lehner involution ``W_c``.

    ``W_c(h)`` is the residue modulo ``2N`` with ``W_c(h) = h mod 2c`` and
    ``W_c(h) = -h mod 2N/c``.

    >>> w_permutation(6, 3)[1]
    7
    """
    if c < 1 or N % c or math.gcd(c, N // c) != 1:
        raise ValueError(
            'c must exactly divide N, but got c={} and N={}'.format(c, N))
    other = 2 * N // c
    permutation = []
    for h in range(2 * N):
        x, _ = solve_congruence((h % (2 * c), 2 * c), ((-h) % other, other))
        permutation.append(int(x) % (2 * N))
    return permutation


def w_involution(f, c):
    permutation = w_permutation(f.level, c)
    components = [f.component(permutation[h]) for h in range(2 * f.level)]
    return VectorQSeries(
        f.level, components, f.weight, f.sign, rep=f.rep,
        metadata=_with_history(f, 'W_{}'.format(c)))


def script_v(f, d, m, k):
    """Sum of ``mu(r) r^(k-1/2) (f | V_(d/r^2)) | U_r`` over ``r^2 | d`` with
    ``gcd(r, m) = 1``."""
    d = int(d)
    if d < 1:
        raise ValueError('d must be positive, but got {}'.format(d))
    power = _weight_power(k)
    total = None
    r = 1
    while r * r <= d:
        if d % (r * r) == 0 and math.gcd(r, m) == 1:
            coefficient = mobius(r) * r ** power
            if coefficient:
                term = u_operator(v_operator(f, d // (r * r), k), r)
                term = term * coefficient
                total = term if total is None else total + term
        r += 1
    total.metadata = _with_history(f, 'script_V_{}^({})'.format(d, m))
    return total


def lemma_combination(phi_top, phi_base, phi_mid, p, e, k):
    """``phi_top - (phi_base | V_(p^e) + (phi_mid - phi_mid | W_p) |
    V_(p^(e-1))^(p)) / 2``.

    The weak holomorphy of the result is not checked.
    """
    experimental('lemma_combination')
    if e < 1:
        raise ValueError('e must be positive, but got {}'.format(e))
    first = script_v(phi_base, p ** e, 1, k)
    second = script_v(phi_mid - w_involution(phi_mid, p), p ** (e - 1), p, k)
    return phi_top - (first + second) / 2
