from fractions import Fraction
import math

from qmock.configuration import resolve_cutoff
from qmock.qseries import RationalQSeries
from qmock.qseries import VectorQSeries


def _product(factors, cutoff):
    result = RationalQSeries.constant(1, cutoff)
    for factor in factors:
        result = result * factor
    return result.truncate(cutoff)


def ramanujan_f(cutoff=None):
    """``f(q) = 1 + sum q^(n^2) / ((1+q)^2 ... (1+q^n)^2)``."""
    cutoff = resolve_cutoff(cutoff)
    total = RationalQSeries.constant(1, cutoff)
    n = 1
    while n * n <= cutoff:
        factors = [RationalQSeries({0: 1, j: 1}, cutoff=cutoff)
                   for j in range(1, n + 1)]
        denominator = _product(factors, cutoff)
        denominator = denominator * denominator
        term = denominator.invert().truncate(cutoff - n * n).shift(n * n)
        total = total + term
        n += 1
    return total


def ramanujan_omega(cutoff=None):
    """``omega(q) = sum q^(2n(n+1)) / ((1-q)^2 (1-q^3)^2 ... (1-q^(2n+1))^2)``.
    """
    cutoff = resolve_cutoff(cutoff)
    total = RationalQSeries(cutoff=cutoff)
    n = 0
    while 2 * n * (n + 1) <= cutoff:
        lead = 2 * n * (n + 1)
        factors = [RationalQSeries({0: 1, 2 * j + 1: -1}, cutoff=cutoff)
                   for j in range(n + 1)]
        denominator = _product(factors, cutoff)
        denominator = denominator * denominator
        term = denominator.invert().truncate(cutoff - lead).shift(lead)
        total = total + term
        n += 1
    return total


def ramanujan_vector(cutoff=None):
    """Vector-valued completion ``F+`` of the order 3 functions at level 6.

    Components 1, 7 carry ``q^(-1/24) f(q)`` and 5, 11 its negative;
    components 2, 10 and 4, 8 carry the odd and even parts of
    ``-4 q^(1/3) omega(q^(1/2))`` and their negatives.
    """
    cutoff = resolve_cutoff(cutoff)
    f = ramanujan_f(cutoff + Fraction(1, 24)).shift(Fraction(-1, 24))
    omega_cutoff = math.floor(2 * (cutoff - Fraction(1, 3)))
    odd = {}
    even = {}
    if omega_cutoff >= 0:
        omega = ramanujan_omega(omega_cutoff)
        for e, c in omega.items():
            n = int(e)
            target = odd if n % 2 else even
            target[Fraction(1, 3) + Fraction(n, 2)] = -4 * c
    odd_part = RationalQSeries(odd, cutoff=cutoff)
    even_part = RationalQSeries(even, cutoff=cutoff)
    zero = RationalQSeries(cutoff=cutoff)
    components = [zero] * 12
    components[1] = components[7] = f
    components[5] = components[11] = -f
    components[2] = odd_part
    components[10] = -odd_part
    components[4] = even_part
    components[8] = -even_part
    return VectorQSeries(
        6, components, Fraction(1, 2), -1, rep=-1,
        metadata={'object': 'order 3 mock theta vector'})
