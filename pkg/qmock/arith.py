from fractions import Fraction
import math

from sympy import divisors
from sympy import factorint
try:
    from sympy.functions.combinatorial.numbers import jacobi_symbol
except ImportError:
    from sympy.ntheory import jacobi_symbol


Rational = Fraction

_BERNOULLI = {
    1: (Fraction(-1, 2), Fraction(1), Fraction(0), Fraction(0)),
    2: (Fraction(1, 6), Fraction(-1), Fraction(1), Fraction(0)),
    3: (Fraction(0), Fraction(1, 2), Fraction(-3, 2), Fraction(1)),
}


def kronecker(a, n):
    """Kronecker symbol ``(a/n)`` for arbitrary integers.

    Follows the standard extension of the Jacobi symbol: ``(a/-1)`` is the
    sign of ``a`` and ``(a/2)`` depends on ``a mod 8``.

    >>> kronecker(-4, 3)
    -1
    >>> kronecker(12, 11)
    1

    Args:
        a (int): The upper argument.
        n (int): The lower argument.

    Returns:
        int: One of -1, 0, 1.
    """
    a = int(a)
    n = int(n)
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(a % n, n))


def sgn(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def sigma1(m):
    """Divisor sum with the Eisenstein convention ``sigma1(0) = -1/24``."""
    if m < 0:
        raise ValueError(
            'sigma1 is defined for nonnegative integers, but got {}'.format(m))
    if m == 0:
        return Fraction(-1, 24)
    return Fraction(sum(divisors(m)))


def periodic_bernoulli(k, x):
    """One-periodic Bernoulli function ``B_k({x})``.

    Args:
        k (int): Index, one of 1, 2, 3.
        x (Fraction): Argument, reduced modulo 1 before evaluation.

    Returns:
        Fraction
    """
    if k not in _BERNOULLI:
        raise ValueError(
            'periodic Bernoulli functions are available for k in (1, 2, 3), '
            'but got k={}'.format(k))
    x = Fraction(x)
    x -= math.floor(x)
    value = Fraction(0)
    for coefficient in reversed(_BERNOULLI[k]):
        value = value * x + coefficient
    return value


def mobius(n):
    if n <= 0:
        raise ValueError(
            'mobius is defined for positive integers, but got {}'.format(n))
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def gcd_part(N, d):
    if N < 1 or d < 1:
        raise ValueError(
            'gcd_part needs positive arguments, but got N={}, d={}'.format(
                N, d))
    return math.gcd(N, d)


def isqrt_exact(n):
    """Returns the square root of ``n`` if it is a perfect square, else None.
    """
    if n < 0:
        return None
    root = math.isqrt(n)
    if root * root == n:
        return root
    return None


def is_square(n):
    return isqrt_exact(n) is not None


def squarefree_kernel(n):
    """Splits ``n`` as ``f**2 * d`` with ``d`` squarefree.

    Returns:
        tuple: ``(f, d)``.
    """
    if n < 1:
        raise ValueError(
            'squarefree_kernel needs a positive integer, but got {}'.format(n))
    f = 1
    d = 1
    for p, e in factorint(n).items():
        f *= p ** (e // 2)
        d *= p ** (e % 2)
    return f, d


def ceil_sqrt(n):
    """Smallest integer ``r >= 0`` with ``r * r >= n``."""
    if n <= 0:
        return 0
    root = math.isqrt(n)
    return root if root * root == n else root + 1
