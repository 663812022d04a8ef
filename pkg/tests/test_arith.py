from fractions import Fraction
import math

import pytest
from sympy import primerange

from qmock import arith


@pytest.mark.parametrize('a,n,expected', [
    (-4, 1, 1), (-4, 3, -1), (-4, 5, 1), (-4, 2, 0), (-4, -1, -1),
    (12, 1, 1), (12, 5, -1), (12, 7, -1), (12, 11, 1), (12, 3, 0),
    (5, 2, -1), (1, 2, 1), (8, 2, 0), (2, 0, 0), (1, 0, 1),
])
def test_kronecker(a, n, expected):
    assert arith.kronecker(a, n) == expected


def test_kronecker_is_periodic_for_discriminants():
    for n in range(1, 50):
        assert arith.kronecker(-4, n) == arith.kronecker(-4, n + 4)
        assert arith.kronecker(12, n) == arith.kronecker(12, n + 12)


@pytest.mark.parametrize('a', [-4, 12, 5, -3, 8, 2, -7, 1])
def test_kronecker_is_multiplicative(a):
    for m in range(1, 31):
        for n in range(1, 31):
            assert arith.kronecker(a, m * n) == (
                arith.kronecker(a, m) * arith.kronecker(a, n))


def test_kronecker_zero_pattern():
    for n in range(-100, 101):
        assert (arith.kronecker(-4, n) == 0) == (n % 2 == 0)
        assert (arith.kronecker(12, n) == 0) == (math.gcd(n, 12) > 1)


def test_kronecker_emits_no_deprecation_warning(recwarn):
    arith.kronecker(5, 7)
    arith.kronecker(12, 35)
    assert not [w for w in recwarn
                if issubclass(w.category, DeprecationWarning)]


@pytest.mark.parametrize('k,x,expected', [
    (1, Fraction(5, 4), Fraction(-1, 4)),
    (1, Fraction(-1, 4), Fraction(1, 4)),
    (2, 0, Fraction(1, 6)),
    (2, Fraction(1, 2), Fraction(-1, 12)),
    (2, Fraction(3, 2), Fraction(-1, 12)),
    (3, Fraction(1, 2), 0),
    (3, Fraction(1, 4), Fraction(3, 64)),
])
def test_periodic_bernoulli(k, x, expected):
    assert arith.periodic_bernoulli(k, x) == expected


def test_periodic_bernoulli_invalid_index():
    with pytest.raises(ValueError):
        arith.periodic_bernoulli(4, Fraction(1, 2))


@pytest.mark.parametrize('k', [1, 2, 3])
def test_periodic_bernoulli_is_periodic(random_state, k):
    for _ in range(50):
        x = Fraction(int(random_state.randint(-1000, 1000)),
                     int(random_state.randint(1, 60)))
        value = arith.periodic_bernoulli(k, x)
        assert arith.periodic_bernoulli(k, x + 1) == value
        assert arith.periodic_bernoulli(k, x - 3) == value


def test_periodic_bernoulli_distribution():
    # B_1 is -1/2 at the integers, so only the nonzero residues cancel
    for M in range(1, 51):
        inner = sum(arith.periodic_bernoulli(1, Fraction(b, M))
                    for b in range(1, M))
        assert inner == 0
        assert inner + arith.periodic_bernoulli(1, 0) == Fraction(-1, 2)


def test_sigma1():
    assert arith.sigma1(0) == Fraction(-1, 24)
    assert arith.sigma1(1) == 1
    assert arith.sigma1(6) == 12
    assert arith.sigma1(12) == 28
    with pytest.raises(ValueError):
        arith.sigma1(-1)


def test_sigma1_of_primes():
    for p in primerange(2, 101):
        assert arith.sigma1(p) == p + 1


@pytest.mark.parametrize('n,expected', [
    (1, 1), (2, -1), (4, 0), (6, 1), (12, 0), (30, -1)])
def test_mobius(n, expected):
    assert arith.mobius(n) == expected


def test_squarefree_kernel():
    assert arith.squarefree_kernel(1) == (1, 1)
    assert arith.squarefree_kernel(12) == (2, 3)
    assert arith.squarefree_kernel(18) == (3, 2)
    assert arith.squarefree_kernel(30) == (1, 30)
    with pytest.raises(ValueError):
        arith.squarefree_kernel(0)


def test_square_helpers():
    assert arith.isqrt_exact(36) == 6
    assert arith.isqrt_exact(12) is None
    assert arith.isqrt_exact(-4) is None
    assert arith.is_square(0)
    assert not arith.is_square(2)
    assert arith.ceil_sqrt(10) == 4
    assert arith.ceil_sqrt(9) == 3
    assert arith.ceil_sqrt(0) == 0


def test_gcd_part():
    assert arith.gcd_part(12, 4) == 4
    assert arith.gcd_part(6, 4) == 2
    assert arith.gcd_part(5, 4) == 1
    with pytest.raises(ValueError):
        arith.gcd_part(0, 4)


def test_sgn():
    assert [arith.sgn(x) for x in (-3, 0, Fraction(1, 2))] == [-1, 0, 1]
