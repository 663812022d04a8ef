from fractions import Fraction
import itertools
import math


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def _is_scalar(value):
    return isinstance(value, (int, Fraction))


class RationalQSeries(object):
    """Truncated Laurent series in ``q`` with rational exponents.

    The exponents live on the lattice ``(1/exp_den) Z`` and every
    coefficient with exponent at most ``cutoff`` is known exactly. Nothing
    is known about the exponents beyond the cutoff.

    >>> s = RationalQSeries({Fraction(1, 8): 1, Fraction(9, 8): -3}, cutoff=2)
    >>> s.coefficient(Fraction(9, 8))
    Fraction(-3, 1)

    Args:
        terms (dict): Mapping from exponent to coefficient. Exponents above
            ``cutoff`` and zero coefficients are dropped.
        cutoff: The largest exponent through which the series is complete.
        exp_den (int): Minimum exponent denominator. It is enlarged to the
            lcm of all exponent denominators found in ``terms``.
    """

    def __init__(self, terms=None, cutoff=0, exp_den=None):
        cutoff = _as_fraction(cutoff)
        den = 1 if exp_den is None else int(exp_den)
        if den < 1:
            raise ValueError(
                'exp_den must be positive, but got {}'.format(exp_den))
        items = []
        for e, c in (terms or {}).items():
            e = _as_fraction(e)
            c = _as_fraction(c)
            if c == 0 or e > cutoff:
                continue
            den = _lcm(den, e.denominator)
            items.append((e, c))
        numerators = {}
        for e, c in items:
            key = e.numerator * (den // e.denominator)
            numerators[key] = numerators.get(key, 0) + c
        self.exp_den = den
        self.cutoff = cutoff
        self._terms = {k: v for k, v in numerators.items() if v != 0}

    @classmethod
    def _from_numerators(cls, terms, exp_den, cutoff):
        series = cls.__new__(cls)
        series.exp_den = exp_den
        series.cutoff = _as_fraction(cutoff)
        limit = series.cutoff * exp_den
        series._terms = {
            k: Fraction(v) for k, v in terms.items() if v != 0 and k <= limit}
        return series

    @classmethod
    def constant(cls, value, cutoff):
        return cls({0: value}, cutoff=cutoff)

    @classmethod
    def monomial(cls, exponent, coefficient=1, cutoff=None):
        exponent = _as_fraction(exponent)
        if cutoff is None:
            cutoff = exponent
        return cls({exponent: coefficient}, cutoff=cutoff)

    def items(self):
        """Returns ``(exponent, coefficient)`` pairs in increasing order."""
        den = self.exp_den
        return [(Fraction(k, den), c) for k, c in sorted(self._terms.items())]

    def numerator_items(self):
        return sorted(self._terms.items())

    def coefficient(self, exponent):
        exponent = _as_fraction(exponent)
        if exponent > self.cutoff:
            raise ValueError(
                'The coefficient of q^{} is unknown: the series is only '
                'complete through q^{}'.format(exponent, self.cutoff))
        scaled = exponent * self.exp_den
        if scaled.denominator != 1:
            return Fraction(0)
        return self._terms.get(scaled.numerator, Fraction(0))

    def valuation(self):
        """Least exponent with a nonzero coefficient, or None."""
        if not self._terms:
            return None
        return Fraction(min(self._terms), self.exp_den)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def with_exp_den(self, exp_den):
        if exp_den % self.exp_den:
            raise ValueError(
                'Cannot move exponents from denominator {} to {}'.format(
                    self.exp_den, exp_den))
        if exp_den == self.exp_den:
            return self
        factor = exp_den // self.exp_den
        return RationalQSeries._from_numerators(
            {k * factor: v for k, v in self._terms.items()}, exp_den,
            self.cutoff)

    def truncate(self, cutoff):
        cutoff = _as_fraction(cutoff)
        if cutoff > self.cutoff:
            raise ValueError(
                'Cannot extend a series complete through q^{} to q^{}'.format(
                    self.cutoff, cutoff))
        return RationalQSeries._from_numerators(
            self._terms, self.exp_den, cutoff)

    def shift(self, exponent):
        """Multiplies by ``q**exponent``."""
        exponent = _as_fraction(exponent)
        den = _lcm(self.exp_den, exponent.denominator)
        base = self.with_exp_den(den)
        offset = exponent.numerator * (den // exponent.denominator)
        return RationalQSeries._from_numerators(
            {k + offset: v for k, v in base._terms.items()}, den,
            self.cutoff + exponent)

    def rescale(self, c):
        """Substitutes ``q -> q**c`` for a positive integer ``c``."""
        if c < 1 or int(c) != c:
            raise ValueError(
                'The variable can only be rescaled by a positive integer, '
                'but got {}'.format(c))
        c = int(c)
        g = math.gcd(c, self.exp_den)
        den = self.exp_den // g
        factor = c // g
        return RationalQSeries._from_numerators(
            {k * factor: v for k, v in self._terms.items()}, den,
            self.cutoff * c)

    def _scale(self, value):
        value = _as_fraction(value)
        return RationalQSeries._from_numerators(
            {k: v * value for k, v in self._terms.items()}, self.exp_den,
            self.cutoff)

    def _coerce(self, other):
        if isinstance(other, RationalQSeries):
            return other
        if _is_scalar(other):
            return RationalQSeries.constant(other, self.cutoff)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        den = _lcm(self.exp_den, other.exp_den)
        a = self.with_exp_den(den)._terms
        b = other.with_exp_den(den)._terms
        terms = dict(a)
        for k, v in b.items():
            terms[k] = terms.get(k, 0) + v
        return RationalQSeries._from_numerators(
            terms, den, min(self.cutoff, other.cutoff))

    __radd__ = __add__

    def __neg__(self):
        return self._scale(-1)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return self._scale(other)
        if not isinstance(other, RationalQSeries):
            return NotImplemented
        den = _lcm(self.exp_den, other.exp_den)
        a = self.with_exp_den(den).numerator_items()
        b = other.with_exp_den(den).numerator_items()
        va = Fraction(a[0][0], den) if a else self.cutoff
        vb = Fraction(b[0][0], den) if b else other.cutoff
        cutoff = min(self.cutoff + vb, other.cutoff + va)
        limit = cutoff * den
        terms = {}
        for ka, ca in a:
            for kb, cb in b:
                k = ka + kb
                if k > limit:
                    break
                terms[k] = terms.get(k, 0) + ca * cb
        return RationalQSeries._from_numerators(terms, den, cutoff)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self._scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError('division of a series by zero')
            return self._scale(Fraction(1) / _as_fraction(other))
        if isinstance(other, RationalQSeries):
            return self * other.invert()
        return NotImplemented

    def invert(self):
        """Multiplicative inverse, complete through ``cutoff - 2 * v``."""
        if not self._terms:
            raise ValueError(
                'Cannot invert a series without a known nonzero coefficient')
        den = self.exp_den
        items = self.numerator_items()
        v, c0 = items[0]
        unit_terms = [(k - v, c / c0) for k, c in items[1:]]
        cutoff = self.cutoff - 2 * Fraction(v, den)
        top = math.floor((self.cutoff - Fraction(v, den)) * den)
        w = {0: Fraction(1)}
        for n in range(1, top + 1):
            total = 0
            for k, c in unit_terms:
                if k > n:
                    break
                wk = w.get(n - k)
                if wk:
                    total += c * wk
            if total:
                w[n] = -total
        return RationalQSeries._from_numerators(
            {n - v: c / c0 for n, c in w.items()}, den, cutoff)

    def power(self, r):
        r = int(r)
        if r < 0:
            return self.invert().power(-r)
        result = RationalQSeries.constant(1, self.cutoff)
        base = self
        first = True
        while r:
            if r & 1:
                result = base if first else result * base
                first = False
            r >>= 1
            if r:
                base = base * base
        return result

    def first_difference(self, other, cutoff=None):
        """Least exponent at which the two series differ, or None."""
        common = min(self.cutoff, other.cutoff)
        if cutoff is not None:
            cutoff = _as_fraction(cutoff)
            if cutoff > common:
                raise ValueError(
                    'Cannot compare through q^{}: the series are complete '
                    'through q^{} only'.format(cutoff, common))
            common = cutoff
        exponents = sorted(set(
            e for e, _ in self.items() + other.items() if e <= common))
        for e in exponents:
            if self.coefficient(e) != other.coefficient(e):
                return e
        return None

    def __eq__(self, other):
        if not isinstance(other, RationalQSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.items() == other.items()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        body = ' + '.join(
            '{}*q^({})'.format(c, e) for e, c in self.items()[:8])
        if len(self._terms) > 8:
            body += ' + ...'
        return 'RationalQSeries({}{}O(q^({})))'.format(
            body, ' + ' if body else '', self.cutoff)


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def invert(a):
    return a.invert()


def rescale_variable(a, c):
    return a.rescale(c)


class VectorQSeries(object):
    """Family of q-series indexed by ``h`` in ``Z/2NZ``.

    Attributes:
        level (int): ``N``; the components are indexed by ``0 .. 2N-1``.
        weight (Fraction): Declared weight.
        sign (int): ``a(-h, m) = sign * a(h, m)``.
        rep (int): ``+1`` for ``rho_N`` (exponents in ``h^2/4N + Z``) and
            ``-1`` for its conjugate (exponents in ``-h^2/4N + Z``).
        metadata (dict): Free-form description (proposition, unit, ...).
    """

    def __init__(self, level, components, weight, sign, rep=-1,
                 metadata=None):
        level = int(level)
        components = list(components)
        if level < 1:
            raise ValueError('level must be positive, but got {}'.format(
                level))
        if len(components) != 2 * level:
            raise ValueError(
                'A vector series of level {} needs {} components, but got '
                '{}'.format(level, 2 * level, len(components)))
        if sign not in (1, -1) or rep not in (1, -1):
            raise ValueError('sign and rep must be +1 or -1')
        cutoff = min(c.cutoff for c in components)
        den = 1
        for c in components:
            den = _lcm(den, c.exp_den)
        self.level = level
        self.weight = _as_fraction(weight)
        self.sign = sign
        self.rep = rep
        self.cutoff = cutoff
        self.exp_den = den
        self.components = tuple(
            c.truncate(cutoff).with_exp_den(den) for c in components)
        self.metadata = dict(metadata or {})

    @classmethod
    def zeros(cls, level, cutoff, weight, sign, rep=-1, metadata=None):
        return cls(level, [RationalQSeries(cutoff=cutoff)
                           for _ in range(2 * level)],
                   weight, sign, rep=rep, metadata=metadata)

    def component(self, h):
        return self.components[h % (2 * self.level)]

    def _like(self, components, metadata=None):
        return VectorQSeries(
            self.level, components, self.weight, self.sign, rep=self.rep,
            metadata=self.metadata if metadata is None else metadata)

    def map_components(self, fn):
        return self._like([fn(c) for c in self.components])

    def truncate(self, cutoff):
        return self.map_components(lambda c: c.truncate(cutoff))

    def _check_compatible(self, other):
        if (self.level, self.rep) != (other.level, other.rep):
            raise ValueError(
                'Vector series of level {} (rep {}) and level {} (rep {}) '
                'cannot be combined'.format(
                    self.level, self.rep, other.level, other.rep))

    def __add__(self, other):
        if not isinstance(other, VectorQSeries):
            return NotImplemented
        self._check_compatible(other)
        return self._like(
            [a + b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return self.map_components(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, VectorQSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, RationalQSeries):
            return self.map_components(lambda c: c * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.map_components(lambda c: c / other)
        return NotImplemented

    def check_symmetry(self):
        """Returns ``(h, exponent)`` pairs violating the symmetry law."""
        violations = []
        modulus = 2 * self.level
        for h in range(modulus):
            a = self.components[h]
            b = self.components[(-h) % modulus]
            for e, c in a.items():
                if b.coefficient(e) != self.sign * c:
                    violations.append((h, e))
        return violations

    def check_exponent_lattice(self):
        """Returns ``(h, exponent)`` pairs off the lattice ``rep*h^2/4N+Z``.
        """
        violations = []
        for h, component in enumerate(self.components):
            offset = Fraction(self.rep * h * h, 4 * self.level)
            for e, _ in component.items():
                if (e - offset).denominator != 1:
                    violations.append((h, e))
        return violations

    def first_difference(self, other, cutoff=None):
        """Least ``(h, exponent)`` at which two vector series differ."""
        self._check_compatible(other)
        found = None
        for h, (a, b) in enumerate(zip(self.components, other.components)):
            e = a.first_difference(b, cutoff)
            if e is not None and (found is None or e < found[1]):
                found = (h, e)
        return found

    def __eq__(self, other):
        if not isinstance(other, VectorQSeries):
            return NotImplemented
        return ((self.level, self.weight, self.sign, self.rep) ==
                (other.level, other.weight, other.sign, other.rep) and
                self.components == other.components)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __repr__(self):
        return ('VectorQSeries(level={}, weight={}, sign={}, rep={}, '
                'cutoff={})'.format(self.level, self.weight, self.sign,
                                    self.rep, self.cutoff))


def project_component(f, h):
    return f.component(h)


class GroupRingVector(object):
    """Rational vector in the group ring of a finite abelian group.

    The group is ``Z/m_1 x ... x Z/m_r`` given by ``moduli``; elements are
    tuples of residues. Single integers are accepted as keys when the group
    is cyclic.
    """

    def __init__(self, moduli, coefficients):
        if isinstance(moduli, int):
            moduli = (moduli,)
        self.moduli = tuple(int(m) for m in moduli)
        coeffs = {}
        for key, value in coefficients.items():
            key = self.normalize(key)
            coeffs[key] = coeffs.get(key, 0) + _as_fraction(value)
        self.coefficients = {k: v for k, v in coeffs.items() if v != 0}

    def normalize(self, key):
        if isinstance(key, int):
            key = (key,)
        if len(key) != len(self.moduli):
            raise ValueError(
                'Element {} does not belong to the group with moduli '
                '{}'.format(key, self.moduli))
        return tuple(k % m for k, m in zip(key, self.moduli))

    def __getitem__(self, key):
        return self.coefficients.get(self.normalize(key), Fraction(0))

    def items(self):
        return sorted(self.coefficients.items())

    def support(self):
        return sorted(self.coefficients)

    def tensor(self, other):
        return GroupRingVector(
            self.moduli + other.moduli,
            {a + b: ca * cb for a, ca in self.coefficients.items()
             for b, cb in other.coefficients.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingVector):
            return NotImplemented
        return (self.moduli == other.moduli and
                self.coefficients == other.coefficients)

    __hash__ = None

    def __repr__(self):
        return 'GroupRingVector({}, {})'.format(self.moduli, self.items())


class TensorQSeries(object):
    """Tensor product of vector series over the product index group.

    Components are products of the factors' components. They are computed
    on demand and cached; ``materialize`` builds all of them, which grows
    exponentially with the number of factors.
    """

    def __init__(self, factors):
        self.factors = tuple(factors)
        if not self.factors:
            raise ValueError('A tensor product needs at least one factor')
        self.moduli = tuple(2 * f.level for f in self.factors)
        self._cache = {}

    def component(self, key):
        key = tuple(k % m for k, m in zip(key, self.moduli))
        if key not in self._cache:
            product = None
            for factor, h in zip(self.factors, key):
                c = factor.component(h)
                product = c if product is None else product * c
            self._cache[key] = product
        return self._cache[key]

    def materialize(self):
        return {key: self.component(key) for key in
                itertools.product(*[range(m) for m in self.moduli])}


def tensor(*factors):
    return TensorQSeries(factors)


def pair_with_vector(f, v):
    """Hermitian pairing ``sum_h f_h * v(h)`` with a rational vector.

    Args:
        f (VectorQSeries or TensorQSeries): The series.
        v (GroupRingVector): The vector; its group must be the index group
            of ``f``.

    Returns:
        RationalQSeries
    """
    if isinstance(f, VectorQSeries):
        moduli = (2 * f.level,)
        lookup = lambda key: f.component(key[0])  # NOQA
        cutoff = f.cutoff
    elif isinstance(f, TensorQSeries):
        moduli = f.moduli
        lookup = f.component
        cutoff = None
    else:
        raise TypeError('Cannot pair {} with a group ring vector'.format(
            type(f)))
    if moduli != v.moduli:
        raise ValueError(
            'Index group {} of the series does not match the group {} of '
            'the vector'.format(moduli, v.moduli))
    total = None
    for key, coefficient in v.items():
        term = lookup(key) * coefficient
        total = term if total is None else total + term
    if total is None:
        if cutoff is None:
            cutoff = min(lookup((0,) * len(moduli)).cutoff, 0)
        total = RationalQSeries(cutoff=cutoff)
    return total


def scalarize(f, phi, c):
    """Adds up the components weighted by ``phi(h mod N)`` and rescales.

    Args:
        f (VectorQSeries): Series of level ``N``.
        phi: Callable, mapping or sequence over ``Z/NZ``.
        c (int): Rescaling ``q -> q**c`` of the result.
    """
    N = f.level
    total = None
    for h in range(2 * N):
        r = h % N
        if callable(phi):
            weight = phi(r)
        else:
            weight = phi[r]
        term = f.component(h) * _as_fraction(weight)
        total = term if total is None else total + term
    return total.rescale(c)
