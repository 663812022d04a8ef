from fractions import Fraction
import json

from qmock.arith import gcd_part
from qmock.arith import isqrt_exact
from qmock.configuration import resolve_cutoff
from qmock import heckeops
from qmock import mapping
from qmock.mockforms import hurwitz_ideal_series
from qmock.mockforms import mock_theta_weight_half
from qmock.mockforms import mock_theta_weight_half_alt
from qmock.mockforms import mock_theta_weight_threehalf
from qmock.mockforms import mock_theta_weight_threehalf_alt
from qmock.mockforms import ramanujan_f
from qmock.mockforms import ramanujan_omega
from qmock.mockforms import ramanujan_vector
from qmock.mockforms.applicability import applies
from qmock.mockforms.weight_half import p51_nonsquare
from qmock.mockforms.weight_half import p51_square_alt
from qmock.mockforms.weight_half import p52_square
from qmock.qseries import pair_with_vector
from qmock.qseries import RationalQSeries
from qmock.qseries import scalarize
from qmock.qseries import tensor
from qmock.quadfield import unit_for_family
from qmock.testing import oracles
from qmock.testing import series_generator
from qmock.thetaeta import appell_f2
from qmock.thetaeta import eigenvector
from qmock.thetaeta import eisenstein_e2
from qmock.thetaeta import eta
from qmock.thetaeta import eta_power
from qmock.thetaeta import hurwitz_series
from qmock.thetaeta import tensor_power
from qmock.thetaeta import theta


DENOMINATOR_LEVELS = (1, 2, 3, 5, 6, 8, 18)
PAIRING_LEVELS = (1, 2, 3, 4, 5, 6, 7, 8, 24)

_MOCK_ETA3_PRINTED = (-1, 45, 231, 770)
_RAMANUJAN_F_PRINTED = (1, 1, -2, 3, -3, 3)
_RAMANUJAN_OMEGA_PRINTED = (1, 2, 3, 4, 6, 8)


class CheckResult(object):

    def __init__(self, check_id, cutoff, passed, witness=None, actual=None,
                 expected=None, asserted=True, detail=None):
        """Outcome of one identity or bound.

        Arguments:
            check_id (str): Name of the check.
            cutoff: Exponent through which the check ran.
            passed (bool): Outcome.
            witness: First failing exponent, or ``(component, exponent)``.
            actual: Value found at the witness.
            expected: Value expected at the witness.
            asserted (bool): False for checks that are only reported.
            detail (str): Free text.
        """

        self.check_id = check_id
        self.cutoff = Fraction(cutoff)
        self.passed = passed
        self.witness = witness
        self.actual = actual
        self.expected = expected
        self.asserted = asserted
        self.detail = detail

    @property
    def status(self):
        if not self.asserted:
            return 'holds' if self.passed else 'does not hold'
        return 'pass' if self.passed else 'fail'

    def to_dict(self):
        result = {
            'id': self.check_id,
            'status': self.status,
            'cutoff': str(self.cutoff),
            'asserted': self.asserted,
            'witness': None,
        }
        if self.witness is not None:
            result['witness'] = {
                'at': _format_witness(self.witness),
                'actual': str(self.actual),
                'expected': str(self.expected),
            }
        if self.detail:
            result['detail'] = self.detail
        return result


def _format_witness(witness):
    if isinstance(witness, tuple):
        return 'component {}, q^({})'.format(witness[0], witness[1])
    return 'q^({})'.format(witness)


class VerificationReport(object):
    """Checks of one suite. The suite passes when every asserted check does.
    """

    def __init__(self, suite, checks=None):
        self.suite = suite
        self.checks = list(checks or [])

    def add(self, check):
        self.checks.append(check)
        return check

    @property
    def passed(self):
        return all(c.passed for c in self.checks if c.asserted)

    @property
    def status(self):
        return 'pass' if self.passed else 'fail'

    def render_text(self):
        lines = ['suite {}: {}'.format(self.suite, self.status.upper())]
        for c in self.checks:
            line = '  [{}] {} (cutoff {})'.format(
                c.status.upper(), c.check_id, c.cutoff)
            if c.witness is not None:
                line += ': first difference at {}: {} != {}'.format(
                    _format_witness(c.witness), c.actual, c.expected)
            if c.detail:
                line += ' -- {}'.format(c.detail)
            lines.append(line)
        return '\n'.join(lines)

    def to_dict(self):
        return {
            'suite': self.suite,
            'status': self.status,
            'checks': [c.to_dict() for c in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _series_check(check_id, actual, expected, cutoff, asserted=True):
    cutoff = Fraction(cutoff)
    complete = min(actual.cutoff, expected.cutoff)
    if cutoff > complete:
        raise ValueError(
            'Check {} needs both series through q^{}, but they are complete '
            'through q^{} only'.format(check_id, cutoff, complete))
    witness = actual.first_difference(expected, cutoff)
    if witness is None:
        return CheckResult(check_id, cutoff, True, asserted=asserted)
    return CheckResult(
        check_id, cutoff, False, witness=witness,
        actual=actual.coefficient(witness),
        expected=expected.coefficient(witness), asserted=asserted)


def _vector_check(check_id, actual, expected, cutoff, asserted=True):
    witness = actual.first_difference(expected, cutoff)
    if witness is None:
        return CheckResult(check_id, cutoff, True, asserted=asserted)
    h, e = witness
    return CheckResult(
        check_id, cutoff, False, witness=witness,
        actual=actual.component(h).coefficient(e),
        expected=expected.component(h).coefficient(e), asserted=asserted)


def _list_check(check_id, cutoff, violations):
    if not violations:
        return CheckResult(check_id, cutoff, True)
    return CheckResult(
        check_id, cutoff, False, witness=violations[0],
        detail='{} violations'.format(len(violations)))


def check_series_equal(a, b, cutoff, check_id='series'):
    """Compares all coefficients with exponent at most ``cutoff``.

    >>> check_series_equal(eta(30), oracles.pentagonal_eta(30), 30).passed
    True
    """
    cutoff = resolve_cutoff(cutoff)
    return VerificationReport(
        'series', [_series_check(check_id, a, b, cutoff)])


def verify_eta_identities(cutoff=None):
    """Eta as pairings of unary theta functions with eigenvectors."""
    cutoff = resolve_cutoff(cutoff)
    report = VerificationReport('eta')
    theta6 = theta(6, 0, cutoff)
    theta2 = theta(2, 1, cutoff)
    theta3 = theta(3, 0, cutoff)
    report.add(_series_check(
        'theta6-v6', pair_with_vector(theta6, eigenvector('v6')),
        eta(cutoff) * 2, cutoff))
    report.add(_series_check(
        'theta2-v2', pair_with_vector(theta2, eigenvector('v2')),
        eta_power(3, cutoff) * 2, cutoff))
    report.add(_series_check(
        'theta3^2-v3', pair_with_vector(tensor(theta3, theta3),
                                        eigenvector('v3')),
        eta_power(2, cutoff) * 4, cutoff))
    report.add(_series_check(
        'theta3^4-v4', pair_with_vector(tensor_power(theta3, 4),
                                        eigenvector('v4')),
        eta_power(4, cutoff) * 16, cutoff))
    report.add(_series_check(
        'eta-pentagonal', eta(cutoff), oracles.pentagonal_eta(cutoff),
        cutoff))
    report.add(_series_check(
        'eta^3-theta2', eta_power(3, cutoff), theta2.component(1), cutoff))
    return report


def verify_hurwitz_identities(cutoff=None):
    """Generating series of Hurwitz class numbers against the two ideal
    sums and the scalarized weight 3/2 forms of level 1."""
    cutoff = resolve_cutoff(cutoff)
    report = VerificationReport('hurwitz')
    expected = hurwitz_series(cutoff)
    report.add(_series_check(
        'ideal-sum-Z[sqrt6]', hurwitz_ideal_series(6, cutoff), expected,
        cutoff))
    report.add(_series_check(
        'ideal-sum-Z[sqrt2]', hurwitz_ideal_series(2, cutoff), expected,
        cutoff))
    one = lambda h: 1  # NOQA
    for name, construction in (
            ('eta^-1-form', mock_theta_weight_threehalf),
            ('eta^-3-form', mock_theta_weight_threehalf_alt)):
        f = construction(1, cutoff / 4)
        report.add(_series_check(
            'scalarized-{}'.format(name),
            scalarize(f, one, 4) * Fraction(-1, 8), expected, cutoff))
    return report


def mock_eta3_series(cutoff=None):
    """``(E_2/24 - F_2) / eta^3`` complete through ``cutoff``."""
    cutoff = resolve_cutoff(cutoff)
    inner_cutoff = cutoff + Fraction(1, 8)
    inner = eisenstein_e2(inner_cutoff) / 24 - appell_f2(inner_cutoff)
    return (inner * eta_power(-3, cutoff)).truncate(cutoff)


def verify_mock_eta3(cutoff=None):
    cutoff = resolve_cutoff(cutoff)
    report = VerificationReport('mocketa3')
    series = mock_eta3_series(cutoff)
    printed = {}
    for i, c in enumerate(_MOCK_ETA3_PRINTED):
        printed[Fraction(-1, 8) + i] = Fraction(-c, 24)
    printed_cutoff = min(cutoff, Fraction(-1, 8) + len(printed) - 1)
    report.add(_series_check(
        'printed-coefficients', series.truncate(printed_cutoff),
        RationalQSeries(printed, cutoff=printed_cutoff), printed_cutoff))
    f = mock_theta_weight_half(2, cutoff)
    report.add(_series_check(
        'lattice-sum-component-1', f.component(1), series * 2, cutoff))
    unscaled = report.add(_series_check(
        'lattice-sum-component-1-unscaled', f.component(1), series, cutoff,
        asserted=False))
    unscaled.detail = 'component 1 is twice the mock eta^3 series'
    report.add(_series_check(
        'odd-symmetry', f.component(3), -f.component(1), cutoff))
    return report


def verify_ramanujan_f(cutoff=None):
    """Order 3 mock theta functions against the level 6 constructions."""
    cutoff = resolve_cutoff(cutoff)
    report = VerificationReport('ramanujan')
    low = min(cutoff, Fraction(len(_RAMANUJAN_F_PRINTED) - 1))
    if low >= 0:
        report.add(_series_check(
            'f-printed', ramanujan_f(low),
            RationalQSeries(dict(enumerate(_RAMANUJAN_F_PRINTED)),
                            cutoff=low), low))
        report.add(_series_check(
            'omega-printed', ramanujan_omega(low),
            RationalQSeries(dict(enumerate(_RAMANUJAN_OMEGA_PRINTED)),
                            cutoff=low), low))
    target = ramanujan_vector(cutoff)
    combinations = []
    for name, f in (('unit-region', mock_theta_weight_half(6, cutoff)),
                    ('lattice-sum', mock_theta_weight_half_alt(6, cutoff))):
        combination = (f.component(1) + f.component(7)) * 2
        combinations.append(combination)
        report.add(_series_check(
            'f-{}'.format(name), combination, target.component(1), cutoff))
        for h in (2, 4):
            report.add(_series_check(
                'omega-{}-component-{}'.format(name, h), f.component(h),
                target.component(h) / 4, cutoff))
        report.add(_vector_check(
            'vector-{}'.format(name),
            (f + heckeops.w_involution(f, 3)) * 2, target, cutoff))
    report.add(_series_check(
        'constructions-agree', combinations[0], combinations[1], cutoff))
    return report


def _integrality_check(check_id, f, bound, asserted=True):
    for h, component in enumerate(f.components):
        for e, c in component.items():
            if (c * bound).denominator != 1:
                return CheckResult(
                    check_id, f.cutoff, False, witness=(h, e), actual=c,
                    expected='a multiple of 1/{}'.format(bound),
                    asserted=asserted)
    return CheckResult(check_id, f.cutoff, True, asserted=asserted)


def verify_denominator_bounds(N_range=DENOMINATOR_LEVELS, cutoff=None):
    """Denominator bounds of the weight 1/2 constructions.

    ``6 sqrt(2N)`` bounds the denominators when ``2N`` is a square and
    ``|Tr(1 - eps_N)|`` otherwise. The bound ``24 gcd(N, 4)`` is only
    reported.
    """
    cutoff = resolve_cutoff(cutoff)
    report = VerificationReport('denominators')
    for N in N_range:
        s = isqrt_exact(2 * N)
        if s is not None:
            f = mock_theta_weight_half(N, cutoff)
            bound = 6 * s
            label = '6*sqrt(2N)'
        else:
            unit = unit_for_family(N, 'p51')
            f = p51_nonsquare(N, cutoff, unit=unit)
            bound = abs(int((1 - unit.unit).trace()))
            label = '|Tr(1-eps_N)|'
        report.add(_integrality_check(
            'N={} {}={}'.format(N, label, bound), f, bound))
        sharp = 24 * gcd_part(N, 4)
        report.add(_integrality_check(
            'N={} 24*N_4={}'.format(N, sharp), f, sharp, asserted=False))
    return report


def verify_hecke_algebra(cutoff=None, seed=42):
    """Identities, commutation, integrality and the W_c involution on
    seeded random integer series."""
    cutoff = resolve_cutoff(cutoff)
    report = VerificationReport('hecke')
    random_state = series_generator.default_random_state(seed)
    for sign in (-1, 1):
        k = Fraction(1, 2) if sign == -1 else Fraction(3, 2)
        for level in (2, 3):
            f = series_generator.random_vector_series(
                random_state, level, cutoff, sign=sign)
            tag = 'N={} k={}'.format(level, k)
            report.add(_vector_check(
                'U_1 {}'.format(tag), heckeops.u_operator(f, 1), f, cutoff))
            report.add(_vector_check(
                'V_1 {}'.format(tag), heckeops.v_operator(f, 1, k), f,
                cutoff))
            report.add(_vector_check(
                'script_V_1 {}'.format(tag), heckeops.script_v(f, 1, 1, k),
                f, cutoff))
            for d in (2, 3):
                for e in (2, 3):
                    left = heckeops.u_operator(
                        heckeops.v_operator(f, e, k), d)
                    right = heckeops.v_operator(
                        heckeops.u_operator(f, d), e, k)
                    report.add(_vector_check(
                        'U_{} V_{} = V_{} U_{} {}'.format(d, e, e, d, tag),
                        left, right, min(left.cutoff, right.cutoff)))
                    report.add(_integrality_check(
                        'U_{} V_{} integral {}'.format(d, e, tag), left, 1))
                    report.add(_list_check(
                        'U_{} V_{} symmetry {}'.format(d, e, tag),
                        left.cutoff, left.check_symmetry()))
    f = series_generator.random_vector_series(random_state, 6, cutoff)
    for c in (1, 2, 3, 6):
        twice = heckeops.w_involution(heckeops.w_involution(f, c), c)
        report.add(_vector_check(
            'W_{} involution N=6'.format(c), twice, f, cutoff))
    report.add(_vector_check(
        'W_1 = sign N=6', heckeops.w_involution(f, 1), f * f.sign, cutoff))
    expected = [0, 7, 2, 9, 4, 11, 6, 1, 8, 3, 10, 5]
    permutation = heckeops.w_permutation(6, 3)
    report.add(CheckResult(
        'sigma_3 permutation N=6', 0, permutation == expected,
        detail=None if permutation == expected else str(permutation)))
    return report


def verify_symmetry(cutoff=None, levels=range(1, 9)):
    """Symmetry law and exponent lattice of every applicable construction.
    """
    cutoff = resolve_cutoff(cutoff)
    report = VerificationReport('symmetry')
    for N in levels:
        for nu in (0, 1):
            f = theta(N, nu, cutoff)
            report.add(_list_check(
                'theta N={} nu={} symmetry'.format(N, nu), cutoff,
                f.check_symmetry()))
        for name, construction in sorted(mapping.constructions.items()):
            if not applies(construction, N):
                continue
            f = construction(N, cutoff)
            report.add(_list_check(
                '{} N={} symmetry'.format(name, N), cutoff,
                f.check_symmetry()))
            report.add(_list_check(
                '{} N={} exponents'.format(name, N), cutoff,
                f.check_exponent_lattice()))
    return report


def constant_term_pairing(f, g):
    """Coefficient of ``q^0`` in ``sum_h f_h g_h``."""
    if f.level != g.level:
        raise ValueError('Cannot pair level {} with level {}'.format(
            f.level, g.level))
    total = Fraction(0)
    for h in range(2 * f.level):
        total += (f.component(h) * g.component(h)).coefficient(0)
    return total


def _exact_divisors(N):
    return [c for c in range(1, N + 1)
            if N % c == 0 and gcd_part(c, N // c) == 1]


def _shadow_pairs(N):
    pairs = [(Fraction(3, 2), 0, mock_theta_weight_threehalf,
              mock_theta_weight_threehalf_alt)]
    if applies(p51_square_alt, N):
        pairs.append((Fraction(1, 2), 1, mock_theta_weight_half,
                      p51_square_alt))
    if applies(p52_square, N):
        pairs.append((Fraction(1, 2), 1, mock_theta_weight_half,
                      mock_theta_weight_half_alt))
    return pairs


def verify_shadow_pairings(cutoff=None, levels=PAIRING_LEVELS):
    """Constant terms of pairings with unary theta functions.

    Two constructions with the same shadow differ by a weakly holomorphic
    form, so their pairings with ``theta_N(tau; nu) | W_c`` have the same
    constant term. Only the principal parts and the constant terms enter,
    so the forms are built through ``q^0`` whatever ``cutoff`` is.
    """
    report = VerificationReport('pairings')
    for N in levels:
        for weight, nu, first, second in _shadow_pairs(N):
            f = first(N, 0)
            g = second(N, 0)
            theta_vector = theta(N, nu, 1)
            for c in _exact_divisors(N):
                twisted = heckeops.w_involution(theta_vector, c)
                actual = constant_term_pairing(f, twisted)
                expected = constant_term_pairing(g, twisted)
                passed = actual == expected
                report.add(CheckResult(
                    'k={} N={} W_{}'.format(weight, N, c), 0, passed,
                    witness=None if passed else Fraction(0),
                    actual=actual, expected=expected,
                    detail='{} against {}'.format(
                        f.metadata.get('variant'),
                        g.metadata.get('variant'))))
    return report


SUITES = {
    'eta': verify_eta_identities,
    'hurwitz': verify_hurwitz_identities,
    'ramanujan': verify_ramanujan_f,
    'mocketa3': verify_mock_eta3,
    'denominators': lambda cutoff: verify_denominator_bounds(
        DENOMINATOR_LEVELS, cutoff),
    'hecke': verify_hecke_algebra,
    'symmetry': verify_symmetry,
    'pairings': verify_shadow_pairings,
}


def run_suites(names, cutoff=None):
    if 'all' in names:
        names = sorted(SUITES)
    reports = []
    for name in names:
        if name not in SUITES:
            raise ValueError('Unknown suite {}; expected one of {}'.format(
                name, ', '.join(sorted(SUITES) + ['all'])))
        reports.append(SUITES[name](cutoff))
    return reports
