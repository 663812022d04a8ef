from fractions import Fraction
import json

import pytest

from qmock.mockforms import ideal_sums
from qmock.mockforms import weight_half
from qmock.mockforms import weight_threehalf
from qmock.qseries import RationalQSeries
from qmock import thetaeta
from qmock import verify


def test_eta_suite(verify_cutoff):
    report = verify.verify_eta_identities(verify_cutoff)
    assert report.passed, report.render_text()
    assert len(report.checks) == 6


def test_hurwitz_suite(verify_cutoff):
    report = verify.verify_hurwitz_identities(verify_cutoff)
    assert report.passed, report.render_text()


def test_hurwitz_suite_at_zero():
    assert verify.verify_hurwitz_identities(0).passed


def test_mock_eta3_suite(verify_cutoff):
    report = verify.verify_mock_eta3(verify_cutoff)
    assert report.passed, report.render_text()


def test_mock_eta3_printed_values():
    s = verify.mock_eta3_series(3)
    assert [s.coefficient(Fraction(-1, 8) + n) for n in range(4)] == [
        Fraction(1, 24), Fraction(-45, 24), Fraction(-231, 24),
        Fraction(-770, 24)]


def test_ramanujan_suite(verify_cutoff):
    report = verify.verify_ramanujan_f(verify_cutoff)
    assert report.passed, report.render_text()


def test_denominator_suite(verify_cutoff):
    report = verify.verify_denominator_bounds(cutoff=verify_cutoff)
    assert report.passed, report.render_text()
    reported = [c for c in report.checks if not c.asserted]
    assert len(reported) == len(verify.DENOMINATOR_LEVELS)
    assert all(c.status in ('holds', 'does not hold') for c in reported)


def test_hecke_suite_is_deterministic(verify_cutoff):
    first = verify.verify_hecke_algebra(verify_cutoff, seed=42)
    second = verify.verify_hecke_algebra(verify_cutoff, seed=42)
    assert first.passed, first.render_text()
    assert first.to_dict() == second.to_dict()


def test_symmetry_suite():
    report = verify.verify_symmetry(2)
    assert report.passed, report.render_text()


def test_hurwitz_mutation_is_detected(monkeypatch):
    def perturbed(cutoff):
        return thetaeta.hurwitz_series(cutoff) + RationalQSeries(
            {3: 1}, cutoff=cutoff)

    monkeypatch.setattr(verify, 'hurwitz_series', perturbed)
    report = verify.verify_hurwitz_identities(6)
    assert not report.passed
    failed = [c for c in report.checks if not c.passed]
    assert len(failed) == 4
    assert failed[0].witness == 3
    assert failed[0].actual == Fraction(1, 3)
    assert failed[0].expected == Fraction(4, 3)
    assert 'first difference at q^(3)' in report.render_text()


def test_appell_mutation_is_detected(monkeypatch):
    monkeypatch.setattr(
        verify, 'appell_f2', lambda c: thetaeta.appell_f2(c) * 2)
    report = verify.verify_mock_eta3(3)
    assert not report.passed


def test_check_series_equal():
    report = verify.check_series_equal(
        thetaeta.eta(10), verify.oracles.pentagonal_eta(10), 10)
    assert report.passed
    with pytest.raises(ValueError):
        verify.check_series_equal(
            thetaeta.eta(5), thetaeta.eta(10), 10)


def test_report_rendering():
    report = verify.verify_eta_identities(5)
    text = report.render_text()
    assert text.splitlines()[0] == 'suite eta: PASS'
    content = json.loads(report.to_json())
    assert content['suite'] == 'eta'
    assert content['status'] == 'pass'
    assert {c['id'] for c in content['checks']} >= {'theta6-v6', 'theta2-v2'}
    assert all(c['witness'] is None for c in content['checks'])


def test_run_suites():
    reports = verify.run_suites(['eta', 'mocketa3'], 2)
    assert [r.suite for r in reports] == ['eta', 'mocketa3']
    with pytest.raises(ValueError):
        verify.run_suites(['nope'], 2)


def test_suite_names():
    assert sorted(verify.SUITES) == [
        'denominators', 'eta', 'hecke', 'hurwitz', 'mocketa3', 'pairings',
        'ramanujan', 'symmetry']


def test_mock_eta3_unscaled_component_is_only_reported():
    report = verify.verify_mock_eta3(3)
    assert report.passed, report.render_text()
    unscaled, = [c for c in report.checks
                 if c.check_id == 'lattice-sum-component-1-unscaled']
    assert not unscaled.asserted
    assert unscaled.status == 'does not hold'
    assert unscaled.witness == Fraction(-1, 8)
    assert unscaled.actual == Fraction(1, 12)
    assert unscaled.expected == Fraction(1, 24)


def test_pairing_suite(verify_cutoff):
    report = verify.verify_shadow_pairings(verify_cutoff)
    assert report.passed, report.render_text()
    ids = {c.check_id for c in report.checks}
    assert {'k=3/2 N=2 W_1', 'k=3/2 N=6 W_3', 'k=1/2 N=2 W_1',
            'k=1/2 N=6 W_2', 'k=3/2 N=24 W_8'} <= ids


@pytest.mark.parametrize('N,nu,c,expected', [
    (2, 0, 1, 1),
    (6, 0, 1, Fraction(7, 3)),
    (6, 0, 3, Fraction(5, 3)),
    (2, 1, 1, Fraction(1, 6)),
    (6, 1, 1, Fraction(5, 6)),
    (6, 1, 3, Fraction(1, 6)),
])
def test_constant_term_pairing_values(N, nu, c, expected):
    twisted = verify.heckeops.w_involution(thetaeta.theta(N, nu, 1), c)
    if nu == 0:
        forms = (verify.mock_theta_weight_threehalf(N, 0),
                 verify.mock_theta_weight_threehalf_alt(N, 0))
    else:
        forms = (verify.mock_theta_weight_half(N, 0),
                 weight_half.p51_square_alt(N, 0) if N == 2
                 else verify.mock_theta_weight_half_alt(N, 0))
    for f in forms:
        assert verify.constant_term_pairing(f, twisted) == expected


def test_constant_term_pairing_levels():
    with pytest.raises(ValueError):
        verify.constant_term_pairing(
            thetaeta.theta(2, 0, 1), thetaeta.theta(3, 0, 1))


def _negated(function):
    return lambda *args: -function(*args)


@pytest.mark.parametrize('module,name,suite', [
    (weight_half, 'p51_square_weight', 'mocketa3'),
    (weight_half, 'p51_square_boundary', 'mocketa3'),
    (weight_half, 'p51_region_weight', 'ramanujan'),
    (weight_half, 'p52_square_weight', 'ramanujan'),
    (weight_half, 'p52_square_boundary', 'ramanujan'),
    (weight_threehalf, 'p61_square_weight', 'pairings'),
    (weight_threehalf, 'p61_square_boundary', 'pairings'),
    (weight_threehalf, 'p61_region_weight', 'hurwitz'),
    (weight_threehalf, 'p62_square_weight', 'pairings'),
    (weight_threehalf, 'p62_square_boundary', 'pairings'),
    (weight_threehalf, 'p62_region_weight', 'hurwitz'),
])
def test_weight_sign_mutation_is_detected(monkeypatch, module, name, suite):
    monkeypatch.setattr(module, name, _negated(getattr(module, name)))
    report, = verify.run_suites([suite], 3)
    assert not report.passed


@pytest.mark.parametrize('radicand', [6, 2])
def test_ideal_weight_sign_mutation_is_detected(monkeypatch, radicand):
    weight, eta_exponent = ideal_sums._RINGS[radicand]
    monkeypatch.setitem(
        ideal_sums._RINGS, radicand, (_negated(weight), eta_exponent))
    report = verify.verify_hurwitz_identities(3)
    assert not report.passed
