#!/usr/bin/env python

import nose
from mock import patch
from pyspgr.constants import *
from pyspgr.equations import SignedIdentityReport
from pyspgr.sampler import SampleConfig
from pyspgr.errors import VerificationError
from pyspgr.verify import (SUITES, SuiteResult, run_suite, run_suites,
        _Checker)
from nose.tools import ok_, eq_, raises, assert_raises
from nose.plugins.attrib import attr


def test_suites_pass():
    for name, two_n_max, samples in (('examples', 8, 1),
            ('identities', 4, 3), ('lemma', 8, 1), ('span', 6, 5),
            ('counts', 6, 1), ('tangent', 8, 1), ('flags', 4, 8),
            ('schubert', 6, 3)):
        result = run_suite(name, two_n_max, samples, SampleConfig(seed=1))
        ok_(result.passed, result.line())
        ok_(result.checks > 0)
        eq_(result.counterexample, None)

@attr('slow')
def test_suites_pass_in_gr_10():
    for name in ('counts', 'tangent'):
        result = run_suite(name, 10, 1, SampleConfig(seed=1))
        ok_(result.passed, result.line())

def test_unpinned_sign_fails():
    check = _Checker()
    rep = SignedIdentityReport('flag-relation', True, None, 3, MODE_SAMPLED)
    check.report(rep)
    with assert_raises(VerificationError) as cm:
        check.report(rep, -1)
    ok_('no sign pinned' in str(cm.exception))
    rep = SignedIdentityReport('flag-relation', True, 1, 3, MODE_SAMPLED)
    with assert_raises(VerificationError):
        check.report(rep, -1)

def test_run_suites_all():
    results = run_suites(['all'], 4, 2)
    eq_([r.name for r in results], list(SUITES))
    ok_(all(r.passed for r in results))

def test_run_suites_selection():
    results = run_suites(['lemma', 'examples'], 4, 2)
    eq_([r.name for r in results], ['lemma', 'examples'])

@patch('pyspgr.verify.count_nonzero', return_value=2)
def test_failure_reports_counterexample(count_nonzero):
    result = run_suite('examples')
    ok_(not result.passed)
    ok_('N(137,137)' in result.counterexample)
    ok_(result.line().startswith('FAIL examples'))
    eq_(result.to_json()['passed'], False)

@patch('pyspgr.verify.e_span_rank', return_value=0)
def test_span_failure(e_span_rank):
    result = run_suite('span', 4, 5)
    ok_(not result.passed)
    eq_(result.checks, 1)

def test_result_line():
    eq_(SuiteResult('lemma', True, 12).line(), 'PASS lemma (12 checks)')
    eq_(SuiteResult('span', False, 3, 'rank').line(),
            'FAIL span after 3 checks: rank')

if __name__ == '__main__':
    nose.main()
