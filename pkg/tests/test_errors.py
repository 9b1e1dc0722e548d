#!/usr/bin/env python

import nose
import pickle
from pyspgr.constants import *
from pyspgr.errors import (SpgrError, VerificationError, error_string,
        raise_error, raise_error_if)
from nose.tools import ok_, eq_, raises, assert_raises


def test_error_string():
    eq_(error_string(ERR_NOT_SYMPLECTIC), 'ERR_NOT_SYMPLECTIC')
    eq_(error_string(ERR_VERIFICATION_FAILED), 'ERR_VERIFICATION_FAILED')
    eq_(error_string(4711), 'ERR_UNKNOWN')

def test_error_codes_are_distinct():
    codes = [v for k, v in globals().items() if k.startswith('ERR_')]
    eq_(len(codes), len(set(codes)))
    ok_(all(c < 0 for c in codes))

def test_spgr_error_fields():
    e = SpgrError(ERR_PARITY, 'tau=3, m=0')
    ok_(isinstance(e, ValueError))
    eq_(e.errno, ERR_PARITY)
    eq_(e.strerror, 'ERR_PARITY')
    eq_(str(e), 'ERR_PARITY: tau=3, m=0')
    eq_(str(SpgrError(ERR_PARSE)), 'ERR_PARSE')

def test_raise_error_picks_class():
    with assert_raises(VerificationError) as cm:
        raise_error(ERR_VERIFICATION_FAILED, 'mismatch')
    eq_(cm.exception.errno, ERR_VERIFICATION_FAILED)
    eq_(cm.exception.detail, 'mismatch')
    with assert_raises(SpgrError) as cm:
        raise_error(ERR_SINGULAR_CHART)
    ok_(not isinstance(cm.exception, VerificationError))

@raises(SpgrError)
def test_raise_error_if_true():
    raise_error_if(True, ERR_INVALID_INDEX, 'bad')

def test_raise_error_if_false():
    raise_error_if(False, ERR_INVALID_INDEX, 'bad')

def test_errors_pickle():
    e = pickle.loads(pickle.dumps(VerificationError('lhs != rhs')))
    ok_(isinstance(e, VerificationError))
    eq_(e.detail, 'lhs != rhs')
    eq_(e.errno, ERR_VERIFICATION_FAILED)
    e = pickle.loads(pickle.dumps(SpgrError(ERR_PARSE, 'x')))
    eq_((e.errno, e.detail), (ERR_PARSE, 'x'))

if __name__ == '__main__':
    nose.main()
