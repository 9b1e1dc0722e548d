#!/usr/bin/env python

import nose
from math import comb
from mock import patch
from pyspgr.combinat import (IndexSet, FlagWord, enumerate_indices,
        flag_enumerate, length_a, length_c)
from pyspgr.constants import *
from pyspgr.errors import SpgrError, VerificationError
from pyspgr.schubert import *
from nose.tools import ok_, eq_, raises, assert_raises
from nose.plugins.attrib import attr


def I(values, two_n=8):
    return IndexSet(values, two_n)

def test_counts_example():
    i = I((1, 3, 7))
    eq_(count_nonzero(i, i), 1)
    eq_(count_nonzero(I((1, 2, 3)), i), 1)
    eq_(n_id(i), 1)
    eq_(n_id_closed_form(i), 1)
    eq_(codim_pairs(i), 1)

def test_local_generators():
    i = I((1, 3, 7))
    gens = local_generators(i, i)
    eq_([(s, t) for s, t, _ in gens], [(2, 3)])
    eq_(str(gens[0][2]), 'p127 + p136')

def test_local_generators_not_comparable():
    with assert_raises(SpgrError) as cm:
        local_generators(I((2, 3, 4)), I((1, 3, 7)))
    eq_(cm.exception.errno, ERR_NOT_COMPARABLE)

def test_count_needs_symplectic():
    with assert_raises(SpgrError) as cm:
        count_nonzero(I((1, 2, 3)), I((2, 3, 7)))
    eq_(cm.exception.errno, ERR_NOT_SYMPLECTIC)

def test_n_id():
    eq_(n_id(I((2, 6, 8))), 3)
    eq_(n_id_closed_form(I((2, 6, 8))), 3)

def test_closed_form_inapplicable():
    with assert_raises(SpgrError) as cm:
        n_id_closed_form(I((1, 2, 3)))
    eq_(cm.exception.errno, ERR_FORMULA_INAPPLICABLE)

def test_r_and_q():
    i = I((1, 3, 7))
    eq_((r1(i), r2(i), q(i)), (2, 3, 2))
    eq_((r1(I((1, 2, 3))), r2(I((1, 2, 3)))), (None, None))
    eq_(r2(I((1, 3, 4))), None)

def test_counts_agree_with_dimensions():
    for two_n in (4, 6, 8):
        for d in range(1, two_n // 2 + 1):
            for i in enumerate_indices(d, two_n, symplectic_only=True):
                n_self = count_nonzero(i, i)
                eq_(n_self, codim_pairs(i))
                eq_(n_self, length_a(i) - length_c(i))
                ok_(n_id(i) >= n_self)
                eq_(is_lci(i), n_id(i) == n_self)

def test_is_lci():
    ok_(is_lci(I((1, 2, 3))))
    ok_(is_lci(I((1, 3, 7))))
    ok_(not is_lci(I((2, 6, 8))))
    ok_(is_lci(I((6, 7, 8))))

def test_flag_lci_pattern():
    ok_(flag_lci_pattern(FlagWord((1, 2, 3, 4), 8)))
    ok_(flag_lci_pattern(FlagWord((5, 6, 7, 8), 8)))
    ok_(flag_lci_pattern(FlagWord((4, 6, 7, 8), 8)))
    ok_(flag_is_lci(FlagWord((5, 6, 7, 8), 8)))
    ok_(not flag_lci_pattern(FlagWord((3, 6, 7, 8), 8)))

def test_flag_is_lci_needs_symplectic():
    with assert_raises(SpgrError) as cm:
        flag_is_lci(FlagWord((3, 6, 7, 8), 8))
    eq_(cm.exception.errno, ERR_NOT_SYMPLECTIC)

@raises(SpgrError)
def test_flag_is_lci_needs_full_word():
    flag_is_lci(FlagWord((1, 2), 8))

def test_flag_lci_matches_pattern():
    for n in (2, 3):
        for w in flag_enumerate(n, symplectic_only=True):
            eq_(flag_is_lci(w), flag_lci_pattern(w))

def test_tangent_example():
    i = I((1, 3, 7))
    eq_(tangent_dim_a(i), 8)
    eq_(tangent_codim_c_direct(i), 1)
    eq_(tangent_codim_c_closed_form(i), 1)
    ok_(not smooth_a(i))
    ok_(not smooth_c(i))

def test_smoothness_witness():
    i = I((5, 6))
    ok_(smooth_a(i))
    eq_(tangent_dim_a(i), length_a(i))
    ok_(not smooth_c(i))
    ok_(smooth_c_general(i) is False)

def test_identity_is_smooth():
    i = I((1, 2))
    ok_(smooth_a(i))
    ok_(smooth_c(i))
    eq_(tangent_codim_c_closed_form(i), 0)

def test_trichotomy_range():
    eq_(smooth_c_trichotomy(I((1, 3, 7))), None)
    eq_(smooth_c_trichotomy(I((1, 2, 3, 4))), None)
    eq_(smooth_c_trichotomy(I((5, 6))), False)

def test_smooth_c_rectangle_with_r_equal_d():
    i = I((1, 5))
    eq_((r1(i), q(i)), (2, 4))
    ok_(smooth_c(i))
    ok_(smooth_c_rectangle(i))
    eq_(smooth_c_trichotomy(i), False)
    rec = classify_index(i)
    ok_(rec.smooth_c)
    eq_(rec.smooth_c_printed, False)
    eq_(rec.disagreements, ['smooth_c_printed'])
    eq_(rec.to_json()['disagreements'], ['smooth_c_printed'])

def test_smooth_c_rectangle_in_gr_10():
    for values in ((1, 6), (1, 7), (1, 2, 6)):
        i = I(values, 10)
        ok_(smooth_c(i))
        ok_(smooth_c_rectangle(i))
        eq_(smooth_c_trichotomy(i), False)
    eq_(smooth_c_rectangle(I((5, 6))), False)
    eq_(smooth_c_rectangle(I((1, 3, 7))), None)

def test_n_id_closed_form_overcounts():
    for values in ((2, 3, 5, 7), (2, 3, 6, 7)):
        i = I(values, 10)
        eq_((r1(i), r2(i), q(i)), (1, 3, 4))
        eq_(n_id(i), 3)
        eq_(n_id_closed_form(i), 4)
        rec = classify_index(i)
        eq_(rec.n_id, 3)
        eq_(rec.n_id_formula, 4)
        eq_(rec.disagreements, ['n_id_formula'])
        ok_(not rec.lci)

def test_classify_keeps_disagreements_as_data():
    records = classify(4, 10)
    eq_(len(records), 80)
    misses = [str(r.index) for r in records
            if 'n_id_formula' in r.disagreements]
    ok_('2,3,5,7' in misses)
    ok_('2,3,6,7' in misses)

@attr('slow')
def test_classify_gr_10():
    for d in range(1, 6):
        records = classify(d, 10)
        eq_(len(records), 2 ** d * comb(5, d))
        for rec in records:
            eq_(rec.n_self, rec.dim_a - rec.dim_c)
            ok_(rec.n_id >= rec.n_self)
            eq_(rec.lci, rec.n_id == rec.n_self)
            if 'smooth_c_printed' in rec.disagreements:
                eq_(rec.r1, d)

@attr('slow')
def test_tangent_gr_10():
    for d in range(1, 6):
        for i in enumerate_indices(d, 10, symplectic_only=True):
            eq_(tangent_codim_c_direct(i), tangent_codim_c_closed_form(i))
            eq_(smooth_a(i), tangent_dim_a(i) == length_a(i))
            eq_(smooth_c(i), smooth_c_general(i))
            rect = smooth_c_rectangle(i)
            ok_(rect is None or rect == smooth_c(i))

def test_lci_intrinsic():
    ok_(lci_intrinsic(I((6, 7, 8))))
    ok_(not lci_intrinsic(I((1, 3, 7))))

def test_tangent_closed_form_everywhere():
    for two_n in (4, 6, 8):
        for d in range(1, two_n // 2 + 1):
            for i in enumerate_indices(d, two_n, symplectic_only=True):
                eq_(tangent_codim_c_direct(i), tangent_codim_c_closed_form(i))
                eq_(smooth_a(i), tangent_dim_a(i) == length_a(i))
                eq_(smooth_c(i), smooth_c_general(i))

def test_classify():
    records = classify(2, 4)
    eq_(len(records), 4)
    eq_([str(r.index) for r in records], ['1,2', '1,3', '2,4', '3,4'])
    eq_(len(classify(3, 8)), 32)

def test_classification_record_row():
    rec = classify_index(I((1, 2, 3)))
    eq_(len(rec.row()), len(ClassificationRecord.CSV_HEADER))
    eq_(rec.row()[:9], ['1,2,3', '0', '0', '0', '0', '', 'inf', '6', ''])
    rec = classify_index(I((1, 3, 7)))
    eq_(rec.row(), ['1,3,7', '5', '4', '1', '1', '2', '3', '2', '2', 'true',
            '8', '1', 'false', 'false'])
    eq_(rec.to_json()['index'], [1, 3, 7])

def test_classify_index_reports_failed_check():
    with patch('pyspgr.schubert.n_id', return_value=0):
        with assert_raises(VerificationError):
            classify_index(I((1, 3, 7)))

if __name__ == '__main__':
    nose.main()
