#!/usr/bin/env python

import nose
import json
import logging
import os
import shutil
import tempfile
from io import StringIO
from mock import patch
from pyspgr import cli_tool
from pyspgr.constants import *
from nose.tools import ok_, eq_, raises, assert_raises


def run(*argv):
    with patch('sys.stdout', new_callable=StringIO) as out:
        with patch('sys.stderr', new_callable=StringIO):
            ret = cli_tool.main(list(argv))
    return ret, out.getvalue()

def test_equation():
    ret, out = run('equation', '--i-prime', '3', '--n', '4')
    eq_(ret, EXIT_OK)
    eq_(json.loads(out), [
        {'index': [1, 3, 8], 'coeff': '-1'},
        {'index': [2, 3, 7], 'coeff': '-1'},
        {'index': [3, 4, 5], 'coeff': '1'},
    ])

def test_equation_text():
    ret, out = run('equation', '--i-prime', '3', '--n', '4',
            '--format', 'text')
    eq_(out, '-p138 - p237 + p345\n')

def test_equation_low_dimension():
    ret, out = run('equation', '--i-prime', '', '--n', '4', '--d', '1')
    eq_(ret, EXIT_OK)
    eq_(json.loads(out), [])
    ret, out = run('equation', '--i-prime', '3', '--n', '4', '--d', '1')
    eq_(ret, EXIT_USAGE)
    eq_(out, '')

def test_count_erratum_note():
    ret, out = run('count', '--j', '1,2,3', '--i', '1,3,7', '--two-n', '8')
    eq_(ret, EXIT_OK)
    data = json.loads(out)
    eq_(data['n'], 1)
    ok_('erratum' in data['note'])
    ret, out = run('count', '--j', '1,3,7', '--i', '1,3,7', '--two-n', '8')
    ok_('note' not in json.loads(out))

def test_count_not_symplectic():
    ret, out = run('count', '--j', '1,2,3', '--i', '2,3,7', '--two-n', '8')
    eq_(ret, EXIT_USAGE)
    eq_(out, '')

def test_classify_csv():
    ret, out = run('classify', '--d', '2', '--two-n', '4')
    eq_(ret, EXIT_OK)
    lines = out.splitlines()
    eq_(lines[0], 'index,dim_a,dim_c,n_self,n_id,r1,r2,q,r,lci,'
            'tangent_dim_a,tangent_codim_c,smooth_a,smooth_c')
    eq_(len(lines), 5)
    ok_(lines[1].startswith('"1,2",0,0,0,0,,inf,'))

def test_classify_json():
    ret, out = run('classify', '--d', '2', '--two-n', '4', '--format', 'json')
    eq_(len(json.loads(out)), 4)

def test_enumerate():
    ret, out = run('enumerate', '--two-n', '8', '--d', '3', '--symplectic',
            '--format', 'text')
    eq_(len(out.splitlines()), 32)
    ret, out = run('enumerate', '--two-n', '4', '--d', '2', '--below', '2,4')
    eq_(json.loads(out), [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]])

def test_enumerate_flags():
    ret, out = run('enumerate', '--two-n', '4', '--kind', 'flag',
            '--symplectic', '--format', 'text')
    eq_(len(out.splitlines()), 8)

def test_enumerate_needs_d():
    ret, out = run('enumerate', '--two-n', '4')
    eq_(ret, EXIT_USAGE)

def test_restrict():
    ret, out = run('restrict', '--i-prime', '1', '--i', '1,3,7', '--two-n',
            '8')
    data = json.loads(out)
    eq_(data['zero'], False)
    eq_(len(data['section']), 2)

def test_tangent():
    ret, out = run('tangent', '--i', '5,6', '--two-n', '8')
    data = json.loads(out)
    eq_(data['smooth_a'], True)
    eq_(data['smooth_c'], False)
    eq_(data['tangent_codim_c'], 0)
    eq_(data['smooth_c_rectangle'], False)
    ok_('trichotomy' not in data)
    ret, out = run('tangent', '--i', '1,5', '--two-n', '8')
    data = json.loads(out)
    eq_(data['smooth_c'], True)
    eq_(data['smooth_c_rectangle'], True)
    eq_(data['smooth_c_printed'], False)

def test_flag():
    ret, out = run('flag', '--w', '3,1,7', '--two-n', '8')
    data = json.loads(out)
    eq_((data['dim_a'], data['dim_c']), (6, 5))
    ok_('lci' not in data)
    ret, out = run('flag', '--w', '5,6,7,8', '--two-n', '8')
    eq_(json.loads(out)['lci'], True)

def test_sample():
    ret, out = run('sample', '--kind', 'isotropic', '--d', '2', '--two-n', '4',
            '--samples', '2', '--seed', '5')
    points = json.loads(out)
    eq_(len(points), 2)
    eq_(len(points[0]), 4)
    eq_(run('sample', '--kind', 'isotropic', '--d', '2', '--two-n', '4',
            '--samples', '2', '--seed', '5')[1], out)

def test_sample_schubert():
    ret, out = run('sample', '--kind', 'schubert', '--i', '1,3,7', '--two-n',
            '8')
    eq_(ret, EXIT_OK)
    eq_(json.loads(out)[0][6], ['0', '0', '1'])

def test_verify_pass():
    ret, out = run('verify', '--suite', 'lemma')
    eq_(ret, EXIT_OK)
    ok_(out.startswith('PASS lemma'))

@patch('pyspgr.verify.count_nonzero', return_value=2)
def test_verify_failure_exit_code(count_nonzero):
    ret, out = run('verify', '--suite', 'examples', '--suite', 'lemma')
    eq_(ret, EXIT_VERIFICATION)
    lines = out.splitlines()
    ok_(lines[0].startswith('FAIL examples'))
    ok_(lines[1].startswith('PASS lemma'))

def test_usage_errors():
    for argv in (['count', '--j', '1,x', '--i', '1', '--two-n', '8'],
            ['classify', '--d', '2', '--two-n', '5'],
            ['verify', '--suite', 'nonsense'],
            ['count', '--j', '1,2,3', '--i', '7,3,1', '--two-n', '8'],
            ['tangent', '--i', '6,5', '--two-n', '8'],
            ['restrict', '--i-prime', '1,1', '--i', '1,3,7', '--two-n',
                '8']):
        with assert_raises(SystemExit) as cm:
            run(*argv)
        eq_(cm.exception.code, EXIT_USAGE)

def test_no_command():
    ret, out = run()
    eq_(ret, EXIT_USAGE)

@patch.dict('os.environ', {'SPGR_THREADS': '0'})
def test_bad_thread_count():
    ret, out = run('classify', '--d', '2', '--two-n', '4')
    eq_(ret, EXIT_USAGE)

def test_out_file():
    tmp = tempfile.mkdtemp()
    try:
        path = os.path.join(tmp, 'e.json')
        ret, out = run('equation', '--i-prime', '3', '--n', '4', '--out', path)
        eq_(out, '')
        with open(path, encoding='utf-8') as f:
            eq_(len(json.load(f)), 3)
    finally:
        shutil.rmtree(tmp)

def test_verbose():
    log = logging.getLogger('pyspgr')
    level = log.level
    try:
        run('-v', 'count', '--j', '1,3,7', '--i', '1,3,7', '--two-n', '8')
        eq_(log.level, logging.DEBUG)
    finally:
        log.setLevel(level)

if __name__ == '__main__':
    nose.main()
