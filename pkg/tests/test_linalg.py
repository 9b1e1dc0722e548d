#!/usr/bin/env python

import nose
import numpy as np
from fractions import Fraction
from pyspgr.constants import *
from pyspgr.errors import SpgrError
from pyspgr.linalg import (RatMatrix, MPoly, det, minor, rank, kernel_basis,
        solve, random_solution, rat, rat_str, poly_det, det_cofactor)
from nose.tools import ok_, eq_, raises, assert_raises


def M(rows):
    return RatMatrix(rows)

def test_rat():
    eq_(rat('1/2'), Fraction(1, 2))
    eq_(rat(3), Fraction(3))
    eq_(rat_str(Fraction(3)), '3')
    eq_(rat_str(Fraction(-1, 2)), '-1/2')

def test_rat_parse_error():
    for value in ('x', '1/0', None):
        with assert_raises(SpgrError) as cm:
            rat(value)
        eq_(cm.exception.errno, ERR_PARSE)

def test_matrix_shape():
    m = M([[1, 2, 3], [4, 5, 6]])
    eq_(m.shape, (2, 3))
    eq_(m[1, 2], 6)
    eq_(m.column(1), (2, 5))
    eq_(m.transpose().shape, (3, 2))
    eq_(RatMatrix.from_columns([[1, 4], [2, 5], [3, 6]]), m)
    eq_(m.to_json(), [['1', '2', '3'], ['4', '5', '6']])

@raises(SpgrError)
def test_matrix_ragged():
    M([[1, 2], [3]])

def test_multiply():
    m = M([[1, 2], [3, 4]])
    eq_(RatMatrix.identity(2) * m, m)
    eq_(m * m, M([[7, 10], [15, 22]]))

def test_det():
    eq_(det(M([[1, 2], [3, 4]])), -2)
    eq_(det(M([[0, 1], [1, 0]])), -1)
    eq_(det(M([[Fraction(1, 2), 1], [1, 4]])), 1)
    eq_(det(RatMatrix.zeros(3, 3)), 0)
    eq_(det(M([[2, 0, 1], [1, 3, 2], [1, 1, 1]])), 0)
    eq_(det(M([[2, 0, 1], [1, 3, 2], [1, 1, 2]])), 6)

def test_det_matches_cofactor():
    m = M([[3, -1, 2, 0], [1, 4, -2, 5], [0, 2, 1, -3], [7, 0, 1, 1]])
    eq_(det(m), det_cofactor(m.to_rows()))

@raises(SpgrError)
def test_det_not_square():
    det(M([[1, 2, 3]]))

def test_minor_is_one_based():
    m = M([[1, 0], [0, 1], [2, 3], [4, 5]])
    eq_(minor(m, (1, 2)), 1)
    eq_(minor(m, (3, 4)), -2)
    eq_(m.minor((1, 3)), 3)

def test_rank():
    eq_(rank(M([[1, 2], [2, 4]])), 1)
    eq_(rank(RatMatrix.identity(3)), 3)
    eq_(rank(RatMatrix.zeros(2, 3)), 0)
    eq_(rank(M([[0, 1, 2], [0, 2, 4], [1, 0, 0]])), 2)

def test_kernel_basis():
    basis = kernel_basis(M([[1, 2, 3]]))
    eq_(basis, [(-2, 1, 0), (-3, 0, 1)])
    eq_(kernel_basis(RatMatrix.identity(2)), [])

def test_kernel_vectors_are_annihilated():
    m = M([[1, 2, 0, 1], [0, 1, 1, 1], [1, 3, 1, 2]])
    basis = kernel_basis(m)
    eq_(len(basis), 4 - rank(m))
    for v in basis:
        eq_(m * RatMatrix.from_columns([v]), RatMatrix.zeros(3, 1))

def test_solve():
    eq_(solve(M([[1, 1], [1, -1]]), [3, 1]), [2, 1])
    eq_(solve(M([[2, 4]]), [2]), [1, 0])

def test_solve_inconsistent():
    with assert_raises(SpgrError) as cm:
        solve(M([[1, 1], [1, 1]]), [1, 2])
    eq_(cm.exception.errno, ERR_INCONSISTENT_SYSTEM)

def test_random_solution():
    rng = np.random.default_rng(0)
    a = M([[1, 1, 1]])
    for _ in range(5):
        x = random_solution(a, rng, 5, [6])
        eq_(sum(x), 6)
        ok_(all(isinstance(v, Fraction) for v in x))

def test_inverse():
    m = M([[2, 1], [1, 1]])
    eq_(m.inverse(), M([[1, -1], [-1, 2]]))
    eq_(m * m.inverse(), RatMatrix.identity(2))

def test_inverse_singular():
    with assert_raises(SpgrError) as cm:
        M([[1, 2], [2, 4]]).inverse()
    eq_(cm.exception.errno, ERR_SINGULAR_CHART)

def test_mpoly_arithmetic():
    names = ('x', 'y')
    x = MPoly.variable(names, 'x')
    y = MPoly.variable(names, 'y')
    eq_((x + y) * (x - y), x * x - y * y)
    eq_(x - x, 0)
    ok_((x - x).is_zero())
    eq_((2 * x * y + 1).degree, 2)
    eq_(str(x * y - 1), 'x*y - 1')
    eq_(((x + 1) * (y - 2)).evaluate({'x': 2, 'y': Fraction(1, 2)}),
            Fraction(-9, 2))

@raises(SpgrError)
def test_mpoly_unknown_variable():
    MPoly.variable(('x',), 'z')

@raises(SpgrError)
def test_mpoly_mixed_variables():
    MPoly.variable(('x',), 'x') + MPoly.variable(('y',), 'y')

def test_poly_det():
    names = ('a', 'b')
    a = MPoly.variable(names, 'a')
    b = MPoly.variable(names, 'b')
    eq_(poly_det([[a, b], [b, a]]), a * a - b * b)

def random_matrix(rng, rows, cols, bound=4):
    """Entries ``a/b`` with ``|a| <= bound`` and ``1 <= b <= 3``."""
    return M([[Fraction(int(rng.integers(-bound, bound + 1)),
            int(rng.integers(1, 4))) for _ in range(cols)]
            for _ in range(rows)])

def test_det_is_multiplicative():
    rng = np.random.default_rng(1)
    for size in range(1, 6):
        for _ in range(4):
            a = random_matrix(rng, size, size)
            b = random_matrix(rng, size, size)
            eq_(det(a * b), det(a) * det(b))

def test_bareiss_matches_cofactor_random():
    rng = np.random.default_rng(2)
    for size in range(1, 7):
        for _ in range(5):
            m = random_matrix(rng, size, size)
            eq_(det(m), det_cofactor(m.to_rows(), Fraction(0), Fraction(1)))

def test_rank_nullity():
    rng = np.random.default_rng(3)
    for rows, cols in ((1, 3), (2, 5), (3, 3), (4, 2), (3, 6)):
        for inner in range(1, min(rows, cols) + 1):
            m = random_matrix(rng, rows, inner) * \
                    random_matrix(rng, inner, cols)
            basis = kernel_basis(m)
            eq_(rank(m) + len(basis), cols)
            ok_(rank(m) <= inner)
            for v in basis:
                eq_(m * RatMatrix.from_columns([v]),
                        RatMatrix.zeros(rows, 1))

def test_poly_det_commutes_with_evaluation():
    rng = np.random.default_rng(4)
    for size in range(1, 4):
        names = tuple('x%d%d' % (r, c) for r in range(size)
                for c in range(size))
        rows = [[MPoly.variable(names, 'x%d%d' % (r, c))
                for c in range(size)] for r in range(size)]
        poly = poly_det(rows)
        for _ in range(3):
            m = random_matrix(rng, size, size)
            values = dict(('x%d%d' % (r, c), m[r, c]) for r in range(size)
                    for c in range(size))
            eq_(poly.evaluate(values), det(m))

if __name__ == '__main__':
    nose.main()
