# Copyright (c) 2026  pyspgr developers
#
# This library is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# This library is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this library; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA

"""Exact linear algebra over the rationals.

Rationals are :class:`fractions.Fraction`. Determinants and ranks are
computed fraction free on integer matrices obtained by clearing the row
denominators, so intermediate values stay minors of the input.
"""

import logging
from fractions import Fraction
from math import lcm

from .constants import (ERR_SHAPE_MISMATCH, ERR_INCONSISTENT_SYSTEM,
        ERR_PARSE, ERR_SINGULAR_CHART)
from .errors import raise_error, raise_error_if

log = logging.getLogger(__name__)

Rat = Fraction


def rat(value):
    """Convert ints, fractions and ``"p/q"`` strings to :class:`Rat`."""
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise_error(ERR_PARSE, 'could not convert %r to a rational' % (value,))


def rat_str(value):
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%d/%d' % (value.numerator, value.denominator)


def _integer_rows(rows):
    """Scale every row by the lcm of its denominators."""
    result = []
    for row in rows:
        scale = lcm(*(v.denominator for v in row)) if row else 1
        result.append([int(v * scale) for v in row])
    return result


def _bareiss_det(a):
    size = len(a)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[size - 1][size - 1]


def _echelon(a, cols):
    """Fraction free row echelon form of the integer matrix `a`, in place.

    Returns the pivot columns; the first ``len(pivots)`` rows of `a` then
    span the row space.
    """
    rows = len(a)
    pivots = []
    r = 0
    prev = 1
    for c in range(cols):
        if r == rows:
            break
        p = next((k for k in range(r, rows) if a[k][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        pivots.append(c)
        r += 1
    return pivots


def _rref(rows, cols):
    """Reduced row echelon form over the rationals.

    Returns ``(reduced_rows, pivots)`` with one row per pivot.
    """
    a = _integer_rows(rows)
    pivots = _echelon(a, cols)
    red = [[Fraction(v) for v in a[k]] for k in range(len(pivots))]
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        pivot = red[k][c]
        red[k] = [v / pivot for v in red[k]]
        for i in range(k):
            f = red[i][c]
            if f:
                red[i] = [x - f * y for x, y in zip(red[i], red[k])]
    return red, pivots


class RatMatrix(object):
    """Immutable dense matrix of rationals, stored row major.

    Entries are addressed 0-based with ``m[r, c]``; :meth:`minor` takes the
    1-based row labels of an :class:`~pyspgr.combinat.IndexSet`.
    """

    def __init__(self, rows, cols=None):
        rows = tuple(tuple(rat(v) for v in row) for row in rows)
        if cols is None:
            raise_error_if(not rows, ERR_SHAPE_MISMATCH,
                    'column count needed for a matrix without rows')
            cols = len(rows[0])
        raise_error_if(any(len(row) != cols for row in rows),
                ERR_SHAPE_MISMATCH, 'ragged rows for %d columns' % cols)
        self._rows = rows
        self._cols = cols

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, size):
        return cls([[int(r == c) for c in range(size)] for r in range(size)],
                size)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if rows is None:
            raise_error_if(not columns, ERR_SHAPE_MISMATCH,
                    'row count needed for a matrix without columns')
            rows = len(columns[0])
        raise_error_if(any(len(c) != rows for c in columns),
                ERR_SHAPE_MISMATCH, 'ragged columns for %d rows' % rows)
        return cls([[c[r] for c in columns] for r in range(rows)],
                len(columns))

    @property
    def rows(self):
        return len(self._rows)

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return self.rows, self._cols

    def __getitem__(self, key):
        r, c = key
        return self._rows[r][c]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return 'RatMatrix(%r)' % (self.to_json(),)

    def row(self, r):
        return self._rows[r]

    def column(self, c):
        return tuple(row[c] for row in self._rows)

    def to_rows(self):
        return [list(row) for row in self._rows]

    def transpose(self):
        return RatMatrix([self.column(c) for c in range(self._cols)],
                self.rows)

    def submatrix(self, rows, cols):
        """Rows and columns picked by 0-based position."""
        cols = list(cols)
        return RatMatrix([[self._rows[r][c] for c in cols] for r in rows],
                len(cols))

    def __mul__(self, other):
        raise_error_if(self._cols != other.rows, ERR_SHAPE_MISMATCH,
                'cannot multiply %dx%d by %dx%d' % (self.shape + other.shape))
        other_cols = [other.column(c) for c in range(other.cols)]
        return RatMatrix([[sum(x * y for x, y in zip(row, col))
                for col in other_cols] for row in self._rows], other.cols)

    def to_json(self):
        return [[rat_str(v) for v in row] for row in self._rows]

    def minor(self, row_set):
        """Determinant of the rows labelled by `row_set` (1-based)."""
        labels = tuple(row_set)
        raise_error_if(len(labels) != self._cols, ERR_SHAPE_MISMATCH,
                '%d rows selected from a matrix with %d columns'
                % (len(labels), self._cols))
        raise_error_if(any(r < 1 or r > self.rows for r in labels),
                ERR_SHAPE_MISMATCH, 'row labels %r out of range 1..%d'
                % (labels, self.rows))
        return det(self.submatrix([r - 1 for r in labels],
                range(self._cols)))

    def inverse(self):
        raise_error_if(self.rows != self._cols, ERR_SHAPE_MISMATCH,
                'cannot invert a %dx%d matrix' % self.shape)
        size = self._cols
        augmented = [list(row) + [Fraction(int(r == c)) for c in range(size)]
                for r, row in enumerate(self._rows)]
        red, pivots = _rref(augmented, 2 * size)
        raise_error_if(pivots[:size] != list(range(size)) or len(red) < size,
                ERR_SINGULAR_CHART, 'matrix is singular')
        return RatMatrix([row[size:] for row in red], size)


def det(m):
    """Exact determinant by fraction free Bareiss elimination."""
    raise_error_if(m.rows != m.cols, ERR_SHAPE_MISMATCH,
            'determinant of a %dx%d matrix' % m.shape)
    scales = 1
    a = []
    for row in m.to_rows():
        scale = lcm(*(v.denominator for v in row)) if row else 1
        scales *= scale
        a.append([int(v * scale) for v in row])
    return Fraction(_bareiss_det(a), scales)


def minor(m, row_set):
    return m.minor(row_set)


def rank(m):
    a = _integer_rows(m.to_rows())
    return len(_echelon(a, m.cols))


def kernel_basis(m):
    """Basis of ``{v : m v = 0}``, one vector per free column, ascending."""
    red, pivots = _rref(m.to_rows(), m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(a, b):
    """A particular solution of ``a x = b`` with all free variables 0."""
    raise_error_if(len(b) != a.rows, ERR_SHAPE_MISMATCH,
            'right hand side of length %d for %d equations'
            % (len(b), a.rows))
    augmented = [list(row) + [rat(v)] for row, v in zip(a.to_rows(), b)]
    red, pivots = _rref(augmented, a.cols + 1)
    raise_error_if(pivots and pivots[-1] == a.cols, ERR_INCONSISTENT_SYSTEM,
            'system of %d equations in %d unknowns has no solution'
            % a.shape)
    x = [Fraction(0)] * a.cols
    for row, c in zip(red, pivots):
        x[c] = row[a.cols]
    return x


def random_solution(a, rng, bound, b=None):
    """A random element of ``{x : a x = b}`` (``b = 0`` by default).

    The particular solution from :func:`solve` is shifted by an integer
    combination of :func:`kernel_basis` with coefficients drawn from
    ``[-bound, bound]`` by the :class:`numpy.random.Generator` `rng`.
    """
    if b is None:
        b = [0] * a.rows
    x = solve(a, b)
    for v in kernel_basis(a):
        c = int(rng.integers(-bound, bound + 1))
        if c:
            x = [xi + c * vi for xi, vi in zip(x, v)]
    return tuple(x)


class MPoly(object):
    """Sparse polynomial with rational coefficients.

    Terms map exponent tuples (one exponent per entry of `variables`) to
    nonzero coefficients. Polynomials over different variable lists do not
    mix.
    """
    __slots__ = ('variables', 'terms')

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        self.terms = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            raise_error_if(len(exps) != len(self.variables),
                    ERR_SHAPE_MISMATCH, 'exponent %r for %d variables'
                    % (exps, len(self.variables)))
            coeff = rat(coeff)
            if coeff:
                self.terms[exps] = coeff

    @classmethod
    def constant(cls, variables, value):
        return cls(variables, {(0,) * len(tuple(variables)): value})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        exps = tuple(int(v == name) for v in variables)
        raise_error_if(sum(exps) != 1, ERR_SHAPE_MISMATCH,
                'unknown variable %r' % (name,))
        return cls(variables, {exps: 1})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            raise_error_if(other.variables != self.variables,
                    ERR_SHAPE_MISMATCH, 'polynomials over different variables')
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.variables, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return MPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.variables,
                {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(self.variables, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def evaluate(self, values):
        """Substitute rationals; `values` maps variable names to numbers."""
        point = []
        for name in self.variables:
            raise_error_if(name not in values, ERR_SHAPE_MISMATCH,
                    'no value for variable %r' % (name,))
            point.append(rat(values[name]))
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for x, e in zip(point, exps):
                if e:
                    term *= x ** e
            total += term
        return total

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            mono = '*'.join(v if e == 1 else '%s^%d' % (v, e)
                    for v, e in zip(self.variables, exps) if e)
            if not mono:
                body = rat_str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = '%s*%s' % (rat_str(abs(coeff)), mono)
            sign = '-' if coeff < 0 else '+'
            parts.append((sign, body))
        head = ('-' if parts[0][0] == '-' else '') + parts[0][1]
        return ' '.join([head] + ['%s %s' % p for p in parts[1:]])

    def __repr__(self):
        return 'MPoly(%s)' % self


def det_cofactor(rows, zero=0, one=1):
    """Laplace expansion along the top row with memoized minors.

    Works for any entries supporting ``+``, ``-``, ``*`` and comparison with
    0, in particular :class:`MPoly`.
    """
    size = len(rows)
    raise_error_if(any(len(row) != size for row in rows), ERR_SHAPE_MISMATCH,
            'cofactor determinant of a non-square matrix')
    memo = {}

    def expand(k, cols):
        if k == size:
            return one
        if cols in memo:
            return memo[cols]
        total = zero
        for pos, c in enumerate(cols):
            entry = rows[k][c]
            if entry == 0:
                continue
            term = entry * expand(k + 1, cols[:pos] + cols[pos + 1:])
            total = total + term if pos % 2 == 0 else total - term
        memo[cols] = total
        return total

    return expand(0, tuple(range(size)))


def poly_det(rows):
    """Symbolic determinant of a square matrix of :class:`MPoly`."""
    raise_error_if(not rows, ERR_SHAPE_MISMATCH,
            'symbolic determinant needs at least one row')
    variables = rows[0][0].variables
    return det_cofactor(rows, MPoly(variables), MPoly.constant(variables, 1))
