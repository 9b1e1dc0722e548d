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

"""Points of Gr(d,2n) and of flag varieties, Plücker coordinates and
degree one sections.

Rows are labelled ``1..2n`` and columns ``1..d`` throughout, matching the
labels of :class:`~pyspgr.combinat.IndexSet`.
"""

import logging
from fractions import Fraction

from .combinat import IndexSet, enumerate_indices
from .constants import (ERR_SHAPE_MISMATCH, ERR_INVALID_COLUMN,
        ERR_RANK_DEFICIENT, ERR_SINGULAR_CHART, ERR_PARSE)
from .errors import raise_error, raise_error_if
from .linalg import RatMatrix, MPoly, rank, rat, rat_str, poly_det
from .pool import ordered_map

log = logging.getLogger(__name__)


class SubspaceMatrix(object):
    """A ``2n x d`` matrix of full column rank presenting a point V of
    Gr(d,2n)."""

    def __init__(self, mat):
        if not isinstance(mat, RatMatrix):
            mat = RatMatrix(mat)
        raise_error_if(mat.rows % 2, ERR_SHAPE_MISMATCH,
                'a presentation needs an even number of rows, got %d'
                % mat.rows)
        raise_error_if(rank(mat) != mat.cols, ERR_RANK_DEFICIENT,
                'columns of the %dx%d presentation are dependent' % mat.shape)
        self.mat = mat

    @classmethod
    def from_columns(cls, columns, two_n):
        return cls(RatMatrix.from_columns(columns, two_n))

    @classmethod
    def coordinate(cls, i):
        """The coordinate point ``e_i`` with columns ``e_{i_1}, ...``."""
        return cls.from_columns([[int(r == v) for r in range(1, i.two_n + 1)]
                for v in i], i.two_n)

    @property
    def two_n(self):
        return self.mat.rows

    @property
    def d(self):
        return self.mat.cols

    def __eq__(self, other):
        if not isinstance(other, SubspaceMatrix):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return 'SubspaceMatrix(%r)' % (self.mat.to_json(),)

    def entry(self, row, col):
        """Entry at 1-based ``(row, col)``."""
        return self.mat[row - 1, col - 1]

    def column(self, s):
        _check_column(self.d, s)
        return self.mat.column(s - 1)

    def to_json(self):
        return self.mat.to_json()


class FlagMatrix(object):
    """A ``2n x k`` matrix whose column prefixes present ``V_1 < ... < V_k``.

    Every prefix of d columns must have rank d.
    """

    def __init__(self, mat):
        if not isinstance(mat, RatMatrix):
            mat = RatMatrix(mat)
        raise_error_if(mat.cols > mat.rows // 2, ERR_SHAPE_MISMATCH,
                'a flag in dimension %d has at most %d steps, got %d'
                % (mat.rows, mat.rows // 2, mat.cols))
        raise_error_if(rank(mat) != mat.cols, ERR_RANK_DEFICIENT,
                'columns of the %dx%d flag presentation are dependent'
                % mat.shape)
        self.mat = mat

    @classmethod
    def from_columns(cls, columns, two_n):
        return cls(RatMatrix.from_columns(columns, two_n))

    @property
    def two_n(self):
        return self.mat.rows

    @property
    def length(self):
        return self.mat.cols

    def prefix(self, d):
        """``V_d`` as a :class:`SubspaceMatrix` of the first d columns."""
        raise_error_if(d < 1 or d > self.length, ERR_SHAPE_MISMATCH,
                'prefix %d out of range 1..%d' % (d, self.length))
        return SubspaceMatrix(self.mat.submatrix(range(self.two_n), range(d)))

    def to_json(self):
        return self.mat.to_json()


def _check_column(d, s):
    raise_error_if(s < 1 or s > d, ERR_INVALID_COLUMN,
            'column %d out of range 1..%d' % (s, d))


def _check_shape(v, i):
    raise_error_if(i.d != v.d or i.two_n != v.two_n, ERR_SHAPE_MISMATCH,
            'index %r does not fit a %dx%d presentation'
            % (i, v.two_n, v.d))


def plucker(v, i):
    """``p_i(V)``, the minor of rows `i`."""
    _check_shape(v, i)
    return v.mat.minor(i)


def in_chart(v, j):
    """True iff V lies in the chart ``A_j``, that is ``p_j(V) != 0``."""
    return plucker(v, j) != 0


def standardize(v, j):
    """The j-standard presentation ``M (M_j)^-1`` of the same point."""
    _check_shape(v, j)
    raise_error_if(plucker(v, j) == 0, ERR_SINGULAR_CHART,
            'point lies outside the chart A_%s' % (j,))
    block = v.mat.submatrix([r - 1 for r in j], range(v.d))
    return SubspaceMatrix(v.mat * block.inverse())


def pairing_entries(entry, two_n, s, t):
    """``c_s^T J c_t`` for any entry accessor ``entry(row, col)`` (1-based).

    ``J`` has +1 on the upper and -1 on the lower anti-diagonal block.
    """
    n = two_n // 2
    total = 0
    for k in range(1, n + 1):
        k_bar = two_n + 1 - k
        total = total + (entry(k, s) * entry(k_bar, t)
                - entry(k_bar, s) * entry(k, t))
    return total


def pairing(v, s, t):
    """The symplectic pairing ``C(M,s,t)`` of columns s and t."""
    _check_column(v.d, s)
    _check_column(v.d, t)
    return Fraction(pairing_entries(v.entry, v.two_n, s, t))


def pairing_functional(column, two_n):
    """Coefficients of ``x -> c^T J x`` for a column vector ``c``."""
    n = two_n // 2
    return [-column[two_n - r] if r <= n else column[two_n - r]
            for r in range(1, two_n + 1)]


def symplectic_form(two_n):
    """The matrix ``J`` of :func:`pairing` as a :class:`RatMatrix`."""
    n = two_n // 2

    def j(r, c):
        if r + c != two_n + 1:
            return 0
        return 1 if r <= n else -1

    return RatMatrix([[j(r, c) for c in range(1, two_n + 1)]
            for r in range(1, two_n + 1)], two_n)


def is_isotropic(v):
    return all(pairing(v, s, t) == 0
            for s in range(1, v.d + 1) for t in range(s + 1, v.d + 1))


class LinearSection(object):
    """A degree one section ``sum c_i p_i`` of Gr(d,2n).

    Zero coefficients are never stored; :attr:`terms` lists
    ``(IndexSet, Fraction)`` pairs in lexicographic order of the index.
    """

    def __init__(self, d, two_n, terms=None):
        self.d = d
        self.two_n = two_n
        self._terms = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for i, coeff in items:
            raise_error_if(i.d != d or i.two_n != two_n, ERR_SHAPE_MISMATCH,
                    'term %r does not belong to I(%d,%d)' % (i, d, two_n))
            coeff = self._terms.get(i, 0) + rat(coeff)
            if coeff:
                self._terms[i] = coeff
            else:
                self._terms.pop(i, None)

    @property
    def terms(self):
        return sorted(self._terms.items())

    def coefficient(self, i):
        return self._terms.get(i, Fraction(0))

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms)

    def _check_compatible(self, other):
        raise_error_if(self.d != other.d or self.two_n != other.two_n,
                ERR_SHAPE_MISMATCH, 'sections of I(%d,%d) and I(%d,%d)'
                % (self.d, self.two_n, other.d, other.two_n))

    def __add__(self, other):
        self._check_compatible(other)
        return LinearSection(self.d, self.two_n,
                list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = rat(scalar)
        return LinearSection(self.d, self.two_n,
                [(i, c * scalar) for i, c in self._terms.items()])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinearSection):
            return NotImplemented
        return (self.d, self.two_n, self._terms) == \
                (other.d, other.two_n, other._terms)

    def __hash__(self):
        return hash((self.d, self.two_n, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for i, c in self.terms:
            if self.two_n < 10:
                name = 'p' + ''.join(str(e) for e in i)
            else:
                name = 'p(%s)' % i
            body = name if abs(c) == 1 else '%s*%s' % (rat_str(abs(c)), name)
            parts.append(('-' if c < 0 else '+', body))
        head = ('-' if parts[0][0] == '-' else '') + parts[0][1]
        return ' '.join([head] + ['%s %s' % p for p in parts[1:]])

    def __repr__(self):
        return 'LinearSection(%d, %d, %s)' % (self.d, self.two_n, self)

    def to_json(self):
        return [{'index': list(i.entries), 'coeff': rat_str(c)}
                for i, c in self.terms]

    @classmethod
    def from_json(cls, data, d, two_n):
        terms = []
        item = data
        try:
            for item in data:
                terms.append((IndexSet(item['index'], two_n),
                        rat(item['coeff'])))
        except (KeyError, TypeError):
            raise_error(ERR_PARSE, 'malformed section term %r' % (item,))
        return cls(d, two_n, terms)


def evaluate(sec, v):
    """``sum c_i p_i(V)``."""
    raise_error_if(sec.d != v.d or sec.two_n != v.two_n, ERR_SHAPE_MISMATCH,
            'section on I(%d,%d) evaluated at a %dx%d presentation'
            % (sec.d, sec.two_n, v.two_n, v.d))
    return sum((c * plucker(v, i) for i, c in sec.terms), Fraction(0))


def _plucker_row(args):
    v, columns = args
    return [plucker(v, i) for i in columns]


def evaluation_matrix(points, d, two_n):
    """One row per point, one column per ``i`` in I(d,2n) (lexicographic),
    holding ``p_i`` of the point."""
    columns = enumerate_indices(d, two_n)
    for v in points:
        raise_error_if(v.d != d or v.two_n != two_n, ERR_SHAPE_MISMATCH,
                'point of shape %dx%d in a sample of Gr(%d,%d)'
                % (v.two_n, v.d, d, two_n))
    rows = ordered_map(_plucker_row, [(v, columns) for v in points])
    return RatMatrix(rows, len(columns))


def section_matrix(sections, d, two_n):
    """Coefficient matrix of `sections` against I(d,2n)."""
    columns = enumerate_indices(d, two_n)
    return RatMatrix([[s.coefficient(i) for i in columns] for s in sections],
            len(columns))


def chart_variables(i):
    """Names ``x<a>_<s>`` of the free entries of an i-standard matrix."""
    return tuple('x%d_%d' % (a, s) for a in range(1, i.two_n + 1)
            if a not in i for s in range(1, i.d + 1))


def symbolic_standard_matrix(i):
    """The generic i-standard matrix as rows of :class:`MPoly`.

    Row ``i_t`` is the unit vector ``e_t``; every other entry ``(a, s)`` is
    the variable ``x<a>_<s>``.
    """
    variables = chart_variables(i)
    rows = []
    for a in range(1, i.two_n + 1):
        row = []
        for s in range(1, i.d + 1):
            if a in i:
                value = MPoly.constant(variables, int(i[s - 1] == a))
            else:
                value = MPoly.variable(variables, 'x%d_%d' % (a, s))
            row.append(value)
        rows.append(row)
    return rows


def symbolic_plucker(rows, i):
    return poly_det([rows[r - 1] for r in i])


def symbolic_pairing(rows, s, t):
    return pairing_entries(lambda r, c: rows[r - 1][c - 1], len(rows), s, t)


def symbolic_evaluate(sec, rows):
    variables = rows[0][0].variables
    total = MPoly(variables)
    for i, c in sec.terms:
        total = total + symbolic_plucker(rows, i) * c
    return total
