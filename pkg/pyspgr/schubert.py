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

"""Counts of surviving local equations, complete intersection criteria and
tangent spaces at ``e_id`` for Schubert varieties of Gr(d,2n).

``N(j, i)`` is the number of pairs ``s < t`` for which
``E_{j minus {j_s,j_t}}`` does not vanish on ``X^A(i)``.
"""

import functools
import itertools
import logging
from math import comb

from .combinat import (IndexSet, is_symplectic, bruhat_leq,
        length_a, length_c, enumerate_indices)
from .constants import (ERR_NOT_SYMPLECTIC, ERR_NOT_COMPARABLE,
        ERR_FORMULA_INAPPLICABLE, ERR_SHAPE_MISMATCH, ERR_VERIFICATION_FAILED)
from .errors import raise_error_if
from .equations import local_equation, restrict
from .linalg import RatMatrix, rank
from .pool import ordered_map

log = logging.getLogger(__name__)


def _require_symplectic(i):
    raise_error_if(not is_symplectic(i), ERR_NOT_SYMPLECTIC,
            '%s is not symplectic in 2n=%d' % (i, i.two_n))


def local_generators(j, i):
    """Surviving local equations of ``X^C(i)`` inside ``X^A(i)`` on the
    chart ``A_j``: a list of ``(s, t, restricted section)``."""
    _require_symplectic(j)
    _require_symplectic(i)
    raise_error_if(not bruhat_leq(j, i), ERR_NOT_COMPARABLE,
            '%s is not <= %s' % (j, i))
    result = []
    for s, t in itertools.combinations(range(1, j.d + 1), 2):
        sec = restrict(local_equation(j, s, t), i)
        if not sec.is_zero():
            result.append((s, t, sec))
    return result


@functools.lru_cache(maxsize=None)
def count_nonzero(j, i):
    """``N(j, i)``."""
    return len(local_generators(j, i))


def codim_pairs(i):
    """``#{s < t : i_s + i_t > 2n}``."""
    _require_symplectic(i)
    return sum(1 for a, b in itertools.combinations(i, 2) if a + b > i.two_n)


def r1(i):
    """``min{a : i_a >= a+1}``, or ``None`` for the identity."""
    return next((a for a, v in enumerate(i, 1) if v >= a + 1), None)


def r2(i):
    """``min{a : i_a >= a+2}``, or ``None`` (infinity) if there is none."""
    return next((a for a, v in enumerate(i, 1) if v >= a + 2), None)


def q(i):
    """``2n+1-i_d``."""
    raise_error_if(not i.d, ERR_SHAPE_MISMATCH, 'q needs d >= 1')
    return i.two_n + 1 - i[-1]


def n_id(i):
    """``N(id, i)``."""
    return count_nonzero(IndexSet.identity(i.d, i.two_n), i)


def n_id_closed_form(i):
    """``C(d-r1+1, 2) - (min(r2, q) - r1)``; needs ``N(i, i) > 0``.

    The printed formula, reported next to :func:`n_id` and never trusted
    over it: it can overcount when ``min(r2, q) - r1 >= 2``, e.g.
    ``(2,3,5,7)`` in Gr(4,10) gives 4 where only 3 pairs survive.
    """
    raise_error_if(count_nonzero(i, i) == 0, ERR_FORMULA_INAPPLICABLE,
            'N(i,i) = 0 for %s' % (i,))
    a, b, c = r1(i), r2(i), q(i)
    low = c if b is None else min(b, c)
    return comb(i.d - a + 1, 2) - (low - a)


def is_lci(i):
    """Whether ``X^C(i)`` is a local complete intersection in ``X^A(i)``.

    With no surviving equation at all the answer is yes.
    """
    _require_symplectic(i)
    if count_nonzero(i, i) == 0:
        return True
    start = r1(i)
    return all(i[s - 1] + i[t - 1] > i.two_n
            for s, t in itertools.combinations(range(start, i.d + 1), 2))


def _require_full_word(w):
    _require_symplectic(w)
    raise_error_if(not w.is_full, ERR_SHAPE_MISMATCH,
            '%s has %d letters, n=%d needed' % (w, len(w), w.n))


def flag_lci_pattern(w):
    """Prefix pattern test for the flag variety.

    ``w^(n)`` must be ``(1..r1-1, n, n+2, .., 2n+1-r1)`` or
    ``(1..r1-1, n+1, .., 2n+1-r1)`` with ``r1 = min{a <= n : a not in w}``;
    the identity prefix ``(1..n)`` passes trivially.
    """
    raise_error_if(not w.is_full, ERR_SHAPE_MISMATCH,
            '%s has %d letters, n=%d needed' % (w, len(w), w.n))
    n = w.n
    top = w.prefix(n).entries
    first = next((a for a in range(1, n + 1) if a not in top), None)
    if first is None:
        return True
    head = tuple(range(1, first))
    tail = tuple(range(n + 2, 2 * n + 2 - first))
    return top in (head + (n,) + tail,
            head + tuple(range(n + 1, 2 * n + 2 - first)))


def flag_is_lci(w):
    """``X^C(w)`` is lci in ``X^A(w)`` iff it holds for ``w^(n)``."""
    _require_full_word(w)
    return is_lci(w.prefix(w.n))


def _free_coordinates(i):
    """Chart coordinates ``(a, s)`` at ``e_id`` that stay free on
    ``X^A(i)``."""
    d, two_n = i.d, i.two_n
    free = set()
    for s in range(1, d + 1):
        rest = [v for v in range(1, d + 1) if v != s]
        for a in range(d + 1, two_n + 1):
            if bruhat_leq(IndexSet(sorted(rest + [a]), two_n), i):
                free.add((a, s))
    return free


def tangent_dim_a(i):
    """``dim T_{e_id} X^A(i)``."""
    return len(_free_coordinates(i))


def _tangent_hyperplanes(i):
    """The forms ``x_{2n+1-s,t} - x_{2n+1-t,s}`` as pairs of variables."""
    two_n = i.two_n
    return [((two_n + 1 - s, t), (two_n + 1 - t, s))
            for s, t in itertools.combinations(range(1, i.d + 1), 2)]


def tangent_codim_c_direct(i):
    """Codimension of ``T_{e_id} X^C(i)`` in ``T_{e_id} X^A(i)``.

    Computed as the exact rank of the hyperplane system restricted to the
    free coordinates; the count of hyperplanes touching a free coordinate
    must agree.
    """
    _require_symplectic(i)
    free = sorted(_free_coordinates(i))
    column = dict((v, k) for k, v in enumerate(free))
    rows = []
    touching = 0
    for plus, minus in _tangent_hyperplanes(i):
        row = [0] * len(free)
        if plus in column:
            row[column[plus]] += 1
        if minus in column:
            row[column[minus]] -= 1
        if any(row):
            touching += 1
        rows.append(row)
    codim = rank(RatMatrix(rows, len(free))) if rows else 0
    raise_error_if(codim != touching, ERR_VERIFICATION_FAILED,
            'rank %d but %d touching hyperplanes for %s'
            % (codim, touching, i))
    return codim


def tangent_codim_c_closed_form(i):
    """``(d-q+1)(d+q-2r)/2`` if ``q <= d``, else 0; 0 for the identity."""
    _require_symplectic(i)
    r = r1(i)
    if r is None:
        return 0
    d, c = i.d, q(i)
    if c > d:
        return 0
    return (d - c + 1) * (d + c - 2 * r) // 2


def smooth_a(i):
    """Whether ``X^A(i)`` is smooth: ``i = (1..r-1, t, t+1, .., t+d-r)``."""
    r = r1(i)
    if r is None:
        return True
    run = i.entries[r - 1:]
    return all(b == a + 1 for a, b in zip(run, run[1:]))


def smooth_c(i):
    """``dim T_{e_id} X^C(i) == dim X^C(i)``."""
    _require_symplectic(i)
    return tangent_dim_a(i) - tangent_codim_c_closed_form(i) == length_c(i)


def smooth_c_general(i):
    """The excess of ``T_{e_id} X^A(i)`` over ``X^A(i)`` equals the
    tangent codimension minus the number of pairs ``i_s + i_t > 2n``."""
    _require_symplectic(i)
    excess = tangent_dim_a(i) - length_a(i)
    return excess == tangent_codim_c_closed_form(i) - codim_pairs(i)


def smooth_c_trichotomy(i):
    """The printed rule for smooth ``X^A(i)`` and ``1 < d < n``: ``q > n``,
    ``q == r`` or ``q == r+1``. ``None`` outside that range.

    It misses ``r == d`` with ``d+2 <= q <= n`` (e.g. ``(1,5)`` in
    Gr(2,8)), where no pair sums past 2n and the tangent codimension is 0;
    :func:`smooth_c_rectangle` is the complete rule.
    """
    _require_symplectic(i)
    if not smooth_a(i) or not 1 < i.d < i.n:
        return None
    r = r1(i)
    if r is None:
        return True
    c = q(i)
    return c > i.n or c == r or c == r + 1


def smooth_c_rectangle(i):
    """Smoothness of ``X^C(i)`` when ``X^A(i)`` is smooth and
    ``1 < d < n``: ``q > n``, ``q <= r+1`` or ``r == d``. ``None`` outside
    that range."""
    _require_symplectic(i)
    if not smooth_a(i) or not 1 < i.d < i.n:
        return None
    r = r1(i)
    if r is None:
        return True
    c = q(i)
    return c > i.n or c <= r + 1 or r == i.d


def lci_intrinsic(i):
    """lci in ``X^A(i)`` with ``X^A(i)`` smooth makes ``X^C(i)`` an
    intrinsic local complete intersection."""
    return is_lci(i) and smooth_a(i)


class ClassificationRecord(object):
    """Everything :func:`classify` knows about one symplectic index.

    Besides the CSV columns a record carries the values of two printed
    statements that are known to fail in places: `n_id_formula`, the closed
    form of ``N(id, i)`` (``None`` when ``N(i, i) = 0``), and
    `smooth_c_printed`, the printed smoothness rule (``None`` outside its
    range). :attr:`disagreements` names the ones that differ from the
    computed values.
    """

    CSV_HEADER = ('index', 'dim_a', 'dim_c', 'n_self', 'n_id', 'r1', 'r2',
            'q', 'r', 'lci', 'tangent_dim_a', 'tangent_codim_c', 'smooth_a',
            'smooth_c')

    def __init__(self, index, dim_a, dim_c, n_self, n_id, r1, r2, q, r, lci,
            tangent_dim_a, tangent_codim_c, smooth_a, smooth_c,
            n_id_formula=None, smooth_c_printed=None):
        self.index = index
        self.dim_a = dim_a
        self.dim_c = dim_c
        self.n_self = n_self
        self.n_id = n_id
        self.r1 = r1
        self.r2 = r2
        self.q = q
        self.r = r
        self.lci = lci
        self.tangent_dim_a = tangent_dim_a
        self.tangent_codim_c = tangent_codim_c
        self.smooth_a = smooth_a
        self.smooth_c = smooth_c
        self.n_id_formula = n_id_formula
        self.smooth_c_printed = smooth_c_printed

    def __repr__(self):
        return 'ClassificationRecord(%s)' % ', '.join(
                '%s=%s' % (k, v) for k, v in zip(self.CSV_HEADER, self.row()))

    @property
    def disagreements(self):
        result = []
        if self.n_id_formula is not None and self.n_id_formula != self.n_id:
            result.append('n_id_formula')
        if self.smooth_c_printed is not None and \
                self.smooth_c_printed != self.smooth_c:
            result.append('smooth_c_printed')
        return result

    def row(self):
        """CSV cells; an undefined r1/r is empty, an infinite r2 is inf."""
        def opt(v, missing):
            return missing if v is None else str(v)

        def flag(v):
            return 'true' if v else 'false'

        return [str(self.index), str(self.dim_a), str(self.dim_c),
                str(self.n_self), str(self.n_id), opt(self.r1, ''),
                opt(self.r2, 'inf'), opt(self.q, ''), opt(self.r, ''),
                flag(self.lci), str(self.tangent_dim_a),
                str(self.tangent_codim_c), flag(self.smooth_a),
                flag(self.smooth_c)]

    def to_json(self):
        data = dict((k, getattr(self, k)) for k in self.CSV_HEADER)
        data['index'] = list(self.index.entries)
        data['n_id_formula'] = self.n_id_formula
        data['smooth_c_printed'] = self.smooth_c_printed
        data['disagreements'] = self.disagreements
        return data


def _verify(condition, i, what):
    raise_error_if(not condition, ERR_VERIFICATION_FAILED,
            '%s fails at i=%s' % (what, i))


def classify_index(i):
    """The :class:`ClassificationRecord` of `i`.

    Cross-checks between independent computations abort with
    ``ERR_VERIFICATION_FAILED``; the two printed statements with known
    counterexamples are only recorded.
    """
    _require_symplectic(i)
    dim_a, dim_c = length_a(i), length_c(i)
    n_self = count_nonzero(i, i)
    ident = n_id(i)
    lci = is_lci(i)
    t_dim = tangent_dim_a(i)
    codim = tangent_codim_c_closed_form(i)
    s_a = smooth_a(i)
    s_c = smooth_c(i)
    _verify(dim_a - dim_c == n_self == codim_pairs(i), i,
            'N(i,i) = #pairs = dim_a - dim_c')
    _verify(ident >= n_self, i, 'N(id,i) >= N(i,i)')
    _verify(lci == (ident == n_self), i, 'lci iff N(id,i) = N(i,i)')
    _verify(tangent_codim_c_direct(i) == codim, i,
            'closed form of the tangent codimension')
    _verify(s_a == (t_dim == dim_a), i, 'rectangle pattern iff T = dim')
    _verify(s_c == smooth_c_general(i), i, 'general smoothness criterion')
    rect = smooth_c_rectangle(i)
    _verify(rect is None or rect == s_c, i, 'smoothness of X^C over a '
            'smooth X^A')
    rec = ClassificationRecord(i, dim_a, dim_c, n_self, ident, r1(i),
            r2(i), q(i) if i.d else None, r1(i), lci, t_dim, codim, s_a, s_c,
            n_id_closed_form(i) if n_self else None, smooth_c_trichotomy(i))
    for name in rec.disagreements:
        log.warning('%s disagrees at i=%s (2n=%d): %r', name, i, i.two_n,
                rec.to_json())
    return rec


def classify(d, two_n):
    """One cross-checked record per ``i`` in ``I^Sp(d, 2n)``, in
    lexicographic order."""
    indices = enumerate_indices(d, two_n, symplectic_only=True)
    log.debug('classifying %d indices of I^Sp(%d,%d)', len(indices), d, two_n)
    return ordered_map(classify_index, indices)
