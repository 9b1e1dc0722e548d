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

"""Index sets, flag words and the Weyl group combinatorics around them.

All entries are 1-based, as in ``i = (i_1, ..., i_d)`` with
``1 <= i_1 < ... < i_d <= 2n``. A permutation is a tuple in one-line
notation.
"""

import functools
import itertools
import logging
from math import comb

from .constants import (ERR_INVALID_INDEX, ERR_NOT_SYMPLECTIC,
        ERR_SHAPE_MISMATCH, ERR_PARITY, ERR_PARSE)
from .errors import raise_error, raise_error_if

log = logging.getLogger(__name__)


def _check_two_n(two_n):
    raise_error_if(two_n < 0 or two_n % 2, ERR_INVALID_INDEX,
            'ambient size %r is not a non-negative even number' % (two_n,))


def _parse_ints(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v, 10) for v in text.split(','))
    except ValueError:
        raise_error(ERR_PARSE, 'could not parse %r as a list of integers'
                % text)


@functools.total_ordering
class IndexSet(object):
    """A strictly increasing subset of ``{1, ..., two_n}``.

    Index sets of different ambient sizes never compare equal; ordering is
    lexicographic on the entries and only defined for a common ``two_n``.
    """
    __slots__ = ('entries', 'two_n')

    def __init__(self, entries, two_n):
        _check_two_n(two_n)
        entries = tuple(int(e) for e in entries)
        for a, b in zip(entries, entries[1:]):
            raise_error_if(a >= b, ERR_INVALID_INDEX,
                    '%r is not strictly increasing' % (entries,))
        if entries:
            raise_error_if(entries[0] < 1 or entries[-1] > two_n,
                    ERR_INVALID_INDEX,
                    '%r is not within 1..%d' % (entries, two_n))
        self.entries = entries
        self.two_n = two_n

    @classmethod
    def from_values(cls, values, two_n):
        """Build an index set from distinct values in any order."""
        values = tuple(values)
        raise_error_if(len(set(values)) != len(values), ERR_INVALID_INDEX,
                '%r has repeated entries' % (values,))
        return cls(sorted(values), two_n)

    @classmethod
    def parse(cls, text, two_n):
        """Parse ``"1,3,7"``. The empty string is the empty set."""
        return cls(_parse_ints(text), two_n)

    @classmethod
    def identity(cls, d, two_n):
        return cls(range(1, d + 1), two_n)

    @classmethod
    def maximal(cls, d, two_n):
        return cls(range(two_n - d + 1, two_n + 1), two_n)

    @property
    def d(self):
        return len(self.entries)

    @property
    def n(self):
        return self.two_n // 2

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __contains__(self, value):
        return value in self.entries

    def __eq__(self, other):
        if not isinstance(other, IndexSet):
            return NotImplemented
        return self.two_n == other.two_n and self.entries == other.entries

    def __lt__(self, other):
        if not isinstance(other, IndexSet):
            return NotImplemented
        raise_error_if(self.two_n != other.two_n, ERR_SHAPE_MISMATCH,
                'cannot order index sets of 2n=%d and 2n=%d'
                % (self.two_n, other.two_n))
        return self.entries < other.entries

    def __hash__(self):
        return hash((self.entries, self.two_n))

    def __str__(self):
        return ','.join(str(e) for e in self.entries)

    def __repr__(self):
        return 'IndexSet(%r, %d)' % (self.entries, self.two_n)

    def __reduce__(self):
        return (IndexSet, (self.entries, self.two_n))

    def union(self, values):
        """Return ``self`` together with `values`, which must be new."""
        return IndexSet.from_values(self.entries + tuple(values), self.two_n)

    def without(self, values):
        values = set(values)
        raise_error_if(not values <= set(self.entries), ERR_INVALID_INDEX,
                '%r is not contained in %s' % (sorted(values), self))
        return IndexSet([e for e in self.entries if e not in values],
                self.two_n)

    def without_positions(self, *positions):
        """Drop the entries at the given 1-based positions."""
        return IndexSet([e for k, e in enumerate(self.entries, 1)
                if k not in positions], self.two_n)


class FlagWord(object):
    """A sequence of distinct values in ``{1, ..., two_n}``; order matters.

    Full words have ``n`` letters. Shorter words index partial flags and
    are accepted wherever the operation makes sense for them.
    """
    __slots__ = ('values', 'two_n')

    def __init__(self, values, two_n):
        _check_two_n(two_n)
        values = tuple(int(v) for v in values)
        raise_error_if(len(set(values)) != len(values), ERR_INVALID_INDEX,
                '%r has repeated letters' % (values,))
        raise_error_if(len(values) > two_n // 2, ERR_INVALID_INDEX,
                '%r is longer than n=%d' % (values, two_n // 2))
        raise_error_if(any(v < 1 or v > two_n for v in values),
                ERR_INVALID_INDEX,
                '%r is not within 1..%d' % (values, two_n))
        self.values = values
        self.two_n = two_n

    @classmethod
    def parse(cls, text, two_n):
        return cls(_parse_ints(text), two_n)

    @property
    def n(self):
        return self.two_n // 2

    @property
    def is_full(self):
        return len(self.values) == self.n

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __eq__(self, other):
        if not isinstance(other, FlagWord):
            return NotImplemented
        return self.two_n == other.two_n and self.values == other.values

    def __hash__(self):
        return hash((self.values, self.two_n))

    def __str__(self):
        return ','.join(str(v) for v in self.values)

    def __repr__(self):
        return 'FlagWord(%r, %d)' % (self.values, self.two_n)

    def __reduce__(self):
        return (FlagWord, (self.values, self.two_n))

    def prefix(self, d):
        """The sorted prefix ``w^(d)`` as an :class:`IndexSet`."""
        raise_error_if(d < 0 or d > len(self.values), ERR_SHAPE_MISMATCH,
                'prefix length %d out of range for %s' % (d, self))
        return IndexSet(sorted(self.values[:d]), self.two_n)


def inversions(seq):
    """Number of pairs ``s < t`` with ``seq[s] > seq[t]``."""
    seq = tuple(seq)
    return sum(1 for a, b in itertools.combinations(seq, 2) if a > b)


def is_symplectic(i):
    """True iff no two entries of `i` sum to ``2n+1``.

    Works for :class:`IndexSet` and :class:`FlagWord` alike.
    """
    values = set(i)
    return not any(i.two_n + 1 - v in values for v in values)


def _require_symplectic(i):
    raise_error_if(not is_symplectic(i), ERR_NOT_SYMPLECTIC,
            '%s is not symplectic in 2n=%d' % (i, i.two_n))
    raise_error_if(len(i) > i.two_n // 2, ERR_NOT_SYMPLECTIC,
            '%s has more than n=%d entries' % (i, i.two_n // 2))


def bruhat_leq(a, b):
    """Componentwise comparison ``a_t <= b_t`` of two index sets."""
    raise_error_if(len(a) != len(b) or a.two_n != b.two_n,
            ERR_SHAPE_MISMATCH, 'cannot compare %r with %r' % (a, b))
    return all(x <= y for x, y in zip(a, b))


def enumerate_indices(d, two_n, symplectic_only=False, below=None):
    """All d-subsets of ``{1..two_n}`` in lexicographic order.

    With `symplectic_only`, sets containing a pair summing to ``two_n+1``
    are skipped; with `below`, only sets ``<= below`` are kept.
    """
    _check_two_n(two_n)
    raise_error_if(d < 0 or d > two_n, ERR_SHAPE_MISMATCH,
            'd=%d out of range for 2n=%d' % (d, two_n))
    raise_error_if(symplectic_only and d > two_n // 2, ERR_SHAPE_MISMATCH,
            'symplectic index sets need d <= n, got d=%d, 2n=%d' % (d, two_n))
    if below is not None:
        raise_error_if(below.d != d or below.two_n != two_n,
                ERR_SHAPE_MISMATCH, '%r does not live in I(%d,%d)'
                % (below, d, two_n))
    result = []
    for c in itertools.combinations(range(1, two_n + 1), d):
        i = IndexSet(c, two_n)
        if symplectic_only and not is_symplectic(i):
            continue
        if below is not None and not bruhat_leq(i, below):
            continue
        result.append(i)
    return result


def lift_a(i):
    """One-line permutation: `i` followed by its ascending complement."""
    head = tuple(i)
    return head + tuple(v for v in range(1, i.two_n + 1) if v not in head)


def lift_c(i):
    """The type C lift of a symplectic index set or flag word.

    Positions ``d+1..n`` take the smaller member of every pair
    ``{t, 2n+1-t}`` not touched by `i`, ascending; positions ``n+1..2n`` are
    forced by ``w_t + w_{2n+1-t} = 2n+1``.
    """
    _require_symplectic(i)
    two_n = i.two_n
    n = two_n // 2
    head = tuple(i)
    used = set(head)
    head += tuple(t for t in range(1, n + 1)
            if t not in used and two_n + 1 - t not in used)
    return head + tuple(two_n + 1 - v for v in reversed(head))


def length_a(i):
    return sum(v - t for t, v in enumerate(i, 1))


def length_c(i):
    """``(tau(i^C) + m) / 2`` with ``m = #{t : i_t > n}``."""
    _require_symplectic(i)
    tau = inversions(lift_c(i))
    m = sum(1 for v in i if v > i.two_n // 2)
    raise_error_if((tau + m) % 2, ERR_PARITY,
            'tau=%d, m=%d for %s' % (tau, m, i))
    return (tau + m) // 2


def dims(i):
    """``(dim X^A(i), dim X^C(i))``."""
    _require_symplectic(i)
    return length_a(i), length_c(i)


def grassmannian_dims(d, two_n):
    """``(dim Gr(d,2n), dim Gr^C(d,2n))``."""
    raise_error_if(d < 0 or d > two_n // 2, ERR_SHAPE_MISMATCH,
            'd=%d out of range for 2n=%d' % (d, two_n))
    dim_a = d * (two_n - d)
    return dim_a, dim_a - comb(d, 2)


def flag_dims(w):
    """``(dim X^A(w), dim X^C(w))`` via the sorted prefix ``w^(k)``."""
    _require_symplectic(w)
    top = w.prefix(len(w))
    tau = inversions(w)
    return length_a(top) + tau, length_c(top) + tau


def flag_dims_direct(w):
    """Flag dimensions as lengths of the full one-line lifts of `w`.

    Independent of :func:`flag_dims`; used to cross-check it.
    """
    m = sum(1 for v in w if v > w.n)
    lift = lift_c(w)
    tau = inversions(lift)
    raise_error_if((tau + m) % 2, ERR_PARITY,
            'tau=%d, m=%d for %s' % (tau, m, w))
    return inversions(lift_a(w)), (tau + m) // 2


def flag_enumerate(n, symplectic_only=False, length=None):
    """All flag words of `length` letters (default `n`) in ``{1..2n}``."""
    raise_error_if(n < 0, ERR_SHAPE_MISMATCH, 'n=%d is negative' % n)
    if length is None:
        length = n
    two_n = 2 * n
    result = []
    for values in itertools.permutations(range(1, two_n + 1), length):
        w = FlagWord(values, two_n)
        if symplectic_only and not is_symplectic(w):
            continue
        result.append(w)
    return result


def flag_bruhat_leq(u, w):
    """``u <= w`` iff ``u^(d) <= w^(d)`` for every prefix length d."""
    raise_error_if(len(u) != len(w) or u.two_n != w.two_n,
            ERR_SHAPE_MISMATCH, 'cannot compare %r with %r' % (u, w))
    return all(bruhat_leq(u.prefix(d), w.prefix(d))
            for d in range(1, len(w) + 1))
