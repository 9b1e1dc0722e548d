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

"""The linear sections E cutting Gr^C(d,2n) out of Gr(d,2n), their
restrictions to Schubert varieties and exact checks of the identities
relating them.

For ``|i'| = d-2``::

    E_{i'} = sum_{t=1..n} (-1)^tau(i', t, 2n+1-t) p_{i' + {t, 2n+1-t}}

where terms with ``{t, 2n+1-t}`` meeting ``i'`` are left out.
"""

import functools
import itertools
import logging
from collections import namedtuple
from fractions import Fraction
from math import comb

from .combinat import (IndexSet, inversions, bruhat_leq,
        enumerate_indices)
from .constants import (MODE_SYMBOLIC, MODE_SAMPLED, DEFAULT_TRIALS,
        ERR_SHAPE_MISMATCH, ERR_INVALID_COLUMN, ERR_INVALID_INDEX,
        ERR_UNSTABLE_SAMPLE)
from .errors import raise_error, raise_error_if
from .linalg import RatMatrix, MPoly, rank, kernel_basis
from .pluecker import (LinearSection, chart_variables, evaluate, plucker,
        evaluation_matrix, section_matrix, symbolic_standard_matrix,
        symbolic_plucker, symbolic_pairing, symbolic_evaluate, pairing)
from .sampler import (SampleConfig, sample_isotropic, sample_standard_point,
        sample_standard_flag)

log = logging.getLogger(__name__)


@functools.lru_cache(maxsize=None)
def build_E(i_prime, n, d=None):
    """The section ``E_{i'}`` on Gr(d,2n) with ``d = |i'| + 2``.

    Passing ``d < 2`` returns the zero section of Gr(d,2n); there is no
    E family below d = 2, so `i_prime` must then be empty.
    """
    two_n = 2 * n
    raise_error_if(i_prime.two_n != two_n, ERR_SHAPE_MISMATCH,
            '%r does not live in 2n=%d' % (i_prime, two_n))
    if d is not None and d < 2:
        raise_error_if(i_prime.d, ERR_SHAPE_MISMATCH,
                '|i\'| = %d does not match d = %d' % (i_prime.d, d))
        return LinearSection(d, two_n)
    if d is None:
        d = i_prime.d + 2
    raise_error_if(d != i_prime.d + 2, ERR_SHAPE_MISMATCH,
            '|i\'| = %d does not match d = %d' % (i_prime.d, d))
    terms = []
    for t in range(1, n + 1):
        t_bar = two_n + 1 - t
        if t in i_prime or t_bar in i_prime:
            continue
        sign = -1 if inversions(tuple(i_prime) + (t, t_bar)) % 2 else 1
        terms.append((i_prime.union((t, t_bar)), sign))
    return LinearSection(d, two_n, terms)


def e_family(d, two_n):
    """``[E_{i'} for i' in I(d-2,2n)]`` in lexicographic order of i'."""
    if d < 2:
        return []
    return [build_E(ip, two_n // 2) for ip in enumerate_indices(d - 2, two_n)]


def local_equation(j, s, t):
    """``E_{j minus {j_s, j_t}}`` for 1-based positions ``s < t``."""
    raise_error_if(not 1 <= s < t <= j.d, ERR_INVALID_COLUMN,
            'need 1 <= s < t <= %d, got s=%r, t=%r' % (j.d, s, t))
    return build_E(j.without_positions(s, t), j.n)


def local_hyperplanes(i):
    """The ``C(d,2)`` sections ``E_{i minus {i_s, i_t}}`` of the chart A_i,
    keyed by ``(s, t)``."""
    return [((s, t), local_equation(i, s, t))
            for s, t in itertools.combinations(range(1, i.d + 1), 2)]


def _check_restriction_shapes(i_prime, i):
    raise_error_if(i_prime.d + 2 != i.d or i_prime.two_n != i.two_n,
            ERR_SHAPE_MISMATCH, '|i\'| must be |i| - 2, got %r and %r'
            % (i_prime, i))


def restriction_zero(i_prime, i):
    """True iff ``E_{i'}`` vanishes on ``X^A(i)``.

    The ``p_j`` with ``j <= i`` form a basis of the degree one part on
    ``X^A(i)`` and all coefficients of E are +-1, so the restriction is zero
    exactly when no term of ``E_{i'}`` is ``<= i``.
    """
    _check_restriction_shapes(i_prime, i)
    return not any(bruhat_leq(j, i) for j, _ in build_E(i_prime, i.n).terms)


def restrict(sec, i):
    """Drop every term whose index is not ``<= i``."""
    raise_error_if(sec.d != i.d or sec.two_n != i.two_n, ERR_SHAPE_MISMATCH,
            'section on I(%d,%d) restricted to %r' % (sec.d, sec.two_n, i))
    return LinearSection(sec.d, sec.two_n,
            [(j, c) for j, c in sec.terms if bruhat_leq(j, i)])


class SignedIdentityReport(object):
    """Outcome of checking ``lhs == sign * rhs``.

    `pinned_sign` is the global sign the identity holds with (``None`` when
    it failed or every trial was ``0 == 0``); `details` carries the
    expected sign, matched columns or a counterexample.
    """

    def __init__(self, name, holds, pinned_sign, trials, mode, details=None):
        self.name = name
        self.holds = holds
        self.pinned_sign = pinned_sign
        self.trials = trials
        self.mode = mode
        self.details = details or {}

    def __repr__(self):
        return 'SignedIdentityReport(%r, holds=%r, pinned_sign=%r, ' \
                'trials=%d, mode=%r)' % (self.name, self.holds,
                self.pinned_sign, self.trials, self.mode)

    def to_json(self):
        return dict(name=self.name, holds=self.holds,
                pinned_sign=self.pinned_sign, trials=self.trials,
                mode=self.mode, details=self.details)


class _SignPinner(object):
    """Accumulates ``(lhs, rhs)`` pairs that must agree up to one sign."""

    def __init__(self):
        self.sign = None
        self.failure = None
        self.trials = 0

    def add(self, lhs, rhs, where=None):
        self.trials += 1
        if self.failure is not None:
            return
        if lhs == rhs and lhs == -rhs:
            return
        if lhs == rhs:
            sign = 1
        elif lhs == -rhs:
            sign = -1
        else:
            self.failure = dict(trial=self.trials, where=where,
                    lhs=str(lhs), rhs=str(rhs))
            return
        if self.sign is None:
            self.sign = sign
        elif self.sign != sign:
            self.failure = dict(trial=self.trials, where=where,
                    reason='sign flipped from %+d to %+d' % (self.sign, sign))

    @property
    def holds(self):
        return self.failure is None

    def report(self, name, mode, details):
        if self.failure is not None:
            details = dict(details, counterexample=self.failure)
        return SignedIdentityReport(name, self.holds,
                self.sign if self.holds else None, self.trials, mode, details)


def pairing_sign(s, t):
    """The sign in ``C(M,s,t) p_i = sign * E_{i minus {i_s,i_t}}``."""
    return (-1) ** (s + t + 1)


def check_pairing_identity(i, s, t, mode=MODE_SYMBOLIC, trials=DEFAULT_TRIALS,
        cfg=None):
    """Check ``C(M,s,t) p_i(M) = eps E_{i'}(M)`` on i-standard matrices M.

    ``i' = i minus {i_s, i_t}``. The symbolic mode compares polynomials in
    the chart variables; the sampled mode compares values at `trials`
    random i-standard matrices.
    """
    raise_error_if(not 1 <= s < t <= i.d, ERR_INVALID_COLUMN,
            'need 1 <= s < t <= %d, got s=%r, t=%r' % (i.d, s, t))
    e = local_equation(i, s, t)
    pinner = _SignPinner()
    if mode == MODE_SYMBOLIC:
        rows = symbolic_standard_matrix(i)
        lhs = symbolic_pairing(rows, s, t) * symbolic_plucker(rows, i)
        pinner.add(lhs, symbolic_evaluate(e, rows))
    elif mode == MODE_SAMPLED:
        cfg = cfg or SampleConfig()
        for draw in range(trials):
            m = sample_standard_point(i, cfg, draw)
            pinner.add(pairing(m, s, t) * plucker(m, i), evaluate(e, m),
                    where='draw %d' % draw)
    else:
        raise_error(ERR_INVALID_INDEX, 'unknown mode %r' % (mode,))
    return pinner.report('pairing', mode, dict(index=str(i), s=s, t=t,
            expected_sign=pairing_sign(s, t)))


def check_local_relation(j_prime, i, trials=DEFAULT_TRIALS, cfg=None,
        mode=MODE_SAMPLED):
    """Check the expansion of ``E_{j'}`` in the chart A_i::

        E_{j'} p_i = eps * sum_{k<l} (-1)^(k+l+tau(j',i_k,i_l))
                         E_{i minus {i_k,i_l}} p_{j' + {i_k,i_l}}

    over the chart variables (symbolic mode) or at `trials` random
    i-standard points (sampled mode); terms whose subscript meets j' are
    zero.
    """
    _check_restriction_shapes(j_prime, i)
    e_j = build_E(j_prime, i.n)
    expansion = []
    for k, l in itertools.combinations(range(1, i.d + 1), 2):
        ik, il = i[k - 1], i[l - 1]
        if ik in j_prime or il in j_prime:
            continue
        sign = (-1) ** (k + l + inversions(tuple(j_prime) + (ik, il)))
        expansion.append((sign, local_equation(i, k, l),
                j_prime.union((ik, il))))
    pinner = _SignPinner()
    if mode == MODE_SYMBOLIC:
        rows = symbolic_standard_matrix(i)
        rhs = MPoly(chart_variables(i))
        for sign, e, j in expansion:
            rhs = rhs + symbolic_evaluate(e, rows) * \
                    symbolic_plucker(rows, j) * sign
        pinner.add(symbolic_evaluate(e_j, rows) * symbolic_plucker(rows, i),
                rhs)
    elif mode == MODE_SAMPLED:
        cfg = cfg or SampleConfig()
        for draw in range(trials):
            m = sample_standard_point(i, cfg, draw)
            lhs = evaluate(e_j, m) * plucker(m, i)
            rhs = sum((sign * evaluate(e, m) * plucker(m, j)
                    for sign, e, j in expansion), Fraction(0))
            pinner.add(lhs, rhs, where='draw %d' % draw)
    else:
        raise_error(ERR_INVALID_INDEX, 'unknown mode %r' % (mode,))
    return pinner.report('local-relation', mode, dict(
            j_prime=str(j_prime), index=str(i), terms=len(expansion),
            expected_sign=-1))


def flag_matched_pair(w, d1, d2, s, t):
    """Positions ``(s', t')`` in ``w^(d2)`` of the entries at positions
    ``(s, t)`` of ``w^(d1)``, and the sign relating the two quotients."""
    small, big = w.prefix(d1), w.prefix(d2)
    s2 = big.entries.index(small[s - 1]) + 1
    t2 = big.entries.index(small[t - 1]) + 1
    return s2, t2, (-1) ** ((s2 - s) + (t2 - t))


def check_flag_relation(w, d1, d2, s, t, trials=DEFAULT_TRIALS, cfg=None):
    """Check ``E_1 / p_{w^(d1)} = +-E_2 / p_{w^(d2)}`` on flags of ``O_w``.

    ``E_1`` drops positions ``(s, t)`` from ``w^(d1)`` and ``E_2`` drops the
    matched positions from ``w^(d2)``. Samples come from
    :func:`~pyspgr.sampler.sample_standard_flag` without the isotropy
    constraint: on isotropic flags both sides vanish, so only generic flags
    of the locus where the ``w^(d2)``-standard presentation extends the
    ``w^(d1)``-standard one can pin the sign. The identity is checked
    cleared of denominators.
    """
    raise_error_if(not 1 <= d1 <= d2 <= len(w), ERR_SHAPE_MISMATCH,
            'need 1 <= d1 <= d2 <= %d, got %r, %r' % (len(w), d1, d2))
    raise_error_if(not 1 <= s < t <= d1, ERR_INVALID_COLUMN,
            'need 1 <= s < t <= %d, got s=%r, t=%r' % (d1, s, t))
    cfg = cfg or SampleConfig()
    i1, i2 = w.prefix(d1), w.prefix(d2)
    s2, t2, expected = flag_matched_pair(w, d1, d2, s, t)
    e1 = local_equation(i1, s, t)
    e2 = local_equation(i2, s2, t2)
    pinner = _SignPinner()
    informative = 0
    for draw in range(trials + cfg.max_resamples):
        if informative == trials:
            break
        flag = sample_standard_flag(w, False, cfg, draw)
        v1, v2 = flag.prefix(d1), flag.prefix(d2)
        lhs = evaluate(e1, v1) * plucker(v2, i2)
        rhs = evaluate(e2, v2) * plucker(v1, i1)
        # draws where the pair of columns is isotropic say nothing
        if lhs or rhs:
            informative += 1
        pinner.add(lhs, rhs, where='draw %d' % draw)
    return pinner.report('flag-relation', MODE_SAMPLED, dict(
            word=str(w), d1=d1, d2=d2, s=s, t=t, matched=[s2, t2],
            expected_sign=expected))


def lemma_sides(half, n):
    """Both sides of the partition identity for ``n = 2m``.

    Returns ``(lhs, rhs)`` with ``lhs = (-1)^(m-1) p_i + p_j`` and ``rhs``
    the weighted sum of ``E_l`` over mirrored l.
    """
    raise_error_if(n % 2, ERR_SHAPE_MISMATCH, 'n=%d is not even' % n)
    m = n // 2
    two_n = 2 * n
    half = tuple(sorted(half))
    raise_error_if(len(half) != m or len(set(half)) != m
            or any(h < 1 or h > n for h in half), ERR_SHAPE_MISMATCH,
            '%r is not an %d-subset of 1..%d' % (half, m, n))
    other = tuple(h for h in range(1, n + 1) if h not in half)

    def mirrored(values):
        return IndexSet.from_values(
                tuple(values) + tuple(two_n + 1 - v for v in values), two_n)

    lhs = LinearSection(n, two_n, [(mirrored(half), (-1) ** (m - 1)),
            (mirrored(other), 1)])
    rhs = LinearSection(n, two_n)
    for small in itertools.combinations(range(1, n + 1), m - 1):
        a = sum(1 for v in small if v in other)
        weight = Fraction((-1) ** a, m * comb(m - 1, a))
        rhs = rhs + build_E(mirrored(small), n) * weight
    return lhs, rhs


def lemma_partition_identity(half, n):
    """Check ``(-1)^(m-1) p_i + p_j = eps * rhs`` exactly."""
    lhs, rhs = lemma_sides(half, n)
    pinner = _SignPinner()
    pinner.add(lhs, rhs)
    m = n // 2
    return pinner.report('partition-lemma', MODE_SYMBOLIC, dict(
            half=list(sorted(half)), n=n, expected_sign=(-1) ** (m - 1)))


def e_span_rank(d, two_n):
    """Rank of the coefficient matrix of the E family of Gr(d,2n)."""
    raise_error_if(d < 2 or d > two_n // 2, ERR_SHAPE_MISMATCH,
            'E family needs 2 <= d <= n, got d=%d, 2n=%d' % (d, two_n))
    return rank(section_matrix(e_family(d, two_n), d, two_n))


class SpanReport(namedtuple('SpanReport',
        'e_rank kernel_dim stacked_rank points')):
    __slots__ = ()

    @property
    def consistent(self):
        return self.e_rank == self.kernel_dim == self.stacked_rank


def _isotropic_points(d, two_n, cfg, draws):
    return [sample_isotropic(d, two_n, cfg, draw) for draw in draws]


def vanishing_space(d, two_n, n_points, cfg=None):
    """Basis of the linear forms vanishing at sampled points of Gr^C(d,2n).

    Raises ``ERR_UNSTABLE_SAMPLE`` if adding a quarter more points changes
    the dimension.
    """
    raise_error_if(n_points < comb(two_n, d), ERR_SHAPE_MISMATCH,
            '%d points cannot pin down %d Plücker coordinates'
            % (n_points, comb(two_n, d)))
    cfg = cfg or SampleConfig()
    points = _isotropic_points(d, two_n, cfg, range(n_points))
    first = kernel_basis(evaluation_matrix(points, d, two_n))
    extra = max(1, n_points // 4)
    points += _isotropic_points(d, two_n, cfg,
            range(n_points, n_points + extra))
    second = kernel_basis(evaluation_matrix(points, d, two_n))
    if len(first) != len(second):
        log.warning('vanishing space of Gr^C(%d,%d) moved from %d to %d',
                d, two_n, len(first), len(second))
        raise_error(ERR_UNSTABLE_SAMPLE, 'kernel dimension %d -> %d after '
                '%d more points' % (len(first), len(second), extra))
    log.debug('vanishing space of Gr^C(%d,%d): %d from %d points',
            d, two_n, len(second), len(points))
    return second


def vanishing_space_dim(d, two_n, n_points, cfg=None):
    return len(vanishing_space(d, two_n, n_points, cfg))


def span_inclusion(d, two_n, n_points, cfg=None):
    """Both inclusions between the E span and the sampled vanishing space.

    The kernel lies in the E span iff stacking it under the E coefficient
    matrix does not raise the rank.
    """
    e_rows = section_matrix(e_family(d, two_n), d, two_n)
    kernel = vanishing_space(d, two_n, n_points, cfg)
    stacked = RatMatrix(e_rows.to_rows() + [list(v) for v in kernel],
            e_rows.cols)
    return SpanReport(rank(e_rows), len(kernel), rank(stacked), n_points)


def e_vanishes_on_samples(d, two_n, n_points, cfg=None):
    """The first ``(i', point draw)`` where some ``E_{i'}`` is nonzero on a
    sampled isotropic point, or ``None``."""
    if d < 2:
        return None
    cfg = cfg or SampleConfig()
    family = list(zip(enumerate_indices(d - 2, two_n), e_family(d, two_n)))
    for draw in range(n_points):
        v = sample_isotropic(d, two_n, cfg, draw)
        for ip, e in family:
            if evaluate(e, v) != 0:
                return ip, draw
    return None
