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

"""Exact rational sample points.

Every sampler is a pure function of ``(cfg, draw)``: the draw index selects
an independent child of the configured seed, so batches can be split across
workers without changing any sample.
"""

import logging

import numpy as np

from .combinat import is_symplectic
from .constants import (DEFAULT_SEED, DEFAULT_BOUND, DEFAULT_MAX_RESAMPLES,
        ERR_NOT_SYMPLECTIC, ERR_RESAMPLE_BUDGET, ERR_SHAPE_MISMATCH)
from .errors import raise_error, raise_error_if
from .linalg import RatMatrix, random_solution, rank
from .pluecker import SubspaceMatrix, FlagMatrix, pairing_functional

log = logging.getLogger(__name__)


class SampleConfig(object):
    """Seed and size limits shared by all samplers."""

    def __init__(self, seed=DEFAULT_SEED, coefficient_bound=DEFAULT_BOUND,
            max_resamples=DEFAULT_MAX_RESAMPLES):
        raise_error_if(seed < 0 or seed >= 2 ** 64, ERR_SHAPE_MISMATCH,
                'seed %r is not a 64-bit unsigned integer' % (seed,))
        raise_error_if(coefficient_bound < 1, ERR_SHAPE_MISMATCH,
                'coefficient bound must be at least 1')
        raise_error_if(max_resamples < 1, ERR_SHAPE_MISMATCH,
                'at least one sampling attempt is needed')
        self.seed = seed
        self.coefficient_bound = coefficient_bound
        self.max_resamples = max_resamples

    def __repr__(self):
        return 'SampleConfig(seed=%d, coefficient_bound=%d, ' \
                'max_resamples=%d)' % (self.seed, self.coefficient_bound,
                self.max_resamples)

    def generator(self, draw):
        """The :class:`numpy.random.Generator` of draw number `draw`."""
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(draw,))
        return np.random.default_rng(ss)

    def spawn(self, count):
        """`count` configurations with independent child seeds."""
        children = np.random.SeedSequence(self.seed).spawn(count)
        return [SampleConfig(int(c.generate_state(1, np.uint64)[0]),
                self.coefficient_bound, self.max_resamples)
                for c in children]

    def randint(self, rng):
        bound = self.coefficient_bound
        return int(rng.integers(-bound, bound + 1))


def _constraints(columns, two_n):
    return RatMatrix([pairing_functional(c, two_n) for c in columns], two_n)


def _solve_column(cfg, rng, columns, two_n, fixed, free, symplectic):
    """A column with the `fixed` entries set and random values on `free`
    rows (1-based); isotropic to `columns` when `symplectic`."""
    x = [0] * two_n
    for r, value in fixed.items():
        x[r - 1] = value
    free = sorted(free)
    if not symplectic or not columns:
        for r in free:
            x[r - 1] = cfg.randint(rng)
        return x
    # solve sum_r f[r] x[r] = -sum_fixed f[r] x[r] in the free unknowns
    functionals = [pairing_functional(c, two_n) for c in columns]
    a = RatMatrix([[f[r - 1] for r in free] for f in functionals],
            len(free))
    b = [-sum(f[r - 1] * v for r, v in fixed.items()) for f in functionals]
    y = random_solution(a, rng, cfg.coefficient_bound, b)
    for r, value in zip(free, y):
        x[r - 1] = value
    return x


def sample_isotropic(d, two_n, cfg, draw=0):
    """A random point of Gr^C(d,2n)."""
    raise_error_if(d < 0 or 2 * d > two_n, ERR_SHAPE_MISMATCH,
            'isotropic subspaces of dimension %d need d <= n, 2n=%d'
            % (d, two_n))
    rng = cfg.generator(draw)
    columns = []
    for k in range(d):
        for attempt in range(cfg.max_resamples):
            x = random_solution(_constraints(columns, two_n), rng,
                    cfg.coefficient_bound)
            if rank(RatMatrix.from_columns(columns + [x], two_n)) == k + 1:
                break
            log.debug('draw %d: column %d dependent, resampling', draw, k + 1)
        else:
            raise_error(ERR_RESAMPLE_BUDGET,
                    'no independent isotropic column %d after %d attempts'
                    % (k + 1, cfg.max_resamples))
        columns.append(x)
    return SubspaceMatrix.from_columns(columns, two_n)


def sample_schubert(i, symplectic, cfg, draw=0):
    """A random point of the Schubert cell of `i`.

    Column t is 1 in row ``i_t``, zero below it and random above it; in the
    symplectic case the random part solves the isotropy conditions against
    the previous columns.
    """
    raise_error_if(symplectic and not is_symplectic(i), ERR_NOT_SYMPLECTIC,
            '%s is not symplectic' % (i,))
    rng = cfg.generator(draw)
    columns = []
    for v in i:
        columns.append(_solve_column(cfg, rng, columns, i.two_n, {v: 1},
                range(1, v), symplectic))
    return SubspaceMatrix.from_columns(columns, i.two_n)


def sample_standard_point(i, cfg, draw=0):
    """A random i-standard presentation (not isotropic in general)."""
    rng = cfg.generator(draw)
    columns = []
    for v in i:
        columns.append([int(r == v) if r in i else cfg.randint(rng)
                for r in range(1, i.two_n + 1)])
    return SubspaceMatrix.from_columns(columns, i.two_n)


def sample_flag(w, symplectic, cfg, draw=0):
    """A random point of the flag chart cell ``O_w``.

    Column t is ``e_{w_t}`` plus a random combination of ``e_a`` for
    ``a < w_t`` outside ``{w_1, ..., w_{t-1}}``.
    """
    raise_error_if(symplectic and not is_symplectic(w), ERR_NOT_SYMPLECTIC,
            '%s is not symplectic' % (w,))
    rng = cfg.generator(draw)
    columns = []
    for t, v in enumerate(w):
        used = set(w[:t])
        free = [a for a in range(1, v) if a not in used]
        columns.append(_solve_column(cfg, rng, columns, w.two_n, {v: 1},
                free, symplectic))
    return FlagMatrix.from_columns(columns, w.two_n)


def sample_standard_flag(w, symplectic, cfg, draw=0):
    """A random flag whose prefix-standard presentations nest.

    Column t is 1 in row ``w_t``, 0 on every other row of `w` and random
    elsewhere, so the first d columns are a ``w^(d)``-standard presentation
    of ``V_d`` up to column order.
    """
    raise_error_if(symplectic and not is_symplectic(w), ERR_NOT_SYMPLECTIC,
            '%s is not symplectic' % (w,))
    rng = cfg.generator(draw)
    letters = set(w)
    free = [a for a in range(1, w.two_n + 1) if a not in letters]
    columns = []
    for v in w:
        fixed = dict((a, int(a == v)) for a in letters)
        columns.append(_solve_column(cfg, rng, columns, w.two_n, fixed,
                free, symplectic))
    return FlagMatrix.from_columns(columns, w.two_n)
