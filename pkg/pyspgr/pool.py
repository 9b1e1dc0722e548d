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

import logging
import os
from concurrent.futures import ProcessPoolExecutor

from .constants import THREADS_ENV, ERR_PARSE
from .errors import raise_error, raise_error_if

log = logging.getLogger(__name__)


def worker_count():
    """Worker cap from ``SPGR_THREADS``; unset means serial."""
    value = os.environ.get(THREADS_ENV, '').strip()
    if not value:
        return 1
    try:
        workers = int(value, 10)
    except ValueError:
        raise_error(ERR_PARSE, '%s=%r is not a number' % (THREADS_ENV, value))
    raise_error_if(workers < 1, ERR_PARSE,
            '%s=%d must be at least 1' % (THREADS_ENV, workers))
    return workers


def ordered_map(func, items, workers=None):
    """``list(map(func, items))``, fanned out over processes if allowed.

    `func` must be a module level function. Results always come back in
    input order.
    """
    items = list(items)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    log.debug('mapping %d items over %d workers', len(items), workers)
    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
