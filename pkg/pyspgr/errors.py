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

from . import constants
from .constants import ERR_VERIFICATION_FAILED


def error_string(code):
    """Return the name of the ``ERR_*`` constant for `code`."""
    for k, v in vars(constants).items():
        if k.startswith('ERR_') and v == code:
            return k
    return 'ERR_UNKNOWN'


class SpgrError(ValueError):
    """Raised by all library functions on invalid input or failed checks.

    Like :exc:`IOError`, the exception carries an :attr:`errno` (one of the
    ``ERR_*`` constants) and a :attr:`strerror` (the constant's name).
    """

    def __init__(self, errno, detail=None):
        super(SpgrError, self).__init__(errno, detail)
        self.errno = errno
        self.strerror = error_string(errno)
        self.detail = detail

    def __str__(self):
        if self.detail:
            return '%s: %s' % (self.strerror, self.detail)
        return self.strerror


class VerificationError(SpgrError):
    """Two independent computations disagreed."""

    def __init__(self, detail=None, errno=ERR_VERIFICATION_FAILED):
        super(VerificationError, self).__init__(errno, detail)
        # keep pickling symmetric with __init__
        self.args = (detail, errno)


def raise_error(code, detail=None):
    """Raise the exception class matching `code`."""
    if code == ERR_VERIFICATION_FAILED:
        raise VerificationError(detail)
    raise SpgrError(code, detail)


def raise_error_if(condition, code, detail=None):
    """Raises a :class:`SpgrError` with `code` if `condition` holds."""
    if condition:
        raise_error(code, detail)
