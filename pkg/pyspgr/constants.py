"""
.. currentmodule:: pyspgr

Most API functions will throw a :exc:`SpgrError` (a :exc:`ValueError`) in
case an error is encountered. The :attr:`errno` attribute will set to one of
the following values:

.. data:: ERR_INVALID_INDEX

    An index set or flag word is malformed: unsorted, repeated or out of the
    range ``1..2n``.

.. data:: ERR_NOT_SYMPLECTIC

    The operation needs an index set (or flag word) with no two entries
    summing to ``2n+1``.

.. data:: ERR_SHAPE_MISMATCH

    Cardinalities, ambient sizes or matrix shapes do not fit together.

.. data:: ERR_NOT_COMPARABLE

    ``j <= i`` in the Bruhat order is required but does not hold.

.. data:: ERR_INVALID_COLUMN

    A column number is out of range or a pair of columns is not ``s < t``.

.. data:: ERR_RANK_DEFICIENT

    A matrix does not have full column rank and therefore presents no point.

.. data:: ERR_SINGULAR_CHART

    The point lies outside the requested chart (the chart Plücker coordinate
    vanishes).

.. data:: ERR_INCONSISTENT_SYSTEM

    A linear system handed to the random solver has no solution.

.. data:: ERR_RESAMPLE_BUDGET

    A sampler ran out of resampling attempts.

.. data:: ERR_PARITY

    ``tau(i^C) + m`` is odd; this can only be caused by a broken lift.

.. data:: ERR_FORMULA_INAPPLICABLE

    A closed formula was requested outside of its domain.

.. data:: ERR_UNSTABLE_SAMPLE

    A sampled dimension changed after more points were added.

.. data:: ERR_VERIFICATION_FAILED

    A cross-check between two independent computations failed.

.. data:: ERR_PARSE

    Textual input (index lists, rationals, environment values) could not be
    parsed.

"""

ERR_INVALID_INDEX = -1
ERR_NOT_SYMPLECTIC = -2
ERR_SHAPE_MISMATCH = -3
ERR_NOT_COMPARABLE = -4
ERR_INVALID_COLUMN = -5
ERR_RANK_DEFICIENT = -6
ERR_SINGULAR_CHART = -7
ERR_INCONSISTENT_SYSTEM = -8
ERR_RESAMPLE_BUDGET = -9
ERR_PARITY = -10
ERR_FORMULA_INAPPLICABLE = -11
ERR_UNSTABLE_SAMPLE = -12
ERR_VERIFICATION_FAILED = -100
ERR_PARSE = -200

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

DEFAULT_SEED = 0
DEFAULT_BOUND = 10
DEFAULT_MAX_RESAMPLES = 100
DEFAULT_TRIALS = 100
DEFAULT_TWO_N_MAX = 8

THREADS_ENV = 'SPGR_THREADS'

MODE_SYMBOLIC = 'symbolic'
MODE_SAMPLED = 'sampled'
