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

try:
    from .version import __version__
except ImportError:
    __version__ = 'dev'

from .combinat import (IndexSet, FlagWord, inversions, is_symplectic,
        bruhat_leq, enumerate_indices, lift_a, lift_c, length_a, length_c,
        dims, grassmannian_dims, flag_dims, flag_dims_direct, flag_enumerate,
        flag_bruhat_leq)
from .constants import *
from .equations import (build_E, e_family, local_equation, local_hyperplanes,
        restriction_zero, restrict, check_pairing_identity,
        check_local_relation, check_flag_relation, lemma_partition_identity,
        e_span_rank, vanishing_space_dim, span_inclusion,
        e_vanishes_on_samples, SignedIdentityReport)
from .errors import SpgrError, VerificationError, error_string
from .linalg import Rat, RatMatrix, MPoly, det, minor, rank, kernel_basis, solve
from .pluecker import (SubspaceMatrix, FlagMatrix, LinearSection, plucker,
        in_chart, standardize, pairing, is_isotropic, evaluate)
from .sampler import (SampleConfig, sample_isotropic, sample_schubert,
        sample_standard_point, sample_flag, sample_standard_flag)
from .schubert import (local_generators, count_nonzero, codim_pairs, n_id,
        n_id_closed_form, is_lci, flag_lci_pattern, flag_is_lci,
        tangent_dim_a, tangent_codim_c_direct, tangent_codim_c_closed_form,
        smooth_a, smooth_c, smooth_c_general, smooth_c_trichotomy,
        smooth_c_rectangle, lci_intrinsic, ClassificationRecord,
        classify_index, classify)
from .verify import SUITES, SuiteResult, run_suite, run_suites
