#!/usr/bin/env python
# (C) Copyright 2026 The gaussci developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


__license__ = 'GPL V3'

from gaussci._errors import (CIError, DimensionError, SingularConditioningError, BoundsError,
                             UnsupportedSizeError, BinomialScopeError, NotABasisError, SaturationError,
                             SearchTooLargeError, InconsistencyError, ParameterError,
                             NotPositiveDefiniteError, StatementParseError, DisjointnessError, DocumentError)
from gaussci._linalg import (SymMatrix, IntMatrix, to_rational, format_rational, det, rank, schur_complement,
                             leading_minors, is_positive_definite, is_diagonally_dominant, smith_normal_form,
                             in_integer_row_span)
from gaussci._ci import (CovVariable, CIStatement, CIModel, MinorGenerator, ci_holds, holding_statements,
                         minor_generators, cyclic_model, marginal_conclusions, rotate_statement, rotate_model,
                         parse_statement)
from gaussci._lattice import ExponentVector, BasisMatrix, exponent_vector, basis_matrix, is_saturated
from gaussci._primes import (SignMatrix, MinimalPrime, is_mixed, is_irreducible, candidate_variable_sets,
                             minimal_primes, induced_matrix)
from gaussci._certificates import (ExclusionCertificate, hadamard, cyclic_permute, cyclic_hadamard_power,
                                   hadamard_certificate_minor, exclusion_certificate, certificate_violates_pd,
                                   counterexample_sigma, rotated_counterexample, random_pd_matrix,
                                   sample_pd_matrices)
from gaussci._engine import (ImplicationReport, WitnessReport, DropOneWitness, implied_marginals,
                             check_witness, drop_one_suite)
from gaussci._document import MatrixDocument, parse_rational, load_matrix, dump_matrix
from gaussci._job_cli import run, main
from gaussci._test import Test
