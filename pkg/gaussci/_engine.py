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

"""Implications of binomial CI models on positive definite matrices

model -> lattice basis ideal -> minimal primes -> PD exclusion -> implied
marginal independences, plus exact witness checking for sharpness.
"""

__license__ = 'GPL V3'

import logging
import os
from dataclasses import dataclass

from gaussci._ci import CIStatement, ci_holds, cyclic_model, marginal_conclusions, rotate_statement
from gaussci._certificates import (certificate_violates_pd, exclusion_certificate,
                                   hadamard_certificate_minor, rotated_counterexample,
                                   sample_pd_matrices, _product)
from gaussci._errors import InconsistencyError, NotPositiveDefiniteError
from gaussci._lattice import basis_matrix
from gaussci._linalg import is_diagonally_dominant, is_positive_definite
from gaussci._primes import minimal_primes

DEFAULT_SAMPLES = 50
TORIC_CAVEAT = 'toric component not excluded'


def default_seed():
    """Sampling seed from GCI_SEED, 0 when unset

    :raises: ValueError: GCI_SEED is not a decimal integer
    """
    try:
        value = os.environ['GCI_SEED']
    except KeyError:
        return 0
    return int(value, 10)


@dataclass(frozen=True)
class ImplicationReport(object):
    model: object
    basis: object
    primes: tuple
    excluded: tuple
    surviving_vars: frozenset
    implied: tuple
    evidence_samples: int
    seed: int
    caveats: tuple = ()

    @property
    def toric_excluded(self):
        return any(prime.is_toric() for prime, _ in self.excluded)


def _check_evidence(cert, samples, seed):
    for sigma in sample_pd_matrices(cert.n, samples, seed):
        if not is_positive_definite(sigma):
            raise InconsistencyError('Sampled matrix is not positive definite: %r' % (sigma,))
        if not certificate_violates_pd(cert, sigma):
            raise InconsistencyError('Certificate inequality fails on %r' % (sigma,))
        gap = (_product(sigma, cert.positive_product_vars) ** 2
               - _product(sigma, cert.negative_product_vars) ** 2)
        if hadamard_certificate_minor(sigma) != gap:
            raise InconsistencyError('Hadamard minor disagrees with the certificate on %r' % (sigma,))


def implied_marginals(model, samples=DEFAULT_SAMPLES, seed=None, max_columns=None, workers=None):
    """Marginal independences implied by a binomial model on PD matrices

    Minimal primes come from the sign pattern search.  For M_n the toric
    component is excluded by an ExclusionCertificate checked on `samples`
    random PD matrices; other toric components are kept with a caveat.  The
    implied statements are a _||_ b for sigma_ab vanishing on every
    remaining component.

    :param model: CIModel of singleton statements
    :param samples: Number of PD matrices used as evidence for the certificate
    :param seed: Sampling seed (default from GCI_SEED, else 0)
    :param max_columns: Passed to minimal_primes
    :param workers: Passed to minimal_primes
    :returns: ImplicationReport
    :raises: BinomialScopeError: A statement is not a single binomial
    :raises: SaturationError: The basis lattice is not saturated
    :raises: SearchTooLargeError: From the prime search
    """
    if seed is None:
        seed = default_seed()
    basis = basis_matrix(model)
    caveats = []
    primes = minimal_primes(basis, max_columns=max_columns, workers=workers, diagnostics=caveats)
    excluded = []
    for prime in primes:
        if not prime.is_toric():
            continue
        if model.is_cyclic():
            cert = exclusion_certificate(model.n)
            _check_evidence(cert, samples, seed)
            excluded.append((prime, cert))
        else:
            caveats.append(TORIC_CAVEAT)
    excluded_primes = [prime for prime, _ in excluded]
    remaining = [prime for prime in primes if prime not in excluded_primes]
    if remaining:
        surviving = frozenset.intersection(*[prime.vanishing_vars for prime in remaining])
    else:
        caveats.append('every component excluded')
        surviving = frozenset()
    implied = []
    for var in sorted(surviving):
        if var.is_diagonal():
            logging.warning('Variable %s vanishes on every surviving component' % var)
            continue
        implied.append(CIStatement(var.i, var.j))
    logging.info('Implication[%s] primes[%d] excluded[%d] implied[%d]'
                 % (model, len(primes), len(excluded), len(implied)))
    return ImplicationReport(model, basis, tuple(primes), tuple(excluded), surviving,
                             tuple(sorted(implied)), samples if excluded else 0, seed, tuple(caveats))


@dataclass(frozen=True)
class WitnessReport(object):
    sigma: object
    holding: tuple
    failing: tuple
    holding_conclusions: tuple
    failing_conclusions: tuple
    cycle_holding: tuple = ()

    @property
    def non_implication(self):
        """Every model statement holds but some conclusion fails"""
        return not self.failing and bool(self.failing_conclusions)

    @property
    def sharpness(self):
        """Some but not all statements of M_n hold and no conclusion holds"""
        return 0 < len(self.cycle_holding) < self.sigma.n and not self.holding_conclusions


def check_witness(sigma, model, conclusions):
    """Exact report of which statements and conclusions hold on sigma

    :raises: NotPositiveDefiniteError: sigma is not positive definite
    """
    if not is_positive_definite(sigma):
        raise NotPositiveDefiniteError('Witness matrix is not positive definite')
    split = lambda stmts: ([s for s in stmts if ci_holds(sigma, s)],
                           [s for s in stmts if not ci_holds(sigma, s)])
    holding, failing = split(model)
    holding_conclusions, failing_conclusions = split(conclusions)
    cycle_holding = split(cyclic_model(sigma.n))[0] if sigma.n >= 4 else ()
    return WitnessReport(sigma, tuple(holding), tuple(failing),
                         tuple(holding_conclusions), tuple(failing_conclusions),
                         tuple(cycle_holding))


@dataclass(frozen=True)
class DropOneWitness(object):
    dropped: CIStatement
    report: WitnessReport


def drop_one_suite(n, a=None, e=None):
    """One verified PD witness per statement of M_n

    Witness k satisfies every statement of M_n except statement k and no
    marginal conclusion; it is the fixed counterexample relabelled along the cycle.

    :raises: UnsupportedSizeError: n < 4
    :raises: InconsistencyError: A witness failed verification
    """
    model = cyclic_model(n)
    conclusions = marginal_conclusions(n)
    base_failing = model.statements[n - 2]
    out = []
    for k, stmt in enumerate(model.statements, 1):
        sigma = rotated_counterexample(n, k, a, e)
        dropped = rotate_statement(base_failing, n, (k - (n - 1)) % n)
        if dropped != stmt:
            raise InconsistencyError('Rotation maps %s to %s, expected %s' % (base_failing, dropped, stmt))
        if not is_diagonally_dominant(sigma):
            raise InconsistencyError('Witness for %s is not diagonally dominant' % stmt)
        if any(value == 0 for _, value in sigma.items()):
            raise InconsistencyError('Witness for %s has a zero entry' % stmt)
        report = check_witness(sigma, model, conclusions)
        if report.failing != (stmt,) or report.holding_conclusions:
            raise InconsistencyError('Witness for %s: failing %s, holding conclusions %s'
                                     % (stmt, report.failing, report.holding_conclusions))
        out.append(DropOneWitness(stmt, report))
    logging.info('DropOne[n=%d] witnesses[%d]' % (n, len(out)))
    return out
