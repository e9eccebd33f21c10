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

"""Hadamard products, the toric exclusion certificate and the counterexample family

For the cycle pi = (1 2 ... n) the product Sigma * pi(Sigma) * ... *
pi^{n-1}(Sigma) is positive definite whenever Sigma is.  Its 2x2 principal
minor on {1, 3} is (prod sigma_ii)^2 - (prod sigma_{i-2,i})^2, while the
binomial prod sigma_ii - prod sigma_{i-2,i} lies in the toric ideal of M_n.
"""

__license__ = 'GPL V3'

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from gaussci._ci import CovVariable, cyclic_model, _cyc, _check_cycle
from gaussci._errors import DimensionError, InconsistencyError, ParameterError
from gaussci._lattice import ExponentVector, basis_matrix
from gaussci._linalg import SymMatrix, det, in_integer_row_span, to_rational


def hadamard(sigma, tau):
    """Entrywise product (Sigma * T)_ij = sigma_ij tau_ij

    :raises: DimensionError: Dimensions differ
    """
    if sigma.n != tau.n:
        raise DimensionError('Hadamard product of %dx%d and %dx%d' % (sigma.n, sigma.n, tau.n, tau.n))
    return SymMatrix.from_function(sigma.n, lambda i, j: sigma[i, j] * tau[i, j])


def cyclic_permute(sigma, k):
    """pi^k(Sigma) for pi = (1 2 ... n): entry (i, j) is sigma at (pi^-k(i), pi^-k(j))"""
    n = sigma.n
    return SymMatrix.from_function(n, lambda i, j: sigma[_cyc(i - k, n), _cyc(j - k, n)])


def cyclic_hadamard_power(sigma):
    """Sigma * pi(Sigma) * ... * pi^{n-1}(Sigma)"""
    out = sigma
    for k in range(1, sigma.n):
        out = hadamard(out, cyclic_permute(sigma, k))
    return out


def hadamard_certificate_minor(sigma):
    """det of the principal 2x2 submatrix on {1, 3} of the cyclic Hadamard power"""
    if sigma.n < 3:
        raise DimensionError('Need n >= 3, got [%d]' % sigma.n)
    return det(cyclic_hadamard_power(sigma).submatrix((1, 3), (1, 3)))


@dataclass(frozen=True)
class ExclusionCertificate(object):
    """Evidence that V(toric ideal of M_n) misses the positive definite cone

    lattice_coeffs . M_n equals the binomial's exponent vector, and the
    binomial is prod sigma_ii - prod sigma_{i-2,i}.
    """
    n: int
    lattice_coeffs: tuple
    binomial: ExponentVector
    positive_product_vars: tuple
    negative_product_vars: tuple

    def binomial_text(self):
        return '%s - %s' % ('*'.join(v.name for v in self.positive_product_vars),
                            '*'.join(v.name for v in self.negative_product_vars))


def exclusion_certificate(n):
    """Build and verify the certificate for M_n

    :param n: Cycle length, n >= 4
    :returns: ExclusionCertificate
    :raises: UnsupportedSizeError: n < 4
    :raises: InconsistencyError: A verification step failed
    """
    _check_cycle(n)
    basis = basis_matrix(cyclic_model(n))
    v = ExponentVector()
    for r in range(basis.nrows):
        v = v + basis.row_vector(r)
    coeffs = in_integer_row_span(v.to_dense(basis.var_order), basis.matrix)
    if coeffs != (1,) * n:
        raise InconsistencyError('Sum of the rows of M_%d has coefficients %r' % (n, coeffs))
    positive = tuple(CovVariable(i, i) for i in range(1, n + 1))
    negative = tuple(CovVariable(_cyc(i - 2, n), i) for i in range(1, n + 1))
    expected = ExponentVector()
    for p, q in zip(positive, negative):
        expected = expected + ExponentVector({p: 1, q: -1})
    if v != expected:
        raise InconsistencyError('Row sum [%s] is not [%s]' % (v, expected))
    logging.debug('Certificate[n=%d] binomial[%s]' % (n, v))
    return ExclusionCertificate(n, coeffs, v, positive, negative)


def _product(sigma, variables):
    out = Fraction(1)
    for var in variables:
        out *= sigma[var.i, var.j]
    return out


def certificate_violates_pd(cert, sigma):
    """True iff (prod sigma_ii)^2 > (prod sigma_{i-2,i})^2

    Points of the toric variety have equality, so True shows sigma is off it.

    :raises: DimensionError: sigma is not n x n
    """
    if sigma.n != cert.n:
        raise DimensionError('Certificate is for n=%d, Sigma is %dx%d' % (cert.n, sigma.n, sigma.n))
    return _product(sigma, cert.positive_product_vars) ** 2 > _product(sigma, cert.negative_product_vars) ** 2


def default_parameters(n):
    """a = 1/(2n), e = 1/(4n)"""
    return Fraction(1, 2 * n), Fraction(1, 4 * n)


def counterexample_sigma(n, a=None, e=None):
    """PD matrix satisfying every statement of M_n except n-1 _||_ n | 1

    sigma_ii = 1, sigma_{i-1,i} = a^(n-i+1) (so sigma_{1,n} = a^n),
    sigma_{i-2,i} = a, every other entry e; indices are cyclic.

    :param n: n >= 4
    :param a: Rational with 0 < a < 1/n (default 1/(2n))
    :param e: Rational with 0 < e < 1/n (default 1/(4n))
    :raises: ParameterError: a or e out of range
    """
    _check_cycle(n)
    default_a, default_e = default_parameters(n)
    a = default_a if a is None else to_rational(a)
    e = default_e if e is None else to_rational(e)
    bound = Fraction(1, n)
    for name, value in (('a', a), ('e', e)):
        if not 0 < value < bound:
            raise ParameterError('Need 0 < %s < 1/%d, got [%s]' % (name, n, value))
    entries = {}
    for (i, j) in ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)):
        entries[i, j] = e
    for i in range(1, n + 1):
        entries[i, i] = 1
        entries[tuple(sorted((_cyc(i - 2, n), i)))] = a
    for i in range(1, n + 1):
        entries[tuple(sorted((_cyc(i - 1, n), i)))] = a ** (n - i + 1)
    return SymMatrix(n, entries)


def random_pd_matrix(n, rng, bound=3):
    """B . B^T + I with B an n x n integer matrix with entries in [-bound, bound]

    :param rng: numpy.random.Generator
    """
    b = [[int(x) for x in row] for row in rng.integers(-bound, bound + 1, size=(n, n))]
    return SymMatrix.from_function(n, lambda i, j: sum(b[i - 1][k] * b[j - 1][k] for k in range(n)) + (i == j))


def sample_pd_matrices(n, count, seed=0, bound=3):
    """count seeded random PD matrices"""
    rng = np.random.default_rng(seed)
    return [random_pd_matrix(n, rng, bound) for _ in range(count)]


def rotated_counterexample(n, drop=None, a=None, e=None):
    """counterexample_sigma relabelled so that statement `drop` of M_n is the one that fails

    Statement k of M_n is k _||_ k+1 | k+2.  The unrotated matrix fails
    statement n-1, which is also the default.

    :param drop: 1-based statement position in cyclic_model(n)
    :raises: ParameterError: drop outside 1..n
    """
    if drop is None:
        drop = n - 1
    if not 1 <= drop <= n:
        raise ParameterError('Statement to drop must be in 1..%d, got [%d]' % (n, drop))
    return cyclic_permute(counterexample_sigma(n, a, e), (drop - (n - 1)) % n)
