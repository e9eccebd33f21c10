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

"""Exponent vectors of binomial CI generators and the lattice basis matrix"""

__license__ = 'GPL V3'

import logging
from dataclasses import dataclass

from gaussci._ci import CovVariable
from gaussci._errors import BinomialScopeError, NotABasisError
from gaussci._linalg import IntMatrix, rank, smith_normal_form


class ExponentVector(object):
    """Sparse integer vector over covariance variables, no explicit zeros"""
    __slots__ = ('_coords',)

    def __init__(self, coords=None):
        merged = {}
        for var, value in (coords or {}).items():
            if not isinstance(var, CovVariable):
                var = CovVariable(*var)
            merged[var] = merged.get(var, 0) + int(value)
        self._coords = tuple(sorted((v, x) for v, x in merged.items() if x))

    @classmethod
    def from_dense(cls, values, var_order):
        return cls(dict(zip(var_order, values)))

    def __getitem__(self, var):
        if not isinstance(var, CovVariable):
            var = CovVariable(*var)
        return dict(self._coords).get(var, 0)

    def items(self):
        return list(self._coords)

    def support(self):
        return frozenset(v for v, _ in self._coords)

    def positive(self):
        """u+ of the cancellation free representation u = u+ - u-"""
        return ExponentVector(dict((v, x) for v, x in self._coords if x > 0))

    def negative(self):
        return ExponentVector(dict((v, -x) for v, x in self._coords if x < 0))

    def to_dense(self, var_order):
        coords = dict(self._coords)
        return tuple(coords.get(v, 0) for v in var_order)

    def monomial(self):
        """Variables of a nonnegative vector, repeated by exponent"""
        return tuple(v for v, x in self._coords for _ in range(x))

    def __add__(self, other):
        coords = dict(self._coords)
        for v, x in other._coords:
            coords[v] = coords.get(v, 0) + x
        return ExponentVector(coords)

    def __neg__(self):
        return ExponentVector(dict((v, -x) for v, x in self._coords))

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, ExponentVector) and self._coords == other._coords

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._coords)

    def __len__(self):
        return len(self._coords)

    def __str__(self):
        return ' '.join('%+d*%s' % (x, v.name) for v, x in self._coords) or '0'

    def __repr__(self):
        return 'ExponentVector(%s)' % self


def exponent_vector(stmt, n=None):
    """Exponent vector of the binomial sigma_rr sigma_pq - sigma_pr sigma_qr

    :param stmt: CIStatement with A={p}, B={q}, C={r}
    :param n: Model size, only used for a bounds check
    :returns: ExponentVector with +1 on (r,r), (p,q) and -1 on (p,r), (q,r)
    :raises: BinomialScopeError: stmt is not singleton-A/B/C
    """
    if not stmt.is_singleton():
        raise BinomialScopeError('[%s] is not a single binomial (needs singleton A, B and nonempty singleton C)' % stmt)
    if n is not None and max(stmt.indices) > n:
        raise BinomialScopeError('[%s] does not fit in n=%d' % (stmt, n))
    (p,), (q,), (r,) = stmt.a, stmt.b, stmt.c
    return ExponentVector({(r, r): 1, (p, q): 1, (p, r): -1, (q, r): -1})


def column_key(var, n):
    """Sort key putting sigma_ij in a block by cyclic distance |i - j| mod n

    Inside a block columns follow the start index s with s + d = other index
    (mod n).  The diagonal block is rotated to start at (3,3) so that column k
    holds the conditioning variable of statement k of M_n; this lines the
    three blocks up as identity, circulant and minus identity.
    """
    forward, backward = (var.j - var.i) % n, (var.i - var.j) % n
    distance = min(forward, backward)
    if distance == 0:
        return (0, (var.i - 3) % n)
    start = var.i if forward <= backward else var.j
    return (distance, start)


@dataclass(frozen=True)
class BasisMatrix(object):
    """Rows are exponent vectors of model binomials, columns are variables

    unused_vars keeps the variables of 1..n that appear in no row.
    """
    matrix: IntMatrix
    var_order: tuple
    n: int
    row_labels: tuple = ()
    unused_vars: tuple = ()

    @property
    def nrows(self):
        return self.matrix.nrows

    @property
    def ncols(self):
        return self.matrix.ncols

    def row_vector(self, r):
        return ExponentVector.from_dense(self.matrix.row(r), self.var_order)

    def column_nonzeros(self):
        return [sum(1 for x in self.matrix.column(j) if x) for j in range(self.ncols)]

    def row_support(self, r):
        return frozenset(v for v, x in zip(self.var_order, self.matrix.row(r)) if x)

    @classmethod
    def from_rows(cls, rows, var_order, n, row_labels=()):
        """Build from raw integer rows, checking linear independence"""
        matrix = IntMatrix(rows, col_labels=[v.name for v in var_order], ncols=len(var_order))
        if rank(matrix) != matrix.nrows:
            raise NotABasisError('The %d rows are linearly dependent (rank %d)' % (matrix.nrows, rank(matrix)))
        return cls(matrix, tuple(var_order), n, tuple(row_labels))


def all_variables(n):
    return [CovVariable(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]


def basis_matrix(model):
    """Stack the exponent vectors of a binomial model as an integer matrix

    :param model: CIModel whose statements are all singleton-A/B/C
    :returns: BasisMatrix with zero columns dropped (kept in unused_vars)
    :raises: BinomialScopeError: A statement is not a single binomial
    :raises: NotABasisError: The rows are linearly dependent
    """
    vectors = [exponent_vector(stmt, model.n) for stmt in model]
    used = set()
    for vec in vectors:
        used |= vec.support()
    key = lambda v: column_key(v, model.n)
    var_order = sorted(used, key=key)
    basis = BasisMatrix.from_rows([vec.to_dense(var_order) for vec in vectors], var_order,
                                  model.n, row_labels=list(model))
    unused = tuple(sorted((v for v in all_variables(model.n) if v not in used), key=key))
    logging.debug('Basis[n=%d] rows[%d] cols[%d] unused[%d]' % (model.n, basis.nrows, basis.ncols, len(unused)))
    return BasisMatrix(basis.matrix, basis.var_order, basis.n, basis.row_labels, unused)


def is_saturated(basis):
    """True iff every nonzero Smith invariant factor is 1

    :param basis: BasisMatrix or IntMatrix
    """
    matrix = basis.matrix if isinstance(basis, BasisMatrix) else basis
    _, factors = smith_normal_form(matrix)
    return all(f == 1 for f in factors if f)
