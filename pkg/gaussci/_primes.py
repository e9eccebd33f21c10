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

"""Minimal primes of a lattice basis ideal from sign patterns

A set S of variables gives a minimal prime iff the matrix N_S (rows meeting
S, restricted to the S columns) is irreducible.  S = {} is the toric
component and is always present.
"""

__license__ = 'GPL V3'

import functools
import itertools
import logging
import multiprocessing
import os
from dataclasses import dataclass

from gaussci._errors import DimensionError, SaturationError, SearchTooLargeError
from gaussci._lattice import BasisMatrix, is_saturated

DEFAULT_MAX_COLUMNS = 24


def max_columns_default():
    """Search cap, GCI_MAX_COLUMNS overrides DEFAULT_MAX_COLUMNS"""
    try:
        return int(os.environ['GCI_MAX_COLUMNS'])
    except KeyError:
        return DEFAULT_MAX_COLUMNS


def _sign(x):
    return (x > 0) - (x < 0)


class SignMatrix(object):
    """Matrix over {-1, 0, +1} with row and column labels"""
    __slots__ = ('rows', 'row_labels', 'col_labels')

    def __init__(self, rows, row_labels=None, col_labels=None, ncols=None):
        rows = tuple(tuple(_sign(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise DimensionError('Ragged sign matrix')
        row_labels = tuple(row_labels) if row_labels is not None else tuple(range(len(rows)))
        col_labels = tuple(col_labels) if col_labels is not None else tuple(range(ncols))
        if len(row_labels) != len(rows) or len(col_labels) != ncols:
            raise DimensionError('Labels do not match a %dx%d matrix' % (len(rows), ncols))
        object.__setattr__(self, 'rows', rows)
        object.__setattr__(self, 'row_labels', row_labels)
        object.__setattr__(self, 'col_labels', col_labels)

    def __setattr__(self, name, value):
        raise AttributeError('SignMatrix is immutable')

    @classmethod
    def from_basis(cls, basis):
        """Signs of a BasisMatrix (or IntMatrix) with its labels"""
        if isinstance(basis, BasisMatrix):
            return cls(basis.matrix.rows(), row_labels=range(basis.nrows),
                       col_labels=basis.var_order, ncols=basis.ncols)
        return cls(basis.rows(), ncols=basis.ncols)

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.col_labels)

    def submatrix(self, rows, cols):
        return SignMatrix([[self.rows[r][c] for c in cols] for r in rows],
                          [self.row_labels[r] for r in rows],
                          [self.col_labels[c] for c in cols], ncols=len(cols))

    def permuted(self, row_perm, col_perm):
        return self.submatrix(row_perm, col_perm)

    def column_nonzeros(self):
        return [sum(1 for row in self.rows if row[c]) for c in range(self.ncols)]

    def support_rows(self, cols):
        """Rows with a nonzero entry in some column of cols"""
        return tuple(r for r, row in enumerate(self.rows) if any(row[c] for c in cols))

    def __eq__(self, other):
        return isinstance(other, SignMatrix) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __reduce__(self):
        return (SignMatrix, (self.rows, self.row_labels, self.col_labels, self.ncols))

    def __repr__(self):
        return 'SignMatrix(%r)' % (self.rows,)


def _mixed_rows(rows):
    return all(1 in row and -1 in row for row in rows)


def is_mixed(m):
    """Every row has a +1 and a -1 entry; a matrix with no rows is mixed"""
    return _mixed_rows(m.rows)


def _is_split(rows, s, t, split_rows, split_cols):
    # N' = split_rows x split_cols must be mixed, t' <= s', t - t' > s - s'
    if not (len(split_cols) <= len(split_rows) and t - len(split_cols) > s - len(split_rows)):
        return False
    return _mixed_rows([[rows[r][c] for c in split_cols] for r in split_rows])


def _support(rows, cols):
    return tuple(r for r, row in enumerate(rows) if any(row[c] for c in cols))


def _support_splits(rows, s, t):
    # R' is forced to be the rows supported on T': any extra row is zero on
    # T' and cannot be mixed in N', so this is the only witness worth testing
    for k in range(1, t):
        for cols in itertools.combinations(range(t), k):
            yield _support(rows, cols), cols


def _exhaustive_splits(rows, s, t):
    # Every (R', T') with a zero block below N'
    for k in range(0, t + 1):
        for cols in itertools.combinations(range(t), k):
            base = _support(rows, cols)
            rest = [r for r in range(s) if r not in base]
            for j in range(len(rest) + 1):
                for extra in itertools.combinations(rest, j):
                    yield tuple(sorted(base + extra)), cols


def _irreducible_rows(rows, t, exhaustive=False):
    s = len(rows)
    if s < 1 or t < 1 or t > s or not _mixed_rows(rows):
        return False
    splits = _exhaustive_splits(rows, s, t) if exhaustive else _support_splits(rows, s, t)
    return not any(_is_split(rows, s, t, r, c) for r, c in splits)


def is_irreducible(m, exhaustive=False):
    """Irreducibility of a sign matrix

    m (s x t) is irreducible iff it is mixed with 1 <= t <= s and no row and
    column permutation gives [N' B'; 0 D'] with N' mixed s' x t', t' <= s' and
    t - t' > s - s'.

    :param m: SignMatrix
    :param exhaustive: If True, try every block split instead of the support-forced ones
    """
    return _irreducible_rows(m.rows, m.ncols, exhaustive)


@dataclass(frozen=True)
class MinimalPrime(object):
    """A minimal prime given by its vanishing variables S and residual rows

    vanishing_vars == frozenset() is the toric component.
    """
    vanishing_vars: frozenset
    residual_rows: tuple

    def is_toric(self):
        return not self.vanishing_vars

    def sort_key(self):
        return (len(self.vanishing_vars) > 0, tuple(sorted(self.vanishing_vars)))

    def names(self):
        return [getattr(v, 'name', str(v)) for v in sorted(self.vanishing_vars)]

    def __str__(self):
        if self.is_toric():
            return 'TORIC'
        return '{%s}' % ', '.join(self.names())


def _candidate_pool(signs, max_columns, exhaustive):
    nonzeros = signs.column_nonzeros()
    if not exhaustive and all(c <= 2 for c in nonzeros):
        # An irreducible s x t block has >= 2s nonzeros and t <= s; with at
        # most two per column only columns with exactly two can take part
        pool = [c for c, count in enumerate(nonzeros) if count == 2]
    else:
        pool = list(range(signs.ncols))
    if max_columns is None:
        max_columns = max_columns_default()
    if len(pool) > max_columns:
        raise SearchTooLargeError('Candidate search over %d columns exceeds the cap of %d' % (len(pool), max_columns))
    return pool


def _candidate_columns(signs, max_columns=None, exhaustive=False):
    pool = _candidate_pool(signs, max_columns, exhaustive)
    # t <= s bounds the pruned search by the row count
    top = len(pool) if exhaustive else min(len(pool), signs.nrows)
    for k in range(top + 1):
        for cols in itertools.combinations(pool, k):
            yield cols


def candidate_variable_sets(basis, max_columns=None, exhaustive=False):
    """Candidate sets S for the minimal prime search

    :param basis: BasisMatrix or SignMatrix
    :param max_columns: Cap on the candidate column pool (default 24 or GCI_MAX_COLUMNS)
    :param exhaustive: If True, skip the column count pruning
    :returns: List of frozensets of column labels, starting with the empty set
    :raises: SearchTooLargeError: The pool exceeds max_columns
    """
    signs = basis if isinstance(basis, SignMatrix) else SignMatrix.from_basis(basis)
    return [frozenset(signs.col_labels[c] for c in cols)
            for cols in _candidate_columns(signs, max_columns, exhaustive)]


def _evaluate_candidate(rows, exhaustive, cols):
    support = _support(rows, cols)
    sub = [[rows[r][c] for c in cols] for r in support]
    if _irreducible_rows(sub, len(cols), exhaustive):
        return cols, support
    return None


def _map_candidates(signs, candidates, exhaustive, workers):
    evaluate = functools.partial(_evaluate_candidate, signs.rows, exhaustive)
    if workers and workers > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            results = pool.map(evaluate, candidates, chunksize=64)
    else:
        results = [evaluate(cols) for cols in candidates]
    return [r for r in results if r is not None]


def _drop_nonminimal(primes, diagnostics=None):
    out = []
    for prime in primes:
        smaller = [p for p in primes
                   if p.vanishing_vars < prime.vanishing_vars and p.residual_rows == prime.residual_rows]
        if smaller:
            message = 'prime %s contains accepted component %s with identical residual rows' % (prime, smaller[0])
            logging.warning('Dropping %s' % message)
            if diagnostics is not None:
                diagnostics.append(message)
            continue
        out.append(prime)
    return out


def minimal_primes(basis, max_columns=None, exhaustive=False, workers=None, diagnostics=None):
    """Minimal primes of the lattice basis ideal of basis

    :param basis: BasisMatrix (must span a saturated lattice) or SignMatrix
    :param max_columns: Cap on the candidate column pool (default 24 or GCI_MAX_COLUMNS)
    :param exhaustive: If True, enumerate all column subsets and all block splits
    :param workers: If > 1, evaluate candidates on a process pool of this size
    :param diagnostics: Optional list, receives one message per dropped non-minimal component
    :returns: List of MinimalPrime in lexicographic order of S, toric first
    :raises: SaturationError: basis is a BasisMatrix whose lattice is not saturated
    :raises: SearchTooLargeError: The candidate pool exceeds max_columns
    """
    if isinstance(basis, SignMatrix):
        signs = basis
    else:
        if not is_saturated(basis):
            raise SaturationError('Lattice spanned by the basis rows is not saturated')
        signs = SignMatrix.from_basis(basis)
    candidates = [cols for cols in _candidate_columns(signs, max_columns, exhaustive) if cols]
    logging.info('Primes[%dx%d] candidates[%d] exhaustive[%s]' % (signs.nrows, signs.ncols, len(candidates) + 1, exhaustive))
    primes = [MinimalPrime(frozenset(), tuple(range(signs.nrows)))]
    for cols, support in _map_candidates(signs, candidates, exhaustive, workers):
        residual = tuple(r for r in range(signs.nrows) if r not in support)
        primes.append(MinimalPrime(frozenset(signs.col_labels[c] for c in cols), residual))
    primes = _drop_nonminimal(primes, diagnostics)
    primes.sort(key=MinimalPrime.sort_key)
    logging.info('Primes[%dx%d] found[%d]' % (signs.nrows, signs.ncols, len(primes)))
    return primes


def induced_matrix(basis, prime):
    """N_S for a prime: rows meeting S restricted to the S columns"""
    signs = basis if isinstance(basis, SignMatrix) else SignMatrix.from_basis(basis)
    cols = [c for c, label in enumerate(signs.col_labels) if label in prime.vanishing_vars]
    return signs.submatrix(signs.support_rows(cols), cols)
