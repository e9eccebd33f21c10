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

"""Exact rational and integer linear algebra

Entries are fractions.Fraction; heavy lifting (Bareiss determinants, exact
rank, Smith normal form) is delegated to sympy.  Matrices are immutable.
"""

__license__ = 'GPL V3'

from fractions import Fraction

import sympy
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex
from sympy.matrices.normalforms import smith_normal_form as _sympy_snf
from sympy.polys.domains import ZZ

from gaussci._errors import DimensionError, BoundsError, SingularConditioningError


def to_rational(x):
    """Convert an int, Fraction, sympy Rational or 'p/q' string to Fraction

    :param x: Value to convert
    :returns: Fraction in canonical form
    :raises: ValueError: x is not an exact rational (floats are rejected)
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise ValueError('Refusing inexact value [%r]' % (x,))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    raise ValueError('Cannot convert [%r] to a rational' % (x,))


def format_rational(x):
    """'p/q' or 'p' for a Fraction"""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '%d/%d' % (x.numerator, x.denominator)


def _to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator)
                          for v in map(to_rational, row)] for row in rows])


def _from_sympy(m):
    return [[to_rational(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def _as_rows(m):
    if isinstance(m, (SymMatrix, IntMatrix)):
        return m.rows()
    return [list(row) for row in m]


class SymMatrix(object):
    """Immutable symmetric n x n matrix of Fractions, indexed 1..n

    Only the upper triangle is stored; reading (i, j) with i > j returns (j, i).
    """
    __slots__ = ('n', '_entries')

    def __init__(self, n, entries=None):
        """
        :param n: Dimension
        :param entries: Dict {(i, j): value} with 1 <= i <= j <= n, missing entries are 0
        """
        n = int(n)
        if n < 0:
            raise DimensionError('Negative dimension [%d]' % n)
        upper = [Fraction(0)] * (n * (n + 1) // 2)
        for (i, j), v in (entries or {}).items():
            if i > j:
                i, j = j, i
            upper[_upper_index(n, i, j)] = to_rational(v)
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, '_entries', tuple(upper))

    def __setattr__(self, name, value):
        raise AttributeError('SymMatrix is immutable')

    @classmethod
    def from_rows(cls, rows):
        """Build from a full grid, verifying it is square and symmetric"""
        rows = [[to_rational(v) for v in row] for row in rows]
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionError('Matrix is not square')
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise DimensionError('Matrix is not symmetric at [%d,%d]' % (i + 1, j + 1))
        return cls(n, dict(((i + 1, j + 1), rows[i][j])
                           for i in range(n) for j in range(i, n)))

    @classmethod
    def from_function(cls, n, func):
        """Build from func(i, j) evaluated for 1 <= i <= j <= n"""
        return cls(n, dict(((i, j), func(i, j))
                           for i in range(1, n + 1) for j in range(i, n + 1)))

    @classmethod
    def identity(cls, n):
        return cls.from_function(n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def ones(cls, n):
        return cls.from_function(n, lambda i, j: 1)

    def __getitem__(self, ij):
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise BoundsError('Index [%d,%d] outside 1..%d' % (i, j, self.n))
        if i > j:
            i, j = j, i
        return self._entries[_upper_index(self.n, i, j)]

    def items(self):
        """Iterator of ((i, j), value) over the upper triangle"""
        for i in range(1, self.n + 1):
            for j in range(i, self.n + 1):
                yield (i, j), self[i, j]

    def rows(self):
        return [[self[i, j] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def submatrix(self, rows, cols):
        """Rows/cols are 1-based index sequences, order is kept"""
        return [[self[i, j] for j in cols] for i in rows]

    def to_sympy(self):
        return _to_sympy(self.rows())

    def __eq__(self, other):
        return isinstance(other, SymMatrix) and self.n == other.n and self._entries == other._entries

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self._entries))

    def __reduce__(self):
        return (SymMatrix, (self.n, dict(self.items())))

    def __repr__(self):
        return 'SymMatrix(%d, %r)' % (self.n, [[format_rational(v) for v in row] for row in self.rows()])


def _upper_index(n, i, j):
    # Row-major offset of (i, j), i <= j, in the packed upper triangle
    i -= 1
    j -= 1
    return i * n - i * (i - 1) // 2 + (j - i)


class IntMatrix(object):
    """Immutable integer matrix with optional column labels"""
    __slots__ = ('nrows', 'ncols', 'entries', 'col_labels')

    def __init__(self, rows, col_labels=None, ncols=None):
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        if any(len(row) != ncols for row in entries):
            raise DimensionError('Ragged integer matrix')
        if col_labels is not None:
            col_labels = tuple(col_labels)
            if len(col_labels) != ncols:
                raise DimensionError('Got %d labels for %d columns' % (len(col_labels), ncols))
            if len(set(col_labels)) != ncols:
                raise DimensionError('Column labels are not distinct')
        object.__setattr__(self, 'nrows', len(entries))
        object.__setattr__(self, 'ncols', ncols)
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'col_labels', col_labels)

    def __setattr__(self, name, value):
        raise AttributeError('IntMatrix is immutable')

    @classmethod
    def identity(cls, k):
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    def rows(self):
        return [list(row) for row in self.entries]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def to_sympy(self):
        return sympy.Matrix(self.nrows, self.ncols, [v for row in self.entries for v in row])

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.entries == other.entries
                and self.ncols == other.ncols and self.col_labels == other.col_labels)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.entries, self.ncols, self.col_labels))

    def __reduce__(self):
        return (IntMatrix, (self.entries, self.col_labels, self.ncols))

    def __repr__(self):
        return 'IntMatrix(%r)' % (self.rows(),)


def det(m):
    """Exact determinant by fraction-free (Bareiss) elimination

    :param m: Square matrix (SymMatrix, IntMatrix or nested sequence of rationals)
    :returns: Fraction
    :raises: DimensionError: m is not square
    """
    rows = _as_rows(m)
    if any(len(row) != len(rows) for row in rows):
        raise DimensionError('det needs a square matrix')
    if not rows:
        return Fraction(1)
    return to_rational(_to_sympy(rows).det(method='bareiss'))


def rank(m):
    """Exact rank

    :param m: Matrix (SymMatrix, IntMatrix or nested sequence of rationals)
    :returns: int
    """
    rows = _as_rows(m)
    if not rows or not rows[0]:
        return 0
    return int(_to_sympy(rows).rank())


def _check_index_sets(n, *sets):
    seen = set()
    for s in sets:
        for i in s:
            if not 1 <= i <= n:
                raise BoundsError('Index [%d] outside 1..%d' % (i, n))
            if i in seen:
                raise DimensionError('Index sets are not pairwise disjoint (repeated [%d])' % i)
            seen.add(i)


def schur_complement(sigma, a, b, c):
    """Sigma_{A,B} - Sigma_{A,C} Sigma_{C,C}^-1 Sigma_{C,B}, exactly

    :param sigma: SymMatrix
    :param a: Index set (1-based)
    :param b: Index set
    :param c: Index set, may be empty
    :returns: List of rows (Fractions), |A| x |B|
    :raises: SingularConditioningError: Sigma_{C,C} is singular
    """
    a, b, c = sorted(a), sorted(b), sorted(c)
    _check_index_sets(sigma.n, a, b, c)
    s_ab = _to_sympy(sigma.submatrix(a, b))
    if not c:
        return _from_sympy(s_ab)
    s_cc = _to_sympy(sigma.submatrix(c, c))
    if s_cc.det(method='bareiss') == 0:
        raise SingularConditioningError('Sigma_{C,C} is singular for C=%s' % (c,))
    out = s_ab - _to_sympy(sigma.submatrix(a, c)) * s_cc.inv() * _to_sympy(sigma.submatrix(c, b))
    return _from_sympy(out)


def leading_minors(sigma):
    """The n leading principal minors of sigma"""
    m = sigma.to_sympy()
    return [to_rational(m[:k, :k].det(method='bareiss')) for k in range(1, sigma.n + 1)]


def is_positive_definite(sigma):
    """Sylvester's criterion: every leading principal minor is strictly positive"""
    return all(x > 0 for x in leading_minors(sigma))


def is_diagonally_dominant(sigma):
    """Strict row diagonal dominance, sigma_ii > sum_{j != i} |sigma_ij| for every i"""
    for i in range(1, sigma.n + 1):
        off = sum((abs(sigma[i, j]) for j in range(1, sigma.n + 1) if j != i), Fraction(0))
        if not sigma[i, i] > off:
            return False
    return True


def smith_normal_form(m):
    """Smith normal form over the integers

    :param m: IntMatrix
    :returns: (diagonal IntMatrix, tuple of invariant factors d1 | d2 | ...)
    """
    if m.nrows == 0 or m.ncols == 0:
        return IntMatrix(m.rows(), ncols=m.ncols), ()
    snf = _sympy_snf(m.to_sympy(), domain=ZZ)
    k = min(m.nrows, m.ncols)
    factors = tuple(abs(int(snf[i, i])) for i in range(k))
    diag = [[factors[i] if i == j else 0 for j in range(m.ncols)] for i in range(m.nrows)]
    return IntMatrix(diag), factors


def _echelon_transform(rows, ncols):
    """Integer row echelon form H = U * M with U unimodular

    Pairs of rows are combined with the extended gcd so that every step is
    invertible over Z.

    :returns: (H rows, U rows, pivot columns)
    """
    h = [list(row) for row in rows]
    k = len(h)
    u = [[int(i == j) for j in range(k)] for i in range(k)]
    pivots = []
    r = 0
    for col in range(ncols):
        if r >= k:
            break
        for i in range(r + 1, k):
            b = h[i][col]
            if b == 0:
                continue
            a = h[r][col]
            s, t, g = (int(x) for x in igcdex(a, b))
            p, q = -b // g, a // g
            for mat in (h, u):
                row_r, row_i = mat[r], mat[i]
                mat[r] = [s * x + t * y for x, y in zip(row_r, row_i)]
                mat[i] = [p * x + q * y for x, y in zip(row_r, row_i)]
        if h[r][col] != 0:
            pivots.append(col)
            r += 1
    return h, u, pivots


def in_integer_row_span(v, m):
    """Integer coefficients c with c . M = v, if any exist

    :param v: Integer vector of length m.ncols
    :param m: IntMatrix
    :returns: Tuple of ints (one per row of m) or None
    :raises: DimensionError: len(v) != m.ncols
    """
    v = [int(x) for x in v]
    if len(v) != m.ncols:
        raise DimensionError('Vector length [%d] != columns [%d]' % (len(v), m.ncols))
    h, u, pivots = _echelon_transform(m.rows(), m.ncols)
    residual = list(v)
    y = [0] * m.nrows
    for idx, col in enumerate(pivots):
        q, rem = divmod(residual[col], h[idx][col])
        if rem:
            return None
        y[idx] = q
        if q:
            residual = [x - q * hv for x, hv in zip(residual, h[idx])]
    if any(residual):
        return None
    return tuple(sum(y[r] * u[r][j] for r in range(m.nrows)) for j in range(m.nrows))
