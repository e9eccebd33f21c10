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

"""Gaussian conditional independence statements and models

A statement A _||_ B | C holds for a positive definite Sigma iff the
submatrix Sigma_{A u C, B u C} has rank <= #C.
"""

__license__ = 'GPL V3'

import itertools
import re
from dataclasses import dataclass

import sympy

from gaussci._errors import (BoundsError, DisjointnessError, SingularConditioningError,
                             StatementParseError, UnsupportedSizeError)
from gaussci._linalg import det, rank

MIN_CYCLE = 4


@dataclass(frozen=True, order=True)
class CovVariable(object):
    """The covariance indeterminate sigma_ij; (i, j) and (j, i) are the same variable"""
    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, 'i', i)
            object.__setattr__(self, 'j', j)
        if self.i < 1:
            raise BoundsError('Variable index [%d] must be positive' % self.i)

    @property
    def name(self):
        return 's_%d_%d' % (self.i, self.j)

    def is_diagonal(self):
        return self.i == self.j

    def __str__(self):
        return self.name


def _index_tuple(x):
    if isinstance(x, int):
        x = (x,)
    out = tuple(sorted(int(v) for v in x))
    if len(set(out)) != len(out):
        raise DisjointnessError('Repeated index in %s' % (out,))
    if any(v < 1 for v in out):
        raise BoundsError('Indices must be positive integers, got %s' % (out,))
    return out


@dataclass(frozen=True, order=True)
class CIStatement(object):
    """A _||_ B | C with A, B nonempty and A, B, C pairwise disjoint

    Stored in normal form: sorted tuples with min(A) < min(B).
    """
    a: tuple
    b: tuple
    c: tuple = ()

    def __post_init__(self):
        a, b, c = _index_tuple(self.a), _index_tuple(self.b), _index_tuple(self.c)
        if not a or not b:
            raise DisjointnessError('A and B must be nonempty')
        if set(a) & set(b) or set(a) & set(c) or set(b) & set(c):
            raise DisjointnessError('A=%s, B=%s, C=%s are not pairwise disjoint' % (a, b, c))
        if b[0] < a[0]:
            a, b = b, a
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'c', c)

    @property
    def indices(self):
        return self.a + self.b + self.c

    def is_marginal(self):
        return not self.c

    def is_singleton(self):
        """True for a single binomial generator a _||_ b | c"""
        return len(self.a) == len(self.b) == len(self.c) == 1

    @classmethod
    def parse(cls, text):
        return parse_statement(text)

    def __str__(self):
        out = '%s _||_ %s' % (','.join(map(str, self.a)), ','.join(map(str, self.b)))
        if self.c:
            out += ' | %s' % ','.join(map(str, self.c))
        return out


@dataclass(frozen=True)
class CIModel(object):
    """Ordered list of statements over the ground set 1..n"""
    n: int
    statements: tuple

    def __post_init__(self):
        statements = tuple(self.statements)
        for stmt in statements:
            bad = [i for i in stmt.indices if i > self.n]
            if bad:
                raise BoundsError('Statement [%s] uses index %d outside 1..%d' % (stmt, bad[0], self.n))
        object.__setattr__(self, 'statements', statements)

    def __len__(self):
        return len(self.statements)

    def __iter__(self):
        return iter(self.statements)

    def without(self, stmt):
        return CIModel(self.n, [s for s in self.statements if s != stmt])

    def is_cyclic(self):
        """True iff this is M_n up to statement order"""
        return self.n >= MIN_CYCLE and set(self.statements) == set(cyclic_model(self.n).statements)

    def __str__(self):
        return '{%s}' % ', '.join(map(str, self.statements))


def _check_bounds(n, stmt):
    for i in stmt.indices:
        if i > n:
            raise BoundsError('Statement [%s] uses index %d but Sigma is %dx%d' % (stmt, i, n, n))


def ci_holds(sigma, stmt):
    """Exact test of stmt on the covariance matrix sigma

    Uses the rank criterion directly: rank(Sigma_{A u C, B u C}) <= #C.

    :param sigma: SymMatrix
    :param stmt: CIStatement
    :returns: True if stmt holds
    :raises: BoundsError: An index of stmt exceeds sigma.n
    :raises: SingularConditioningError: Sigma_{C,C} is singular
    """
    _check_bounds(sigma.n, stmt)
    if stmt.c and det(sigma.submatrix(stmt.c, stmt.c)) == 0:
        raise SingularConditioningError('Sigma_{C,C} is singular for [%s]' % stmt)
    return rank(sigma.submatrix(stmt.a + stmt.c, stmt.b + stmt.c)) <= len(stmt.c)


def holding_statements(sigma, model):
    return [stmt for stmt in model if ci_holds(sigma, stmt)]


@dataclass(frozen=True)
class MinorGenerator(object):
    """One (#C+1)-minor of Sigma_{A u C, B u C}

    terms is a tuple of (coefficient, monomial) with the monomial a sorted
    tuple of CovVariables (repeated for powers).
    """
    statement: CIStatement
    rows: tuple
    cols: tuple
    terms: tuple

    def variables(self):
        return frozenset(v for _, mono in self.terms for v in mono)

    def is_binomial(self):
        return len(self.terms) == 2

    def as_expr(self):
        return sum((coeff * sympy.Mul(*[sympy.Symbol(v.name) for v in mono])
                    for coeff, mono in self.terms), sympy.Integer(0))

    def __str__(self):
        out = []
        for num, (coeff, mono) in enumerate(self.terms):
            body = '*'.join(v.name for v in mono)
            if abs(coeff) != 1:
                body = '%d*%s' % (abs(coeff), body)
            if num == 0:
                out.append(('-' if coeff < 0 else '') + body)
            else:
                out.append(('- ' if coeff < 0 else '+ ') + body)
        return ' '.join(out)


def _statement_minors(stmt):
    rows = stmt.a + stmt.c
    cols = stmt.b + stmt.c
    variables = dict(((i, j), CovVariable(i, j)) for i in rows for j in cols)
    symbols = dict((v, sympy.Symbol(v.name)) for v in set(variables.values()))
    by_symbol = dict((s, v) for v, s in symbols.items())
    gens = sorted(symbols.values(), key=lambda s: by_symbol[s])
    k = len(stmt.c) + 1
    for sub_rows in itertools.combinations(rows, k):
        for sub_cols in itertools.combinations(cols, k):
            m = sympy.Matrix([[symbols[variables[i, j]] for j in sub_cols] for i in sub_rows])
            expr = sympy.expand(m.det(method='berkowitz'))
            if expr == 0:
                continue
            terms = []
            for exps, coeff in sympy.Poly(expr, *gens).terms():
                mono = tuple(v for g, e in zip(gens, exps) for v in [by_symbol[g]] * e)
                terms.append((int(coeff), mono))
            terms.sort(key=lambda t: (t[0] < 0, t[1]))
            yield MinorGenerator(stmt, sub_rows, sub_cols, tuple(terms))


def minor_generators(model):
    """Generators of the conditional independence ideal of model

    :param model: CIModel
    :returns: List of MinorGenerator, statement by statement
    """
    return [gen for stmt in model for gen in _statement_minors(stmt)]


def _check_cycle(n):
    if n < MIN_CYCLE:
        raise UnsupportedSizeError('Cyclic models need n >= %d, got [%d]' % (MIN_CYCLE, n))


def _cyc(i, n):
    return (i - 1) % n + 1


def cyclic_model(n):
    """M_n = {i _||_ i+1 | i+2 : i = 1..n}, indices mod n"""
    _check_cycle(n)
    return CIModel(n, [CIStatement(i, _cyc(i + 1, n), _cyc(i + 2, n)) for i in range(1, n + 1)])


def marginal_conclusions(n):
    """{i _||_ i+1 : i = 1..n}, indices mod n"""
    _check_cycle(n)
    return [CIStatement(i, _cyc(i + 1, n)) for i in range(1, n + 1)]


def rotate_statement(stmt, n, k):
    """Relabel every index i as pi^k(i) for the cycle pi = (1 2 ... n)"""
    move = lambda xs: [_cyc(x + k, n) for x in xs]
    return CIStatement(move(stmt.a), move(stmt.b), move(stmt.c))


def rotate_model(model, k):
    return CIModel(model.n, [rotate_statement(s, model.n, k) for s in model])


_INDEX_LIST = re.compile(r'\s*(\d+(?:\s*,\s*\d+)*)\s*')
_INDEP = '_||_'


def _parse_index_list(text, pos):
    m = _INDEX_LIST.match(text, pos)
    if not m:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        raise StatementParseError('Expected comma-separated indices', text, pos)
    out = []
    for part in re.finditer(r'\d+', m.group(1)):
        if int(part.group()) == 0:
            raise StatementParseError('Indices start at 1', text, m.start(1) + part.start())
        if int(part.group()) in out:
            raise StatementParseError('Repeated index [%s]' % part.group(), text, m.start(1) + part.start())
        out.append(int(part.group()))
    return tuple(out), m.end()


def parse_statement(text):
    """Parse 'A _||_ B | C' (or 'A _||_ B') with comma-separated indices

    :param text: Statement text, e.g., '1 _||_ 2 | 3' or '1,2 _||_ 4'
    :returns: CIStatement in normal form
    :raises: StatementParseError: text does not match the grammar
    :raises: DisjointnessError: A, B, C overlap
    """
    a, pos = _parse_index_list(text, 0)
    if not text.startswith(_INDEP, pos):
        raise StatementParseError('Expected [%s]' % _INDEP, text, pos)
    b, pos = _parse_index_list(text, pos + len(_INDEP))
    c = ()
    if pos < len(text) and text[pos] == '|':
        c, pos = _parse_index_list(text, pos + 1)
    if pos != len(text):
        raise StatementParseError('Unexpected [%s]' % text[pos], text, pos)
    return CIStatement(a, b, c)
