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


"""Exact matrix documents: {"n": N, "entries": [[...], ...], "metadata": {...}}

Entries are rational strings ("p/q" or "p"); floats never appear.
"""

__license__ = 'GPL V3'

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from gaussci._errors import DimensionError, DocumentError
from gaussci._linalg import SymMatrix, format_rational

_RATIONAL = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def parse_rational(text):
    """'p/q' or 'p' to Fraction

    :raises: DocumentError: Not a rational string or zero denominator
    """
    if not isinstance(text, str):
        raise DocumentError('Entries must be rational strings, got [%r]' % (text,))
    m = _RATIONAL.match(text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise DocumentError('Bad rational [%s]' % text)
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


@dataclass(frozen=True)
class MatrixDocument(object):
    n: int
    entries: tuple
    metadata: dict = field(default=None, compare=False)

    @classmethod
    def parse(cls, text):
        """Parse and validate a JSON document

        :param text: Document text
        :returns: MatrixDocument with Fraction entries
        :raises: DocumentError: Malformed JSON, wrong shape, bad entries or asymmetric grid
        """
        try:
            doc = json.loads(text)
        except ValueError as e:
            raise DocumentError('Invalid JSON: %s' % e)
        if not isinstance(doc, dict):
            raise DocumentError('Top level must be an object')
        try:
            n, grid = doc['n'], doc['entries']
        except KeyError as e:
            raise DocumentError('Missing key %s' % e)
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise DocumentError('"n" must be a positive integer, got [%r]' % (n,))
        if not isinstance(grid, list) or len(grid) != n or any(not isinstance(row, list) or len(row) != n
                                                                for row in grid):
            raise DocumentError('"entries" must be %d arrays of %d rational strings' % (n, n))
        metadata = doc.get('metadata')
        if metadata is not None and not isinstance(metadata, dict):
            raise DocumentError('"metadata" must be an object')
        entries = tuple(tuple(parse_rational(x) for x in row) for row in grid)
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise DocumentError('Asymmetric entries at [%d,%d]: %s != %s'
                                        % (i + 1, j + 1, grid[i][j], grid[j][i]))
        return cls(n, entries, metadata)

    def serialize(self):
        """Canonical JSON text (sorted keys, reduced rationals)"""
        doc = {'n': self.n, 'entries': [[format_rational(x) for x in row] for row in self.entries]}
        if self.metadata is not None:
            doc['metadata'] = self.metadata
        return json.dumps(doc, sort_keys=True)

    @classmethod
    def from_sigma(cls, sigma, metadata=None):
        return cls(sigma.n, tuple(tuple(row) for row in sigma.rows()), metadata)

    def to_sigma(self):
        try:
            return SymMatrix.from_rows(self.entries)
        except DimensionError as e:
            raise DocumentError(str(e))


def load_matrix(path):
    """Read a MatrixDocument file into a SymMatrix

    :raises: IOError: path is unreadable
    :raises: DocumentError: Invalid document
    """
    with open(path, encoding='utf-8') as fp:
        try:
            text = fp.read()
        except UnicodeDecodeError as e:
            raise DocumentError('%s is not UTF-8: %s' % (path, e.reason))
    return MatrixDocument.parse(text).to_sigma()


def dump_matrix(sigma, path, metadata=None):
    with open(path, 'w', encoding='utf-8') as fp:
        fp.write(MatrixDocument.from_sigma(sigma, metadata).serialize() + '\n')
