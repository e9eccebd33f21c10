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

import os
import unittest
from fractions import Fraction
from unittest import mock

import numpy as np

import gaussci
from gaussci import CIModel, CIStatement, SymMatrix, NotPositiveDefiniteError, BinomialScopeError


class Test(gaussci.Test):

    def test_implied_marginals_cyclic(self):
        for n in range(4, 9):
            report = gaussci.implied_marginals(gaussci.cyclic_model(n), samples=10 if n > 5 else 50)
            self.assertStatementsEqual(report.implied, gaussci.marginal_conclusions(n))
            self.assertTrue(report.toric_excluded)
            self.assertEqual(len(report.primes), 2)
            self.assertEqual(len(report.excluded), 1)
            prime, cert = report.excluded[0]
            self.assertTrue(prime.is_toric())
            self.assertEqual(cert.lattice_coeffs, (1,) * n)
            self.assertEqual(report.caveats, ())
            self.assertEqual(report.surviving_vars, report.primes[1].vanishing_vars)

    def test_implied_marginals_m4(self):
        report = gaussci.implied_marginals(gaussci.cyclic_model(4))
        self.assertStatementsEqual(report.implied, ['1 _||_ 2', '2 _||_ 3', '3 _||_ 4', '1 _||_ 4'])
        self.assertEqual(report.evidence_samples, 50)
        self.assertEqual(report.seed, 0)

    def test_implied_marginals_single_statement(self):
        report = gaussci.implied_marginals(CIModel(4, [CIStatement(1, 2, 3)]))
        self.assertEqual(report.implied, ())
        self.assertEqual(report.excluded, ())
        self.assertFalse(report.toric_excluded)
        self.assertIn(gaussci._engine.TORIC_CAVEAT, report.caveats)
        # A full support PD point on the toric component
        sigma = SymMatrix.from_rows([[2, 1, 1, 1], [1, 2, 1, 1], [1, 1, 1, 1], [1, 1, 1, 3]])
        self.assertTrue(gaussci.is_positive_definite(sigma))
        self.assertTrue(gaussci.ci_holds(sigma, CIStatement(1, 2, 3)))
        self.assertTrue(all(value != 0 for _, value in sigma.items()))

    def test_implied_marginals_scope(self):
        self.assertRaises(BinomialScopeError, gaussci.implied_marginals, CIModel(4, [CIStatement(1, 2)]))

    def test_implied_marginals_deterministic(self):
        model = gaussci.cyclic_model(5)
        self.assertEqual(gaussci.implied_marginals(model, samples=5, seed=3),
                         gaussci.implied_marginals(model, samples=5, seed=3))
        with mock.patch.dict(os.environ, {'GCI_SEED': '17'}):
            self.assertEqual(gaussci.implied_marginals(model, samples=5).seed, 17)
        with mock.patch.dict(os.environ, {'GCI_SEED': 'x'}):
            self.assertRaises(ValueError, gaussci._engine.default_seed)

    def test_check_witness_sharpness(self):
        sigma = gaussci.counterexample_sigma(5, Fraction(1, 10), Fraction(1, 20))
        model = gaussci.cyclic_model(5)
        reduced = model.without(CIStatement(4, 5, 1))
        report = gaussci.check_witness(sigma, reduced, gaussci.marginal_conclusions(5))
        self.assertEqual(len(report.holding), 4)
        self.assertEqual(report.failing, ())
        self.assertEqual(report.holding_conclusions, ())
        self.assertTrue(report.sharpness)
        self.assertTrue(report.non_implication)
        report = gaussci.check_witness(sigma, model, gaussci.marginal_conclusions(5))
        self.assertEqual(report.failing, (CIStatement(4, 5, 1),))
        self.assertTrue(report.sharpness)
        self.assertFalse(report.non_implication)

    def test_sharpness_with_two_failing(self):
        entries = dict(gaussci.counterexample_sigma(5, Fraction(1, 10), Fraction(1, 20)).items())
        entries[(4, 5)] /= 2
        sigma = SymMatrix(5, entries)
        report = gaussci.check_witness(sigma, gaussci.cyclic_model(5), gaussci.marginal_conclusions(5))
        self.assertEqual(set(report.failing), set([CIStatement(3, 4, 5), CIStatement(4, 5, 1)]))
        self.assertEqual(len(report.holding), 3)
        self.assertEqual(report.holding_conclusions, ())
        self.assertTrue(report.sharpness)
        self.assertFalse(report.non_implication)

    def test_check_witness_identity(self):
        report = gaussci.check_witness(SymMatrix.identity(5), gaussci.cyclic_model(5), gaussci.marginal_conclusions(5))
        self.assertEqual(len(report.holding), 5)
        self.assertEqual(len(report.holding_conclusions), 5)
        self.assertFalse(report.non_implication)
        self.assertFalse(report.sharpness)
        self.assertRaises(NotPositiveDefiniteError, gaussci.check_witness, SymMatrix.ones(5),
                          gaussci.cyclic_model(5), gaussci.marginal_conclusions(5))

    def test_monomial_component_soundness(self):
        rng = np.random.default_rng(11)
        for n in range(4, 7):
            model = gaussci.cyclic_model(n)
            implied = gaussci.marginal_conclusions(n)
            for _ in range(100):
                sigma = self.monomial_component_matrix(n, rng)
                self.assertTrue(gaussci.is_diagonally_dominant(sigma))
                self.assertTrue(all(gaussci.ci_holds(sigma, s) for s in model))
                self.assertTrue(all(gaussci.ci_holds(sigma, s) for s in implied))

    def test_drop_one_suite(self):
        for n in range(4, 9):
            suite = gaussci.drop_one_suite(n)
            model = gaussci.cyclic_model(n)
            self.assertEqual([w.dropped for w in suite], list(model))
            for witness in suite:
                report = witness.report
                self.assertEqual(len(report.holding), n - 1)
                self.assertEqual(report.failing, (witness.dropped,))
                self.assertEqual(report.holding_conclusions, ())
                self.assertTrue(report.sharpness)
                self.assertTrue(all(value != 0 for _, value in report.sigma.items()))


if __name__ == '__main__':
    unittest.main()
