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

import io
import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

import gaussci
from gaussci import MatrixDocument, SymMatrix


class Test(gaussci.Test):

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.temp_dir)

    def _run(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        code = gaussci.run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()

    def _write(self, name, sigma):
        path = os.path.join(self.temp_dir, name)
        gaussci.dump_matrix(sigma, path)
        return path

    def _assert_error(self, result, code, kind):
        self.assertEqual(result[0], code)
        lines = result[2].splitlines()
        self.assertEqual(len(lines), 1, result[2])
        self.assertTrue(lines[0].startswith('gaussci: error[%s]: ' % kind), lines[0])

    def test_primes(self):
        code, out, _ = self._run('primes', '--n', '5')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ['TORIC', '{s_1_2, s_1_5, s_2_3, s_3_4, s_4_5}'])
        code, out, _ = self._run('primes', '--n', '4', '--json', '--exhaustive')
        primes = json.loads(out)['primes']
        self.assertEqual([p['toric'] for p in primes], [True, False])
        self.assertEqual(primes[1]['vanishing_vars'], ['s_1_2', 's_1_4', 's_2_3', 's_3_4'])

    def test_basis(self):
        code, out, _ = self._run('basis', '--n', '5', '--json')
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(len(doc['entries']), 5)
        self.assertEqual(doc['entries'][0], [1, 0, 0, 0, 0, 1, -1, 0, 0, 0, -1, 0, 0, 0, 0])
        self.assertEqual(doc['columns'][:5], ['s_3_3', 's_4_4', 's_5_5', 's_1_1', 's_2_2'])
        code, out, _ = self._run('basis', '--n', '5')
        lines = out.splitlines()
        self.assertEqual(len(lines), 6)
        self.assertEqual(lines[1].split(), ['1', '0', '0', '0', '0', '1', '-1', '0', '0', '0', '-1', '0', '0', '0', '0'])

    def test_implication(self):
        code, out, _ = self._run('implication', '--n', '5', '--samples', '5', '--json')
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertStatementsEqual(report['implied'], gaussci.marginal_conclusions(5))
        self.assertEqual(report['evidence_samples'], 5)
        self.assertEqual(report['excluded'][0]['lattice_coeffs'], [1] * 5)
        self.assertEqual(out, self._run('implication', '--n', '5', '--samples', '5', '--json')[1])
        code, out, _ = self._run('implication', '--n', '4', '--samples', '3')
        self.assertEqual(code, 0)
        self.assertIn('Implied:\n  1 _||_ 2\n', out)
        self.assertIn('excluded by', out)

    def test_seed(self):
        with mock.patch.dict(os.environ, {'GCI_SEED': '9'}):
            code, out, _ = self._run('implication', '--n', '4', '--samples', '2', '--json')
            self.assertEqual(json.loads(out)['seed'], 9)
            code, out, _ = self._run('implication', '--n', '4', '--samples', '2', '--seed', '4', '--json')
            self.assertEqual(json.loads(out)['seed'], 4)
        with mock.patch.dict(os.environ, {'GCI_SEED': 'nine'}):
            self._assert_error(self._run('basis', '--n', '4'), 2, 'usage')

    def test_counterexample(self):
        code, out, _ = self._run('counterexample', '--n', '5', '--a', '1/10', '--e', '1/20', '--json')
        self.assertEqual(code, 0)
        doc = MatrixDocument.parse(out)
        self.assertEqual(doc.to_sigma(), gaussci.counterexample_sigma(5, '1/10', '1/20'))
        self.assertEqual(doc.metadata['fails'], '4 _||_ 5 | 1')
        code, out, _ = self._run('counterexample', '--n', '5', '--drop', '2', '--json')
        self.assertEqual(MatrixDocument.parse(out).to_sigma(), gaussci.rotated_counterexample(5, 2))
        code, out, _ = self._run('counterexample', '--n', '4')
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith('Sigma (n=4, a=1/8, e=1/16), fails 3 _||_ 4 | 1\n'))
        self._assert_error(self._run('counterexample', '--n', '5', '--a', '1/2'), 1, 'ParameterError')
        self._assert_error(self._run('counterexample', '--n', '5', '--a', 'half'), 2, 'usage')
        self._assert_error(self._run('counterexample', '--n', '5', '--drop', '7'), 2, 'usage')
        self._assert_error(self._run('counterexample', '--n', '5', '--drop', '0'), 2, 'usage')

    def test_check(self):
        path = self._write('identity.json', SymMatrix.identity(3))
        code, out, _ = self._run('check', '--sigma', path, '--statement', '1 _||_ 2 | 3')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'HOLDS\t1 _||_ 2 | 3\n')
        path = self._write('dense.json', SymMatrix.from_rows([[2, 1, 1], [1, 2, 1], [1, 1, 2]]))
        code, out, _ = self._run('check', '--sigma', path, '--statement', '1 _||_ 2 | 3',
                                 '--statement', '1 _||_ 2', '--json')
        self.assertEqual(json.loads(out)['results'], [{'statement': '1 _||_ 2 | 3', 'holds': False},
                                                      {'statement': '1 _||_ 2', 'holds': False}])
        self._assert_error(self._run('check', '--sigma', path, '--statement', '1 _| 2'), 1, 'StatementParseError')
        self._assert_error(self._run('check', '--sigma', path, '--statement', '1,2 _||_ 2'), 1, 'DisjointnessError')
        self._assert_error(self._run('check', '--sigma', path, '--statement', '1 _||_ 4'), 1, 'BoundsError')
        self._assert_error(self._run('check', '--sigma', os.path.join(self.temp_dir, 'missing.json'),
                                     '--statement', '1 _||_ 2'), 2, 'usage')
        bad = os.path.join(self.temp_dir, 'bad.json')
        with open(bad, 'w') as fp:
            fp.write('{"n":2,"entries":[["1","1/2"],["1/3","1"]]}')
        self._assert_error(self._run('check', '--sigma', bad, '--statement', '1 _||_ 2'), 1, 'DocumentError')
        with open(bad, 'wb') as fp:
            fp.write(b'\xff\xfe{"n":1}')
        self._assert_error(self._run('check', '--sigma', bad, '--statement', '1 _||_ 2'), 1, 'DocumentError')
        path = self._write('ones.json', SymMatrix.ones(3))
        self._assert_error(self._run('check', '--sigma', path, '--statement', '1 _||_ 2 | 3'), 1,
                           'NotPositiveDefiniteError')

    def test_witness(self):
        path = self._write('sigma.json', gaussci.counterexample_sigma(5, '1/10', '1/20'))
        code, out, _ = self._run('witness', '--sigma', path, '--model-n', '5', '--drop', '4', '--json')
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(len(report['holding']), 4)
        self.assertEqual(report['holding_conclusions'], [])
        self.assertTrue(report['sharpness'])
        self.assertTrue(report['non_implication'])
        code, out, _ = self._run('witness', '--sigma', path, '--model-n', '5')
        self.assertIn('FAILS 4 _||_ 5 | 1', out)
        self.assertIn('Sharpness witness: yes', out)
        path = self._write('ones.json', SymMatrix.ones(5))
        self._assert_error(self._run('witness', '--sigma', path, '--model-n', '5'), 1, 'NotPositiveDefiniteError')
        self._assert_error(self._run('witness', '--sigma', path, '--model-n', '5', '--drop', '9'), 2, 'usage')

    def test_minors(self):
        code, out, _ = self._run('minors', '--n', '4')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], '1 _||_ 2 | 3\ts_1_2*s_3_3 - s_1_3*s_2_3')
        self.assertEqual(len(json.loads(self._run('minors', '--n', '6', '--json')[1])['generators']), 6)

    def test_usage_errors(self):
        self._assert_error(self._run(), 2, 'usage')
        self._assert_error(self._run('primes'), 2, 'usage')
        self._assert_error(self._run('primes', '--n', 'five'), 2, 'usage')
        self._assert_error(self._run('frobnicate'), 2, 'usage')
        self._assert_error(self._run('primes', '--n', '3'), 1, 'UnsupportedSizeError')
        self._assert_error(self._run('primes', '--n', '6', '--max-columns', '2'), 1, 'SearchTooLargeError')
        self.assertEqual(self._run('--help')[0], 0)


if __name__ == '__main__':
    unittest.main()
