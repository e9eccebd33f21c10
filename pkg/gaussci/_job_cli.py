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

import argparse
import json
import logging
import sys

from gaussci._certificates import default_parameters, rotated_counterexample
from gaussci._ci import ci_holds, cyclic_model, marginal_conclusions, minor_generators, parse_statement
from gaussci._document import MatrixDocument, load_matrix, parse_rational
from gaussci._engine import DEFAULT_SAMPLES, check_witness, default_seed, implied_marginals
from gaussci._errors import CIError, NotPositiveDefiniteError
from gaussci._lattice import basis_matrix
from gaussci._linalg import format_rational, is_positive_definite
from gaussci._primes import minimal_primes

PROG = 'gaussci'


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _prime_json(prime):
    return {'toric': prime.is_toric(),
            'vanishing_vars': prime.names(),
            'residual_rows': list(prime.residual_rows)}


def _grid_text(rows, col_labels=None, row_labels=None):
    cells = [[str(x) for x in row] for row in rows]
    if col_labels is not None:
        cells.insert(0, list(col_labels))
    if row_labels is not None:
        labels = list(map(str, row_labels))
        if col_labels is not None:
            labels.insert(0, '')
        cells = [[label] + row for label, row in zip(labels, cells)]
    if not cells:
        return ''
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    return '\n'.join(' '.join(x.rjust(w) for x, w in zip(row, widths)).rstrip() for row in cells) + '\n'


def run_implication(out, n, samples, seed, max_columns, workers, as_json):
    report = implied_marginals(cyclic_model(n), samples=samples, seed=seed,
                               max_columns=max_columns, workers=workers)
    certs = dict((prime, cert) for prime, cert in report.excluded)
    if as_json:
        out.write(_dumps({'n': n,
                          'model': [str(s) for s in report.model],
                          'primes': [dict(_prime_json(p), excluded=p in certs) for p in report.primes],
                          'excluded': [{'prime': str(p), 'lattice_coeffs': list(c.lattice_coeffs),
                                        'binomial': c.binomial_text()} for p, c in report.excluded],
                          'surviving_vars': [v.name for v in sorted(report.surviving_vars)],
                          'implied': [str(s) for s in report.implied],
                          'evidence_samples': report.evidence_samples,
                          'seed': report.seed,
                          'caveats': list(report.caveats)}) + '\n')
        return
    out.write('Model: %s\n' % report.model)
    out.write('Minimal primes: %d\n' % len(report.primes))
    for prime in report.primes:
        line = '  %s' % prime
        if prime in certs:
            line += '  excluded by %s = 0 (checked on %d PD samples, seed %d)' % (
                certs[prime].binomial_text(), report.evidence_samples, report.seed)
        out.write(line + '\n')
    out.write('Implied:\n')
    for stmt in report.implied:
        out.write('  %s\n' % stmt)
    for caveat in report.caveats:
        out.write('Caveat: %s\n' % caveat)


def run_primes(out, n, exhaustive, max_columns, workers, as_json):
    primes = minimal_primes(basis_matrix(cyclic_model(n)), max_columns=max_columns,
                            exhaustive=exhaustive, workers=workers)
    if as_json:
        out.write(_dumps({'n': n, 'primes': [_prime_json(p) for p in primes]}) + '\n')
        return
    for prime in primes:
        out.write('%s\n' % prime)


def run_counterexample(out, n, a, e, drop, as_json):
    if drop is None:
        drop = n - 1
    elif not 1 <= drop <= n:
        raise UsageError('--drop must be in 1..%d' % n)
    default_a, default_e = default_parameters(n)
    a = default_a if a is None else a
    e = default_e if e is None else e
    sigma = rotated_counterexample(n, drop, a, e)
    failing = cyclic_model(n).statements[drop - 1]
    if as_json:
        metadata = {'a': format_rational(a), 'e': format_rational(e), 'drop': drop, 'fails': str(failing)}
        out.write(MatrixDocument.from_sigma(sigma, metadata).serialize() + '\n')
        return
    out.write('Sigma (n=%d, a=%s, e=%s), fails %s\n' % (n, format_rational(a), format_rational(e), failing))
    out.write(_grid_text([[format_rational(x) for x in row] for row in sigma.rows()]))


def run_check(out, sigma, statement, as_json):
    sigma = load_matrix(sigma)
    if not is_positive_definite(sigma):
        raise NotPositiveDefiniteError('Sigma is not positive definite')
    stmts = [parse_statement(text) for text in statement]
    results = [(stmt, ci_holds(sigma, stmt)) for stmt in stmts]
    if as_json:
        out.write(_dumps({'results': [{'statement': str(s), 'holds': h} for s, h in results]}) + '\n')
        return
    for stmt, holds in results:
        out.write('%s\t%s\n' % ('HOLDS' if holds else 'FAILS', stmt))


def run_witness(out, sigma, model_n, drop, as_json):
    sigma = load_matrix(sigma)
    model = cyclic_model(model_n)
    if drop is not None:
        if not 1 <= drop <= model_n:
            raise UsageError('--drop must be in 1..%d' % model_n)
        model = model.without(model.statements[drop - 1])
    report = check_witness(sigma, model, marginal_conclusions(model_n))
    names = lambda stmts: [str(s) for s in stmts]
    if as_json:
        out.write(_dumps({'holding': names(report.holding),
                          'failing': names(report.failing),
                          'holding_conclusions': names(report.holding_conclusions),
                          'failing_conclusions': names(report.failing_conclusions),
                          'non_implication': report.non_implication,
                          'sharpness': report.sharpness}) + '\n')
        return
    out.write('Statements holding: %d/%d\n' % (len(report.holding), len(model)))
    for stmt in report.failing:
        out.write('  FAILS %s\n' % stmt)
    out.write('Conclusions holding: %d/%d\n' % (len(report.holding_conclusions), model_n))
    out.write('Non-implication witness: %s\n' % ('yes' if report.non_implication else 'no'))
    out.write('Sharpness witness: %s\n' % ('yes' if report.sharpness else 'no'))


def run_basis(out, n, as_json):
    basis = basis_matrix(cyclic_model(n))
    if as_json:
        out.write(_dumps({'n': n,
                          'columns': list(basis.matrix.col_labels),
                          'rows': [str(s) for s in basis.row_labels],
                          'entries': basis.matrix.rows()}) + '\n')
        return
    out.write(_grid_text(basis.matrix.rows(), basis.matrix.col_labels))


def run_minors(out, n, as_json):
    gens = minor_generators(cyclic_model(n))
    if as_json:
        out.write(_dumps({'n': n, 'generators': [{'statement': str(g.statement), 'minor': str(g)}
                                                 for g in gens]}) + '\n')
        return
    for gen in gens:
        out.write('%s\t%s\n' % (gen.statement, gen))


def _build_parser():
    parser = _ArgumentParser(prog=PROG, description='Gaussian CI implication for cyclic binomial models')
    parser.add_argument('--log', help='Default log level to use', choices=('debug', 'info', 'warning', 'error', 'critical'), default='warning')
    subparsers = parser.add_subparsers(dest='command', help='Commands (additional help available inside each)')
    subparsers.required = True

    def add_n(p, name='--n'):
        p.add_argument(name, type=int, required=True, help='Cycle length (>= 4)')

    def add_json(p):
        p.add_argument('--json', action='store_true', dest='as_json', help='Structured output')

    def add_search(p):
        p.add_argument('--max-columns', type=int, default=None, help='Cap on the candidate column pool')
        p.add_argument('--workers', type=int, default=None, help='Evaluate candidates on this many processes')

    parser_implication = subparsers.add_parser('implication', help='Implied marginal independences of M_n')
    add_n(parser_implication)
    parser_implication.add_argument('--samples', type=int, default=DEFAULT_SAMPLES, help='PD samples used to check the exclusion certificate')
    parser_implication.add_argument('--seed', type=int, default=None, help='Sampling seed (default GCI_SEED or 0)')
    add_search(parser_implication)
    add_json(parser_implication)
    parser_implication.set_defaults(func=run_implication)

    parser_primes = subparsers.add_parser('primes', help='Minimal primes of the lattice basis ideal of M_n')
    add_n(parser_primes)
    parser_primes.add_argument('--exhaustive', action='store_true', help='Disable candidate pruning')
    add_search(parser_primes)
    add_json(parser_primes)
    parser_primes.set_defaults(func=run_primes)

    parser_counterexample = subparsers.add_parser('counterexample', help='PD matrix failing exactly one statement of M_n')
    add_n(parser_counterexample)
    parser_counterexample.add_argument('--a', type=parse_rational, default=None, help='Rational a in (0, 1/n) (default 1/(2n))')
    parser_counterexample.add_argument('--e', type=parse_rational, default=None, help='Rational e in (0, 1/n) (default 1/(4n))')
    parser_counterexample.add_argument('--drop', type=int, default=None, help='Position of the failing statement in M_n (default n-1)')
    add_json(parser_counterexample)
    parser_counterexample.set_defaults(func=run_counterexample)

    parser_check = subparsers.add_parser('check', help='Decide CI statements on a covariance matrix')
    parser_check.add_argument('--sigma', required=True, help='MatrixDocument file')
    parser_check.add_argument('--statement', required=True, action='append', help='Statement "A _||_ B | C" (may be repeated)')
    add_json(parser_check)
    parser_check.set_defaults(func=run_check)

    parser_witness = subparsers.add_parser('witness', help='Check a matrix against M_n and its marginal conclusions')
    parser_witness.add_argument('--sigma', required=True, help='MatrixDocument file')
    add_n(parser_witness, '--model-n')
    parser_witness.add_argument('--drop', type=int, default=None, help='Remove this statement position from M_n first')
    add_json(parser_witness)
    parser_witness.set_defaults(func=run_witness)

    parser_basis = subparsers.add_parser('basis', help='Lattice basis matrix M_n')
    add_n(parser_basis)
    add_json(parser_basis)
    parser_basis.set_defaults(func=run_basis)

    parser_minors = subparsers.add_parser('minors', help='Minor generators of the CI ideal of M_n')
    add_n(parser_minors)
    add_json(parser_minors)
    parser_minors.set_defaults(func=run_minors)
    return parser


def _error_line(kind, message):
    return '%s: error[%s]: %s\n' % (PROG, kind, ' '.join(str(message).split()))


def run(argv=None, stdout=None, stderr=None):
    """gaussci entrance function

    | **Command Interface**

    gaussci implication --n N [--samples K] [--seed S] [--json]
        Implied marginal independences of M_N with the exclusion certificate.
    gaussci primes --n N [--exhaustive] [--json]
        Minimal primes of the lattice basis ideal of M_N.
    gaussci counterexample --n N [--a P/Q] [--e P/Q] [--drop K] [--json]
        PD matrix failing only statement K of M_N; --json prints a MatrixDocument.
    gaussci check --sigma FILE --statement "A _||_ B | C" [--json]
        Exact verdict (HOLDS/FAILS) per statement.
    gaussci witness --sigma FILE --model-n N [--drop K] [--json]
        Which statements of M_N (minus statement K) and which marginal conclusions hold.
    gaussci basis --n N [--json]
        The basis matrix M_N with its column labels.
    gaussci minors --n N [--json]
        Minor generators of the CI ideal of M_N.

    The environmental variable GCI_SEED (decimal integer, default 0) seeds
    all sampling.

    :param argv: Arguments without the program name (default sys.argv[1:])
    :param stdout: Output stream (default sys.stdout)
    :param stderr: Error stream (default sys.stderr)
    :returns: Exit code, 0 success, 1 domain error, 2 usage error
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = vars(_build_parser().parse_args(argv))
        # Handle logging arguments
        logging.basicConfig(level=getattr(logging, args.pop('log').upper()), stream=stderr)
        try:
            seed = default_seed()
        except ValueError:
            raise UsageError('GCI_SEED must be a decimal integer')
        if 'seed' in args and args['seed'] is None:
            args['seed'] = seed
        del args['command']
        func = args.pop('func')
        func(stdout, **args)
    except UsageError as e:
        stderr.write(_error_line('usage', e))
        return 2
    except OSError as e:
        stderr.write(_error_line('usage', e))
        return 2
    except CIError as e:
        stderr.write(_error_line(type(e).__name__, e))
        return 1
    except SystemExit as e:
        return e.code or 0
    return 0


def main():
    sys.exit(run())
