import csv
import json
import logging
import sys
from contextlib import ExitStack

from django.core.management.base import BaseCommand, CommandError

from waves.basis import MAX_BASIS_ORDER, orthogonal_basis, orthonormal_basis
from waves.conf import Tolerance, use_precision, use_tolerance
from waves.equations import check_stated_two_term, factored_conditions, mobius_fixed_points, residual, solve_two_term
from waves.exceptions import WaveNumberError
from waves.expression import collect_terms, evaluate
from waves.integral import integral, iterate_ngon, particulate_one_sided, particulate_scale
from waves.periodic import as_seq
from waves.polar import polar_decompose_sum
from waves.rational import format_rational, parse_rational
from waves.serializers import (
    BasisSetSerializer, FactoredConditionsSerializer, FrontierSerializer, NGonTraceSerializer, PeriodicSeqSerializer,
    PolarFormSerializer, QuadraticRootsSerializer, SieveResultSerializer, TwoTermSolutionSerializer, ValueSerializer,
    WindowedSeqSerializer, clean_float, format_complex, format_seq, two_term_report,
)
from waves.sieve import SieveTraceRow, frontier_sequence, sieve_trace

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Evaluate and solve rational wave-number expressions, build bases and run the prime-phase sieve'

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Write one JSON document to stdout')
        parser.add_argument('--precision', choices=['double', 'high'], help='Numeric precision for this run')
        parser.add_argument('--tol', type=float, help='Absolute and relative tolerance (default from settings)')

        sub = parser.add_subparsers(dest='subcommand', required=True)

        p = sub.add_parser('eval', help='Evaluate an expression')
        p.add_argument('expr')

        p = sub.add_parser('polar', help='Polar form A * w(f, g) of a sum expression')
        p.add_argument('expr')
        p.add_argument('--cross-check', action='store_true', help='Verify against the subset recursion')

        p = sub.add_parser('basis', help='Orthogonal (or orthonormal) phase basis of order n')
        p.add_argument('n', type=int)
        p.add_argument('--orthonormal', action='store_true')
        p.add_argument('--validate', action='store_true', help='Check the constructive path first')

        p = sub.add_parser('integral', help='Cumulative phase sums of an expression')
        p.add_argument('expr')

        p = sub.add_parser('ngon', help='Iterated integral n-gons')
        p.add_argument('n', type=int)
        p.add_argument('t', type=int)

        p = sub.add_parser('particulate', help='Particulate wave number over [-W, W]')
        p.add_argument('n', type=int)
        p.add_argument('W', type=int)
        p.add_argument('--m', type=int, default=1, help='Value at the support (default 1)')
        p.add_argument('--one-sided', choices=['+', '-'], help='Keep only +n or -n')

        p = sub.add_parser('sieve', help='Prime phases up to limit by cumulative co-number masks')
        p.add_argument('limit', type=int)
        p.add_argument('--trace-csv', metavar='PATH', help='Write one CSV row per sieve step')
        p.add_argument('--validate', action='store_true', help='Compare each step with a classical sieve')

        p = sub.add_parser('frontier', help='Largest provably identified prime per iteration')
        p.add_argument('k', type=int)

        p = sub.add_parser('factored', help='Leave-one-out factors of a 3..8 term sum equation')
        p.add_argument('expr')

        p = sub.add_parser('solve-mobius', help='Fixed points of (A w + B) / (C w + D)')
        for name in ('A', 'B', 'C', 'D'):
            p.add_argument(name)

        p = sub.add_parser('solve-two', help='Solutions of w(f1, g1) + w(f2, g2) = 0')
        p.add_argument('f2')
        p.add_argument('g2')

    def handle(self, *args, **options):
        self.as_json = options['json']
        subcommand = options['subcommand']
        logger.info(f'waves {subcommand}')
        handler = getattr(self, 'do_' + subcommand.replace('-', '_'))
        try:
            with ExitStack() as stack:
                if options['precision']:
                    stack.enter_context(use_precision(options['precision']))
                if options['tol'] is not None:
                    stack.enter_context(use_tolerance(Tolerance(abs_eps=options['tol'], rel_eps=options['tol'])))
                handler(options)
        except WaveNumberError as e:
            self.fail(e)
        except ValueError as e:
            # pydantic validation of --tol and bad literals on the command line
            raise CommandError(str(e), returncode=2)

    def fail(self, error: WaveNumberError):
        if self.as_json:
            self.stderr.write(json.dumps(error.as_dict()))
            sys.exit(1)
        raise CommandError(str(error), returncode=1)

    def emit(self, data, text):
        if self.as_json:
            self.stdout.write(json.dumps(data))
        else:
            self.stdout.write(text)

    def emit_seq(self, value):
        if isinstance(value, float):
            self.emit(ValueSerializer({'value': value}).data, str(clean_float(value)))
        else:
            self.emit(PeriodicSeqSerializer(value).data, format_seq(value))

    def do_eval(self, options):
        self.emit_seq(evaluate(options['expr']))

    def do_polar(self, options):
        form = polar_decompose_sum(collect_terms(options['expr']), cross_check=options['cross_check'])
        self.emit(
            PolarFormSerializer(form).data,
            f'amplitude: {format_seq(form.amplitude)}\ncarrier: {form.carrier}',
        )

    def do_basis(self, options):
        n = options['n']
        if n > MAX_BASIS_ORDER:
            raise CommandError(f'basis order must be <= {MAX_BASIS_ORDER}, got {n}', returncode=2)
        basis = orthonormal_basis(n) if options['orthonormal'] else orthogonal_basis(n, validate=options['validate'])
        self.emit(BasisSetSerializer(basis).data, '\n'.join(format_seq(e) for e in basis))

    def do_integral(self, options):
        self.emit_seq(integral(as_seq(evaluate(options['expr']))))

    def do_ngon(self, options):
        traces = iterate_ngon(options['n'], options['t'])
        lines = ['t edge_norm vertex_norm'] + [
            f'{tr.t} {clean_float(tr.edge_norm)} {clean_float(tr.vertex_norm)}' for tr in traces
        ]
        self.emit(NGonTraceSerializer(traces, many=True).data, '\n'.join(lines))

    def do_particulate(self, options):
        n, window, m = options['n'], options['W'], options['m']
        if options['one_sided']:
            result = particulate_one_sided(n, m, window, options['one_sided'])
        else:
            result = particulate_scale(n, m, window)
        lines = [f'window [{result.lo}, {result.hi}]'] + [
            f'{xi} {format_complex(result.at(xi))}' for xi in result.support()
        ]
        self.emit(WindowedSeqSerializer(result).data, '\n'.join(lines))

    def do_sieve(self, options):
        limit = options['limit']
        state, rows = sieve_trace(limit, validate=options['validate'])
        primes = [p for p in state.known_primes if p <= limit]
        if options['trace_csv']:
            with open(options['trace_csv'], 'w', newline='') as handle:
                writer = csv.writer(handle)
                writer.writerow(SieveTraceRow.HEADER)
                writer.writerows(row.as_row() for row in rows)
        self.emit(
            SieveResultSerializer({'limit': limit, 'count': len(primes), 'primes': primes, 'trace': rows}).data,
            ', '.join(str(p) for p in primes),
        )

    def do_frontier(self, options):
        sequence = frontier_sequence(options['k'])
        self.emit(FrontierSerializer({'frontier': sequence}).data, ', '.join(str(p) for p in sequence))

    def do_factored(self, options):
        conditions = factored_conditions(collect_terms(options['expr']))
        lines = [f'factor {m}: {format_seq(f)}' for m, f in enumerate(conditions.factors, start=1)]
        lines.append(f'vanishing: {", ".join(map(str, conditions.vanishing)) or "none"}')
        lines.append(f'residual: {clean_float(conditions.residual)}')
        self.emit(FactoredConditionsSerializer(conditions).data, '\n'.join(lines))

    def do_solve_mobius(self, options):
        a, b, c, d = (as_seq(evaluate(options[name])) for name in ('A', 'B', 'C', 'D'))
        roots = mobius_fixed_points(a, b, c, d)
        lines = [
            f'plus: {format_seq(roots.plus)}',
            f'minus: {format_seq(roots.minus)}',
            f'residuals: {clean_float(roots.residual_plus)} {clean_float(roots.residual_minus)}',
        ]
        if roots.double_root:
            lines.append('double root')
        if roots.poles:
            lines.append(f'poles at: {", ".join(map(str, roots.poles))}')
        self.emit(QuadraticRootsSerializer(roots).data, '\n'.join(lines))

    def do_solve_two(self, options):
        f2, g2 = parse_rational(options['f2']), parse_rational(options['g2'])
        solution = solve_two_term(f2, g2)
        report = two_term_report(solution, residual(solution.terms()), check_stated_two_term(f2, g2))
        data = TwoTermSolutionSerializer(report).data
        text = '\n'.join([
            f'f1 = {format_rational(f2)} + k, g1 = {format_rational(g2)} + 1/2 + l (k, l integers)',
            f'representative: {solution.member()} residual {clean_float(report["residuals"][0])}',
            f'stated f1 = f2 + 2, g1 = g2 - 1: residual {clean_float(report["stated_residual"])}',
        ])
        self.emit(data, text)
