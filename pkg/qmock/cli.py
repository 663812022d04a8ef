import argparse
from fractions import Fraction
import json
import sys

from qmock.configuration import config
from qmock import export
from qmock import mapping
from qmock.mockforms import hurwitz_ideal_series
from qmock.mockforms import MockFormSpec
from qmock.quadfield import REGION_FAMILIES
from qmock.quadfield import unit_for_family
from qmock.thetaeta import hurwitz_class_number
from qmock.thetaeta import theta
from qmock import verify


EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            'expected an exact rational such as 10 or 7/2, but got '
            '{!r}'.format(text))


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(
            'expected a positive integer, but got {!r}'.format(text))
    return value


def _add_output_flags(parser, formats=export.FORMATS):
    parser.add_argument('--cutoff', type=_rational, default=None,
                        help='largest exponent computed (default: {})'.format(
                            config.default_cutoff))
    parser.add_argument('--format', dest='fmt', choices=formats,
                        default=formats[0])
    parser.add_argument('--out', default=None,
                        help='write the result to this file instead of '
                        'stdout')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='qmock',
        description='Exact coefficients of unary theta functions and mock '
        'modular forms of weight 1/2 and 3/2.')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('theta', help='unary theta function theta_N(tau; nu)')
    p.add_argument('--N', type=_positive_int, required=True)
    p.add_argument('--nu', type=int, choices=(0, 1), required=True)
    p.add_argument('--component', type=int, default=None,
                   help='emit only this component (mod 2N)')
    _add_output_flags(p)

    p = sub.add_parser('mock', help='explicit mock modular form')
    p.add_argument('--weight', choices=('1/2', '3/2'), required=True)
    p.add_argument('--N', type=_positive_int, required=True)
    p.add_argument('--variant', choices=('auto', 'alt'), default='auto')
    _add_output_flags(p)

    p = sub.add_parser('verify', help='run verification suites')
    p.add_argument('--suite', action='append',
                   choices=sorted(verify.SUITES) + ['all'],
                   help='suite to run; may be repeated (default: all)')
    _add_output_flags(p, formats=('text', 'json'))

    p = sub.add_parser('hurwitz', help='table of Hurwitz class numbers')
    p.add_argument('--max', dest='max_n', type=int, required=True)
    p.add_argument('--format', dest='fmt', choices=export.FORMATS,
                   default='json')
    p.add_argument('--out', default=None)

    p = sub.add_parser('unit', help='congruence-constrained unit eps_N')
    p.add_argument('--N', type=_positive_int, required=True)
    p.add_argument('--kind', choices=sorted(REGION_FAMILIES), required=True)
    p.add_argument('--format', dest='fmt', choices=export.FORMATS,
                   default='json')
    p.add_argument('--out', default=None)

    p = sub.add_parser('ideal', help='Hurwitz series as an ideal sum')
    p.add_argument('--ring', type=int, choices=(6, 2), required=True)
    _add_output_flags(p)

    p = sub.add_parser(
        'golden', help='write JSON and CSV golden files of a command')
    p.add_argument('--out-dir', required=True)
    p.add_argument('--name', default=None)
    p.add_argument('args', nargs=argparse.REMAINDER,
                   help='command and its flags, e.g. theta --N 2 --nu 1')
    return parser


def _parameters(args, names):
    return {name: getattr(args, name) for name in names}


def cmd_theta(args):
    f = theta(args.N, args.nu, args.cutoff)
    parameters = _parameters(args, ('N', 'nu', 'component'))
    parameters['cutoff'] = f.cutoff
    if args.component is None:
        return export.OutputDocument('theta', parameters, f)
    return export.OutputDocument(
        'theta', parameters, f.component(args.component),
        metadata=dict(f.metadata, component=args.component % (2 * args.N)))


def cmd_mock(args):
    weight = Fraction(args.weight)
    variant = mapping.select_variant(weight, args.N, args.variant)
    f = mapping.build(
        MockFormSpec(args.N, weight, variant, args.cutoff))
    parameters = _parameters(args, ('weight', 'N', 'variant'))
    parameters['cutoff'] = f.cutoff
    metadata = dict(f.metadata, construction=variant)
    if 'unit' in metadata:
        metadata['epsilon'] = metadata['unit']['unit']
    return export.OutputDocument('mock', parameters, f, metadata=metadata)


def cmd_hurwitz(args):
    if args.max_n < 0:
        raise ValueError('--max must be nonnegative, but got {}'.format(
            args.max_n))
    rows = [{'n': n, 'H': hurwitz_class_number(n)}
            for n in range(args.max_n + 1)]
    return export.OutputDocument(
        'hurwitz', {'max': args.max_n}, rows,
        metadata={'object': 'H(n)'})


def cmd_unit(args):
    unit = unit_for_family(args.N, args.kind)
    return export.OutputDocument(
        'unit', {'N': args.N, 'kind': args.kind}, unit.to_dict())


def cmd_ideal(args):
    series = hurwitz_ideal_series(args.ring, args.cutoff)
    return export.OutputDocument(
        'ideal', {'ring': args.ring, 'cutoff': series.cutoff}, series,
        metadata={'object': 'ideal sum over Z[sqrt{}]'.format(args.ring)})


_DOCUMENT_COMMANDS = {
    'theta': cmd_theta,
    'mock': cmd_mock,
    'hurwitz': cmd_hurwitz,
    'unit': cmd_unit,
    'ideal': cmd_ideal,
}


def run_document_command(args):
    """Computes the ``OutputDocument`` of a parsed computing command."""
    if args.command not in _DOCUMENT_COMMANDS:
        raise ValueError(
            'Command {} does not produce a coefficient table'.format(
                args.command))
    return _DOCUMENT_COMMANDS[args.command](args)


def cmd_verify(args, stdout):
    reports = verify.run_suites(args.suite or ['all'], args.cutoff)
    if args.fmt == 'json':
        text = '{}\n'.format(json.dumps(
            [r.to_dict() for r in reports], indent=2, sort_keys=True,
            ensure_ascii=False))
    else:
        text = '\n'.join(r.render_text() for r in reports) + '\n'
    _deliver(text, args.out, stdout)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


def cmd_golden(args, stdout):
    from qmock.export_golden import export_golden

    try:
        paths = export_golden(args.args, args.out_dir, name=args.name)
    except SystemExit as e:
        return e.code
    stdout.write('\n'.join(paths) + '\n')
    return EXIT_OK


def _deliver(text, out, stdout):
    if out is None:
        stdout.write(text)
    else:
        export.write_atomic(out, text)


def main(argv=None, stdout=None, stderr=None):
    """Entry point of the ``qmock`` command. Returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        if args.command == 'verify':
            return cmd_verify(args, stdout)
        if args.command == 'golden':
            return cmd_golden(args, stdout)
        document = run_document_command(args)
        _deliver(export.emit(document, args.fmt), args.out, stdout)
    except ValueError as e:
        stderr.write('qmock {}: error: {}\n'.format(args.command, e))
        return EXIT_USAGE
    except (RuntimeError, ArithmeticError, OSError) as e:
        stderr.write('qmock {}: failed: {}\n'.format(args.command, e))
        return EXIT_FAILURE
    return EXIT_OK
