"""
cli.py – Headless CLI / API for sixlines.

Designed to be consumed programmatically via JSON output.  Every command
writes one report {schema, command, input, results} with sorted keys, so
identical input gives byte-identical output.

Usage
-----
  python cli.py invariants --moduli 2 3 4 5
  python cli.py classify   --moduli 2 2 4 5
  python cli.py fibration  --moduli 2 3 4 5 --model y-alt
  python cli.py fibration  --params 1 2 0 3 1 5               # the four models the parameters drive
  python cli.py isogeny    --verify                           # symbolic suite
  python cli.py isogeny    --moduli 2 3 4 5 --verify          # suite plus the Φ̂ push-forward
  python cli.py params     --moduli 2 3 4 5 --from-config     # (α..ζ) over Q(√5)
  python cli.py tangent    --rosenhain 2 3 5
  python cli.py verify-all --seed 7 --samples 3
  python cli.py summary                                       # coloured digest of verify-all
  echo '{"lines": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,2,3],[1,4,5]]}' | python cli.py invariants

Sources: --moduli a b c d | --rosenhain l1 l2 l3 | --params α β γ δ ε ζ
[--radicand D] | --input FILE | a JSON request on stdin.  Rationals are
written "p" or "p/q"; a quadratic scalar is "base:coeff" (base + coeff·√D).
Negative fractions such as -1/2 read as flags to argparse; pass them in JSON.

Exit codes: 0 success, 1 a check failed, 2 malformed input, 3 precondition.
"""

import argparse
import json
import logging
import sys

from constants import LOG_LEVEL, MODEL_LABELS, SCHEMA
from engine import Session, parse_request
from errors import InputError, SixLinesError
from loader import loads_json5
from snapshot import report


# ── Session helper ────────────────────────────────────────────────────────────

def _open_session(args) -> Session:
    return Session(parse_request(_request(args)))


def _request(args) -> dict:
    """Merge --input / stdin JSON with flag values; flags never silently override a source."""
    obj = _read_json(args)
    flags = {
        'moduli':    args.moduli,
        'rosenhain': args.rosenhain,
        'params':    args.params,
        'radicand':  args.radicand,
        'model':     getattr(args, 'model', None),
        'seed':      args.seed,
        'samples':   args.samples,
    }
    for key, value in flags.items():
        if value is None:
            continue
        if key in obj:
            raise InputError(f'{key} given both as a flag and in the JSON request')
        obj[key] = value
    return obj


def _read_json(args) -> dict:
    if args.input:
        try:
            with open(args.input, encoding='utf-8') as f:
                text = f.read()
        except OSError as exc:
            raise InputError(f'cannot read {args.input}: {exc}') from None
    elif any(v is not None for v in (args.moduli, args.rosenhain, args.params)) or sys.stdin.isatty():
        return {}
    else:
        text = sys.stdin.read()
    if not text.strip():
        return {}
    obj = loads_json5(text)
    if not isinstance(obj, dict):
        raise InputError('request must be a JSON object')
    return obj


# ── Commands ──────────────────────────────────────────────────────────────────

def cmd_invariants(args):
    """t, R, Satake coordinates, J-invariants, sextic, derived quantities and flags."""
    s = _open_session(args)
    _emit(args, s, s.invariants())


def cmd_classify(args):
    """Stratum of the configuration and the confluence flags of its J-point."""
    s = _open_session(args)
    _emit(args, s, s.classify())


def cmd_fibration(args):
    """Weierstrass models with their singular fibres, Euler sum and two-torsion."""
    s = _open_session(args)
    results = s.fibrations()
    ok = all(r['euler_sum'] == 24 and r['matches_expected'] is not False
             and r['closed_discriminant'] is not False for r in results.values())
    _emit(args, s, results, ok)


def cmd_isogeny(args):
    """Φ̂ push-forward of the source's X-alternate model; --verify runs the symbolic suite."""
    s = _open_session(args)
    results, ok = s.isogeny(args.verify)
    _emit(args, s, results, ok)


def cmd_params(args):
    """Quartic parameters (α..ζ) with the radicand of their field; --from-config solves them from J."""
    s = _open_session(args)
    results, ok = s.quartic_params(args.from_config)
    _emit(args, s, results, ok)


def cmd_tangent(args):
    """Tangent configuration of a Rosenhain triple against its Igusa–Clebsch point."""
    s = _open_session(args)
    results, ok = s.tangent()
    _emit(args, s, results, ok)


def cmd_verify_all(args):
    """Run every verification section."""
    s = _open_session(args)
    results, ok = s.verify_all()
    _emit(args, s, results, ok)


def cmd_summary(args):
    """Run verify-all and emit a compact human-readable digest."""
    try:
        import colorama
        colorama.init()
        green, red, reset = colorama.Fore.GREEN, colorama.Fore.RED, colorama.Style.RESET_ALL
    except ImportError:
        green = red = reset = ''

    s = _open_session(args)
    results, ok = s.verify_all()
    totals = results['totals']

    lines = []
    lines.append(f"sixlines verify-all, seed {results['seed']}")
    lines.append("")
    for name, entries in results['sections'].items():
        bad = [e for e in entries if e['status'] != 'pass']
        mark = f"{green}PASS{reset}" if not bad else f"{red}FAIL{reset}"
        lines.append(f"  {mark}  {name:<13} {len(entries) - len(bad):>4}/{len(entries)}")
        for e in bad[:5]:
            lines.append(f"        {e['status']}: {e['check']} – {e['anchor']}")
    lines.append("")
    lines.append(f"Checks: {totals['pass']} pass, {totals['fail']} fail, {totals['error']} error")

    sys.stdout.write('\n'.join(lines) + '\n')
    sys.stdout.flush()
    if not ok:
        sys.exit(1)


# ── Utilities ─────────────────────────────────────────────────────────────────

def _emit(args, session, results, ok=True):
    _print(report(args.command, session.request.echo, results), args.pretty, args.output)
    if not ok:
        sys.exit(1)


def _print(obj, pretty=False, output=None):
    text = json.dumps(obj, indent=2 if pretty else None, sort_keys=True) + '\n'
    if output:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)
        return
    sys.stdout.write(text)
    sys.stdout.flush()


def _error(args, exc: SixLinesError):
    """Print an error report and exit with the error's code."""
    detail = {'kind': type(exc).__name__, 'message': str(exc)}
    if hasattr(exc, 'rule'):
        detail['rule'] = exc.rule
    logging.error('%s', exc)
    _print({'schema': SCHEMA, 'command': args.command, 'error': detail}, args.pretty)
    sys.exit(exc.exit_code)


def setup_logging(verbose=False, quiet=False):
    level = LOG_LEVEL
    if quiet:
        level = logging.ERROR
    elif verbose:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(levelname)s: %(message)s",
    )


# ── Argument parsing ──────────────────────────────────────────────────────────

def build_parser():
    p = argparse.ArgumentParser(
        prog='cli.py',
        description='sixlines headless CLI / API',
    )
    sub = p.add_subparsers(dest='command', required=True)

    # Shared flags
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument('--input',     type=str, default=None,  help='JSON request file')
    shared.add_argument('--moduli',    nargs=4, metavar='Q',    help='Moduli a b c d')
    shared.add_argument('--rosenhain', nargs=3, metavar='λ',    help='Rosenhain triple λ1 λ2 λ3')
    shared.add_argument('--params',    nargs=6, metavar='P',    help='Quartic parameters α β γ δ ε ζ')
    shared.add_argument('--radicand',  type=int, default=None,  help='D for "base:coeff" parameters')
    shared.add_argument('--seed',      type=int, default=None,  help='Seed for sampled checks')
    shared.add_argument('--samples',   type=int, default=None,  help='Cap on random points per section')
    shared.add_argument('--output',    type=str, default=None,  help='Write the report to FILE')
    shared.add_argument('--pretty',    action='store_true',     help='Pretty-print JSON')
    shared.add_argument('-v', '--verbose', action='store_true', help='Debug logging on stderr')
    shared.add_argument('-q', '--quiet',   action='store_true', help='Errors only on stderr')

    sub.add_parser('invariants', parents=[shared], help='DO coordinates, J-invariants and flags')
    sub.add_parser('classify',   parents=[shared], help='Stratum and confluence flags')

    sf = sub.add_parser('fibration', parents=[shared], help='Weierstrass models and their fibres')
    sf.add_argument('--model', choices=MODEL_LABELS, default=None,
                    help='One model (default: every model the source drives)')

    si = sub.add_parser('isogeny', parents=[shared], help='Two-isogeny push-forward and symbolic suite')
    si.add_argument('--verify', action='store_true',
                    help='Run the symbolic suite (always run without a source)')

    sp = sub.add_parser('params', parents=[shared], help='Quartic parameters (α..ζ)')
    sp.add_argument('--from-config', action='store_true',
                    help='Solve (α..ζ) from a configuration source via its J-point')

    sub.add_parser('tangent',    parents=[shared], help='Rosenhain restriction identity')
    sub.add_parser('verify-all', parents=[shared], help='Every verification section as JSON')
    sub.add_parser('summary',    parents=[shared], help='Human-readable digest of verify-all')

    return p


def main():
    # Ensure UTF-8 output even on Windows
    if hasattr(sys.stdout, 'reconfigure'):
        sys.stdout.reconfigure(encoding='utf-8', errors='replace')

    parser = build_parser()
    args   = parser.parse_args()
    setup_logging(args.verbose, args.quiet)

    dispatch = {
        'invariants': cmd_invariants,
        'classify':   cmd_classify,
        'fibration':  cmd_fibration,
        'isogeny':    cmd_isogeny,
        'params':     cmd_params,
        'tangent':    cmd_tangent,
        'verify-all': cmd_verify_all,
        'summary':    cmd_summary,
    }
    try:
        dispatch[args.command](args)
    except SixLinesError as exc:
        _error(args, exc)


if __name__ == '__main__':
    main()
