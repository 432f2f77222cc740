"""
Command Line Interface for ppgrowth
Potentially positive words in free groups: machines, decisions, growth tables
"""
import sys
import json
import logging
import argparse
from typing import List, Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from src.core.config import LOG_FORMAT, PPGROWTH_LOG_LEVEL
from src.core.errors import PPGrowthError
from src.cli.processor import CommandProcessor

logger = logging.getLogger("ppgrowth")

WORD_COMMANDS = ("decide", "encode", "decode")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns the exit code"""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="ppgrowth",
        description="Potentially positive words in free groups: automata, decisions and growth",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python ppgrowth_cli.py machine --builder f2-lower --check --eig --digits 12
  python ppgrowth_cli.py decide --rank 2 --witness BaaBabAAAba
  python ppgrowth_cli.py count --builder goldstein --length 10 --distinct-words
  python ppgrowth_cli.py table --digits 4
  python ppgrowth_cli.py encode --n 1 --signal baaBaBaab
  python ppgrowth_cli.py sample --length 30 --count 20 --seed 7
  python ppgrowth_cli.py --json enumerate --rank 2 --length 6 --filter pp2
        """
    )
    parser.add_argument('--json', action='store_true', help='Print results as JSON')
    parser.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)

    machine = sub.add_parser('machine', help='Build an automaton and inspect it')
    machine.add_argument('--builder', required=True,
                         help='f2-lower | goldstein[:XY] | rank:<r>[:drawn|block|ascending] | rn:<n> | rnl:<n>')
    machine.add_argument('--check', action='store_true', help='Run the reduced/mixing/one-to-constant checks')
    machine.add_argument('--charpoly', action='store_true', help='Print the characteristic polynomial')
    machine.add_argument('--eig', action='store_true', help='Certified dominant eigenvalue')
    machine.add_argument('--digits', type=int, default=None, help='Decimal digits for --eig')
    machine.add_argument('--emit', metavar='FILE', help='Write the automaton in text format')

    decide = sub.add_parser('decide', help='Decide potential positivity in F2')
    decide.add_argument('--rank', type=int, default=2)
    decide.add_argument('--max-steps', type=int, default=None)
    decide.add_argument('--witness', action='store_true', help='Include the witness automorphism')
    decide.add_argument('word', nargs='?', default='-', help="Word, or '-' to read stdin")

    count = sub.add_parser('count', help='Count closed paths or distinct cyclic words')
    count.add_argument('--builder', required=True)
    count.add_argument('--length', type=int, required=True)
    mode = count.add_mutually_exclusive_group()
    mode.add_argument('--closed-paths', dest='mode', action='store_const', const='closed_paths')
    mode.add_argument('--distinct-words', dest='mode', action='store_const', const='distinct_words')
    count.set_defaults(mode='closed_paths')

    table = sub.add_parser('table', help='Growth-rate table for ranks 2..7')
    table.add_argument('--digits', type=int, default=3)

    for name in ('encode', 'decode'):
        codec = sub.add_parser(name, help=f'{name.capitalize()} between R^nL and R-infinity')
        codec.add_argument('--n', type=int, default=None)
        codec.add_argument('--signal', action='store_true', help='Use the encoding that records n')
        codec.add_argument('word', nargs='?', default='-', help="Word, or '-' to read stdin")

    sample = sub.add_parser('sample', help='Seeded sample of potentially positive words')
    sample.add_argument('--length', type=int, required=True)
    sample.add_argument('--count', type=int, required=True)
    sample.add_argument('--seed', type=int, required=True)
    sample.add_argument('--max-draws', type=int, default=None)

    enumerate_ = sub.add_parser('enumerate', help='List cyclic words of a language')
    enumerate_.add_argument('--rank', type=int, required=True)
    enumerate_.add_argument('--length', type=int, required=True)
    enumerate_.add_argument('--filter', default='all', help='all | goldstein | rn:<n> | pp2 | commutator')

    return parser


def _arguments(args: argparse.Namespace, stdin) -> dict:
    arguments = {k: v for k, v in vars(args).items() if k not in ('json', 'verbose', 'command')}
    if args.command in WORD_COMMANDS and arguments.get('word') in (None, '-'):
        arguments['word'] = stdin.read().strip()
    if args.command in ('encode', 'decode') and not args.signal and args.n is None:
        raise UsageError(f"ppgrowth {args.command}: error: --n is required without --signal")
    if args.command == 'encode' and args.n is None:
        raise UsageError("ppgrowth encode: error: --n is required")
    return arguments


def _move_label(move: dict) -> str:
    kind, value = next(iter(move.items()))
    return f"invert {value}" if kind == "invert" else value


def _text(command: str, result: dict) -> str:
    if command == 'table':
        return result['markdown'].rstrip("\n")
    if command == 'decide':
        lines = [f"{result['word']}: {result['verdict']}"]
        if result.get('witness'):
            lines.append("witness: " + ", ".join(_move_label(m) for m in result["witness"]))
            lines.append(f"image: {result.get('image')}")
        if result.get('certificate'):
            cert = result['certificate']
            lines.append(f"certificate: step {cert['step']}, {cert['word']} ({cert['reason']})")
        return "\n".join(lines)
    if command == 'enumerate':
        return "\n".join(result['words'] + [f"# {result['count']} words"])
    return "\n".join(f"{key}: {value}" for key, value in result.items())


def run(argv: Optional[List[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    """
    Run the command line and return the exit code

    0 on success (a NotPP verdict included), 1 on domain errors, 2 on usage errors.
    """
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("ppgrowth: error: a subcommand is required")
        arguments = _arguments(args, stdin)
    except UsageError as e:
        stderr.write(parser.format_usage())
        stderr.write(f"{e}\n")
        return 2

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else PPGROWTH_LOG_LEVEL.upper(),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )

    try:
        result = CommandProcessor().process(args.command, arguments)
    except PPGrowthError as e:
        stderr.write(f"error: {e}\n")
        return 1
    except OSError as e:
        stderr.write(f"error: {e}\n")
        return 1

    if args.json:
        stdout.write(json.dumps(result, indent=2, sort_keys=True, default=str) + "\n")
    else:
        stdout.write(_text(args.command, result) + "\n")
    return 0


def main():
    """Main CLI function"""
    sys.exit(run())


if __name__ == "__main__":
    main()
