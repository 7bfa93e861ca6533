from typing import Optional, Sequence
import argparse
import logging
import os
import sys
import tempfile

from ..exit import register_first, unregister, EXIT_INPUT
from ..parse import parse_tag_assignments
from .commands import cmd_homology, cmd_openbook, cmd_obstruct, cmd_loop, cmd_selftest
from .reports import ErrorReport, dumps

logger = logging.getLogger(__name__)

LOG_LEVEL_VARIABLE = 'FLEXBOOK_LOG_LEVEL'

def configure_logging():
    """Logs go to stderr; the level comes from FLEXBOOK_LOG_LEVEL (default WARNING)."""
    name = os.environ.get(LOG_LEVEL_VARIABLE, 'WARNING').upper()
    level = logging.getLevelName(name)
    known = isinstance(level, int)
    logging.basicConfig(stream = sys.stderr, level = level if known else logging.WARNING,
                        format = '%(levelname)s %(name)s: %(message)s')
    if not known:
        logger.warning(f'unknown log level {name!r} in {LOG_LEVEL_VARIABLE}, using WARNING')

def _remove(path: str):
    if os.path.exists(path):
        os.remove(path)

def write_output(path: str, text: str):
    """
    Writes text to path through a temporary file in the same directory, so a crash never leaves a partial report.
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(prefix = '.flexbook-', suffix = '.tmp', dir = directory)
    register_first(_remove, tmp_path)
    with os.fdopen(fd, 'w') as file:
        file.write(text)
    os.replace(tmp_path, path)
    unregister(_remove)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog = 'flexbook',
                                     description = 'Exact integral homology of open books and obstructions for flexible pages')
    subparsers = parser.add_subparsers(dest = 'command', required = True)

    common = argparse.ArgumentParser(add_help = False)
    common.add_argument('path', help = 'a problem file (JSON) or a directory of problem files')
    common.add_argument('--json', action = 'store_true', help = 'machine-readable output')
    common.add_argument('--tag', action = 'append', default = [], metavar = 'NAME=VALUE',
                        help = 'override a {tag} of the problem file, can be repeated')
    common.add_argument('--output', default = None, help = 'write the output to this file instead of stdout')

    subparsers.add_parser('homology', parents = [common], help = 'homology of a chain complex, pair or double')
    openbook = subparsers.add_parser('openbook', parents = [common], help = 'homology of an open book')
    openbook.add_argument('--oracle-check', action = 'store_true',
                          help = 'compare the formula degrees with the twisted-double complex')
    obstruct = subparsers.add_parser('obstruct', parents = [common], help = 'torsion obstruction for flexible pages')
    obstruct.add_argument('--force', action = 'store_true',
                          help = 'compute H_q(M) even below dimension 7 (the verdict stays INAPPLICABLE)')
    subparsers.add_parser('loop', parents = [common], help = 'loops of contact structures from automorphisms')

    selftest = subparsers.add_parser('selftest', help = 'run the bundled problems against their expected results')
    selftest.add_argument('--json', action = 'store_true', help = 'machine-readable output')
    selftest.add_argument('--output', default = None, help = 'write the output to this file instead of stdout')
    return parser

def _render(reports: list, as_json: bool) -> str:
    if as_json:
        documents = [r.to_json() for r in reports]
        return dumps(documents[0] if len(documents) == 1 else {'reports': documents}) + '\n'
    return ''.join(r.text() + '\n' for r in reports if not isinstance(r, ErrorReport))

def _render_selftest(results: list[dict], as_json: bool) -> str:
    if as_json:
        return dumps({'passed': all(r['passed'] for r in results), 'results': results}) + '\n'
    lines = []
    for r in results:
        lines.append(f'{"ok    " if r["passed"] else "FAILED"} {r["source"]}')
        lines.extend(f'       {m}' for m in r['mismatches'])
    lines.append(f'{sum(r["passed"] for r in results)}/{len(results)} bundled problems reproduced')
    return '\n'.join(lines) + '\n'

def _main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == 'selftest':
        results, code = cmd_selftest()
        text = _render_selftest(results, args.json)
    else:
        try:
            tags = parse_tag_assignments(args.tag)
        except ValueError as err:
            print(f'flexbook: {err}', file = sys.stderr)
            return EXIT_INPUT

        if args.command == 'homology':
            reports, code = cmd_homology(args.path, tags = tags)
        elif args.command == 'openbook':
            reports, code = cmd_openbook(args.path, oracle_check = args.oracle_check, tags = tags)
        elif args.command == 'obstruct':
            reports, code = cmd_obstruct(args.path, force = args.force, tags = tags)
        else:
            reports, code = cmd_loop(args.path, tags = tags)
        text = _render(reports, args.json)

        if not args.json:
            for r in reports:
                if isinstance(r, ErrorReport):
                    print(r.text(), file = sys.stderr)

    if args.output:
        write_output(args.output, text)
    else:
        sys.stdout.write(text)
    return code

def main(argv: Optional[Sequence[str]] = None):
    configure_logging()
    sys.exit(_main(argv))

if __name__ == '__main__':
    main()
