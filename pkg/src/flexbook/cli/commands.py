"""
Command implementations. Every command takes a problem file or a directory of problem files
and returns the reports together with the exit code.
"""
from typing import Optional
import glob
import logging
import os

from ..abgroup import FgAbelianGroup
from ..errors import InputError, FlexbookError
from ..exit import exit_code_for, EXIT_OK, EXIT_INPUT, EXIT_INTERNAL
from ..fixtures import bundled_problem_paths
from .problems import Problem
from .reports import Report, ErrorReport, validate_report

logger = logging.getLogger(__name__)

COMMAND_KINDS = {'homology': ('chain_homology', 'double'),
                 'openbook': ('open_book',),
                 'obstruct': ('obstruction',),
                 'loop': ('loop',)}

KIND_COMMANDS = {kind: command for command, kinds in COMMAND_KINDS.items() for kind in kinds}

def collect_paths(path: str) -> list[str]:
    """A problem file, or every *.json file of a directory in sorted order."""
    if os.path.isdir(path):
        paths = sorted(glob.glob(os.path.join(path, '*.json')))
        if not paths:
            raise InputError(detail = f'no problem files (*.json) in {path}')
        return paths
    if not os.path.isfile(path):
        raise InputError(detail = f'{path} does not exist')
    return [path]

def run_problem(path: str, command: Optional[str] = None, tags: Optional[dict] = None, **flags) -> tuple[Report | ErrorReport, int]:
    """
    Loads, validates and runs one problem file. Errors become an ErrorReport with the matching exit code.
    """
    source = os.path.basename(path)
    try:
        problem = Problem.load(path, **(tags or {}))
        if command is not None and problem.kind not in COMMAND_KINDS[command]:
            raise InputError('kind', f'the {command} command runs {" or ".join(COMMAND_KINDS[command])} problems, got {problem.kind}')
        report = problem.run(**flags)
        validate_report(report.to_json())
    except Exception as err:
        code = exit_code_for(err)
        if code == EXIT_INTERNAL:
            logger.error(f'{source}: {type(err).__name__}: {err}', exc_info = not isinstance(err, FlexbookError))
        else:
            logger.debug(f'{source}: rejected: {err}')
        return ErrorReport(source, code, err), code
    return report, EXIT_OK

def run_command(command: str, path: str, tags: Optional[dict] = None, **flags) -> tuple[list[Report | ErrorReport], int]:
    try:
        paths = collect_paths(path)
    except InputError as err:
        return [ErrorReport(os.path.basename(path.rstrip(os.sep)) or path, EXIT_INPUT, err)], EXIT_INPUT

    reports, code = [], EXIT_OK
    for p in paths:
        report, rc = run_problem(p, command, tags, **flags)
        reports.append(report)
        code = max(code, rc)
    return reports, code

def cmd_homology(path: str, tags: Optional[dict] = None):
    return run_command('homology', path, tags)

def cmd_openbook(path: str, oracle_check: bool = False, tags: Optional[dict] = None):
    return run_command('openbook', path, tags, oracle_check = oracle_check)

def cmd_obstruct(path: str, force: bool = False, tags: Optional[dict] = None):
    return run_command('obstruct', path, tags, force = force)

def cmd_loop(path: str, tags: Optional[dict] = None):
    return run_command('loop', path, tags)

## SELFTEST
def _group_strings(values: list) -> list[str]:
    return [str(FgAbelianGroup.from_json(g)) for g in values]

def observed_values(report: Report) -> dict:
    """The quantities an expected block can name, read back from the machine-readable report."""
    data = report.data
    observed = {}
    if report.kind in ('chain_homology', 'double'):
        observed['homology'] = _group_strings(data['homology'])
        for key in ('relative_homology', 'cohomology'):
            if key in data:
                observed[key] = _group_strings(data[key])
    elif report.kind == 'open_book':
        observed['homology'] = _group_strings(data['homology']['groups'])
        observed['middle'] = observed['homology'][data['q']]
    elif report.kind == 'obstruction':
        verdict = data['verdict']
        observed['status'] = verdict['status']
        observed['witness'] = verdict['witness']
        if data['middle_homology'] is not None:
            observed['middle'] = str(FgAbelianGroup.from_json(data['middle_homology']))
        if 'pipeline' in data:
            observed['homology'] = _group_strings(data['pipeline']['homology']['groups'])
    elif report.kind == 'loop':
        observed['status'] = data['verdict']['status']
        observed['order'] = data['verdict']['order']
    return observed

def _normalize(value):
    if isinstance(value, list):
        return [_normalize(v) for v in value]
    return None if value is None else str(value)

def compare_expected(expected: dict, report: Report) -> list[str]:
    """Descriptions of every expected value the report does not reproduce."""
    observed = observed_values(report)
    mismatches = []
    for key, value in sorted(expected.items()):
        if key not in observed:
            mismatches.append(f'{key}: not reported')
        elif _normalize(value) != _normalize(observed[key]):
            mismatches.append(f'{key}: expected {_normalize(value)}, got {_normalize(observed[key])}')
    return mismatches

def cmd_selftest(paths: Optional[list[str]] = None) -> tuple[list[dict], int]:
    """
    Runs the bundled problems (with the oracle check on) and compares each report with the problem's expected block.
    """
    paths = bundled_problem_paths() if paths is None else paths
    results, code = [], EXIT_OK
    for path in paths:
        source = os.path.basename(path)
        try:
            problem = Problem.load(path)
        except Exception as err:
            rc = exit_code_for(err)
            results.append({'source': source, 'passed': False, 'mismatches': [f'cannot load: {getattr(err, "detail", err)}']})
            code = max(code, rc)
            continue

        report, rc = run_problem(path, KIND_COMMANDS[problem.kind], oracle_check = True)
        if rc != EXIT_OK:
            mismatches = [f'exit code {rc}: {report.text()}']
        elif not problem.expected:
            mismatches = ['no expected block']
        else:
            mismatches = compare_expected(problem.expected, report)
        passed = not mismatches
        if not passed:
            code = max(code, rc if rc != EXIT_OK else EXIT_INTERNAL)
        logger.info(f'selftest {source}: {"ok" if passed else "FAILED"}')
        results.append({'source': source, 'passed': passed, 'mismatches': mismatches})
    return results, code
