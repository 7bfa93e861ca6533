from .problems import Problem, ProblemMeta, SCHEMA_VERSIONS, Descriptor
from .reports import Report, ErrorReport, validate_report
from .commands import (COMMAND_KINDS, collect_paths, run_problem, run_command, cmd_homology, cmd_openbook, cmd_obstruct,
                       cmd_loop, cmd_selftest, compare_expected)
