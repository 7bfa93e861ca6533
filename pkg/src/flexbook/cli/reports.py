from dataclasses import dataclass, field
import json

from ..abgroup import FgAbelianGroup, GroupHom
from ..zlinalg import IntMatrix
from ..obstruct import ObstructionStatus, LoopStatus
from ..errors import InputError, InternalInvariantError

@dataclass
class Report:
    """
    The outcome of one problem: machine-readable data and the lines printed for humans.
    """
    kind: str
    source: str
    data: dict
    lines: list[str] = field(default_factory = list)

    def to_json(self) -> dict:
        return {'kind': self.kind, 'source': self.source, 'status': 'ok', 'result': self.data}

    def text(self) -> str:
        header = f'[{self.kind}] {self.source}'
        return '\n'.join([header] + [f'  {line}' for line in self.lines])

@dataclass
class ErrorReport:
    source: str
    code: int
    error: Exception

    def to_json(self) -> dict:
        out = {'source': self.source, 'status': 'error', 'exit_code': self.code,
               'error': {'type': type(self.error).__name__,
                         'detail': str(getattr(self.error, 'detail', self.error)).strip()}}
        if isinstance(self.error, InputError):
            out['error']['location'] = self.error.location
        if isinstance(self.error, InternalInvariantError) and self.error.witness is not None:
            out['error']['witness'] = str(self.error.witness)
        return out

    def text(self) -> str:
        location = f' at {self.error.location}' if isinstance(self.error, InputError) else ''
        detail = str(getattr(self.error, 'detail', self.error)).strip()
        return f'[error {self.code}] {self.source}{location}: {detail}'

def format_groups(groups: list[FgAbelianGroup], name: str = 'H') -> str:
    """'H_0 = Z, H_1 = Z/2, H_2 = 0'"""
    return ', '.join(f'{name}_{i} = {g}' for i, g in enumerate(groups))

def format_matrix(matrix: IntMatrix) -> str:
    return '[' + ', '.join('[' + ', '.join(str(v) for v in row) + ']' for row in matrix.tolist()) + ']'

def dumps(obj) -> str:
    return json.dumps(obj, sort_keys = True, indent = 2)

## RE-VALIDATION
def _decode_groups(values, where: str):
    if not isinstance(values, list):
        raise InternalInvariantError(f'{where} is not a list of groups', witness = values)
    for value in values:
        FgAbelianGroup.from_json(value)

def _decode_hom(value):
    GroupHom.from_json(value)

def validate_report(report: dict):
    """
    Decodes every component of a machine-readable report with the library codecs.
    A component that does not decode is a bug in the report writer.
    """
    try:
        if report.get('status') != 'ok':
            return
        kind, result = report['kind'], report['result']
        if kind == 'chain_homology':
            for key in ('homology', 'relative_homology', 'cohomology'):
                if key in result:
                    _decode_groups(result[key], key)
        elif kind == 'double':
            _decode_groups(result['homology'], 'homology')
            for blocks in result.get('blocks', []):
                for key in ('upper_left', 'upper_right', 'lower_left', 'lower_right'):
                    _decode_hom(blocks[key])
        elif kind == 'open_book':
            _decode_groups(result['homology']['groups'], 'homology.groups')
            _decode_hom(result['homology']['variation'])
            if 'blocks' in result:
                for key in ('upper_left', 'upper_right', 'lower_left', 'lower_right'):
                    _decode_hom(result['blocks'][key])
        elif kind == 'obstruction':
            ObstructionStatus(result['verdict']['status'])
            if result.get('middle_homology') is not None:
                FgAbelianGroup.from_json(result['middle_homology'])
        elif kind == 'loop':
            LoopStatus(result['verdict']['status'])
            IntMatrix.from_json(result['matrix'])
        else:
            raise InternalInvariantError(f'unknown report kind {kind!r}')
    except (InputError, KeyError, TypeError, ValueError) as err:
        raise InternalInvariantError('a machine-readable report does not decode', witness = repr(err))
