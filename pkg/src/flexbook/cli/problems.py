from abc import ABC, ABCMeta, abstractmethod
from typing import Optional
import logging
import os

from ..zlinalg import IntMatrix
from ..abgroup import FgAbelianGroup
from ..chainkit import ChainComplex, SubcomplexPair, all_homology, all_cohomology, relative_homology, euler_characteristic
from ..openbook import (PageData, Monodromy, open_book_homology, open_book_homology_from_variation,
                        verify_block_lemma, build_double)
from ..obstruct import (Hypotheses, flexible_obstruction, flexible_page_pipeline,
                        lens_space_homology, connected_sum_homology, hyperbolic_form, BilinearForm, loop_verdict, MIN_DIMENSION)
from ..config import Options
from ..errors import InputError, StructuralError
from .reports import Report, format_groups, format_matrix

logger = logging.getLogger(__name__)

SCHEMA_VERSIONS = ('1.0',)

def _nested(location: str, func, *args):
    # run a decoder and prefix the location of any InputError it raises
    try:
        return func(*args)
    except InputError as err:
        raise err.at(location)

def _require(payload: dict, key: str):
    if key not in payload:
        raise InputError(key, 'missing')
    return payload[key]

def _flag(payload: dict, key: str, default: bool) -> bool:
    value = payload.get(key, default)
    if not isinstance(value, bool):
        raise InputError(key, 'expected true or false')
    return value

def _int(payload: dict, key: str, minimum: Optional[int] = None) -> int:
    value = _require(payload, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(key, f'expected an integer, got {value!r}')
    if minimum is not None and value < minimum:
        raise InputError(key, f'expected an integer >= {minimum}, got {value}')
    return value

def _page_and_monodromy(payload: dict, monodromy_required: bool = True) -> tuple[PageData, Optional[Monodromy]]:
    page = _nested('page', PageData.from_json, _require(payload, 'page'))
    if 'monodromy' not in payload:
        if monodromy_required:
            raise InputError('monodromy', 'missing')
        return page, None
    return page, _nested('monodromy', Monodromy.from_json, page, payload['monodromy'])

class ProblemMeta(ABCMeta):
    def __init__(cls, name, bases, attrs):
        super().__init__(name, bases, attrs)
        if not hasattr(cls, 'subclasses'):
            cls.subclasses = {}
        elif 'kind' in attrs:
            cls.subclasses[attrs['kind']] = cls

class Problem(ABC, metaclass=ProblemMeta):
    """
    A problem file: {"schema_version": "1.0", "kind": ..., "payload": {...}}, optionally with "tags" and "expected".
    The payload is validated when the problem is built, before anything is computed.
    """

    def __init__(self, payload: dict, source: str = '<memory>', expected: Optional[dict] = None):
        self.source = source
        self.expected = expected
        try:
            self.parse(payload)
        except InputError as err:
            raise err.at('payload')
        except StructuralError as err:
            raise InputError('payload', err.detail)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.source})"

    @classmethod
    def from_options(cls, options: dict, source: str = '<memory>') -> 'Problem':
        version = options.get('schema_version')
        if version is None:
            raise InputError('schema_version', 'missing')
        if str(version) not in SCHEMA_VERSIONS:
            raise InputError('schema_version', f'unrecognized version {version!r}, expected one of {list(SCHEMA_VERSIONS)}')

        Subclass: 'Problem' = cls.get_subclass(options.get('kind'))
        payload = options.get('payload')
        if not isinstance(payload, dict):
            raise InputError('payload', 'expected an object')
        expected = options.get('expected')
        return Subclass(dict(payload), source, dict(expected) if isinstance(expected, dict) else None)

    @classmethod
    def load(cls, path: str, **tags) -> 'Problem':
        options = Options.load(path, **tags)
        return cls.from_options(options.to_dict(), os.path.basename(path))

    @classmethod
    def get_subclass(cls, kind: str):
        Subclass: 'Problem'|None = cls.subclasses.get(kind.lower()) if isinstance(kind, str) else None
        if Subclass is None:
            raise InputError('kind', f'unknown problem kind {kind!r}, expected one of {sorted(cls.subclasses)}')
        return Subclass

    @abstractmethod
    def parse(self, payload: dict):
        """Validate the payload and keep the decoded objects."""

    @abstractmethod
    def run(self, **flags) -> Report:
        """Compute and report."""

class ChainHomologyProblem(Problem):
    kind = 'chain_homology'

    def parse(self, payload: dict):
        self.complex = _nested('complex', ChainComplex.from_json, _require(payload, 'complex'))
        self.pair = None
        if 'sub_indices' in payload:
            self.pair = SubcomplexPair.from_json(self.complex, {'sub_indices': payload['sub_indices']})
        self.with_cohomology = _flag(payload, 'cohomology', False)

    def run(self, **flags) -> Report:
        groups = all_homology(self.complex)
        data = {'homology': [g.to_json() for g in groups], 'euler_characteristic': euler_characteristic(self.complex)}
        lines = [format_groups(groups)]
        if self.pair is not None and not self.pair.is_empty():
            relative = [relative_homology(self.pair, i) for i in range(self.complex.top_degree + 1)]
            data['relative_homology'] = [g.to_json() for g in relative]
            lines.append('relative: ' + format_groups(relative))
        if self.with_cohomology:
            cohom = all_cohomology(self.complex)
            data['cohomology'] = [g.to_json() for g in cohom]
            lines.append(', '.join(f'H^{i} = {g}' for i, g in enumerate(cohom)))
        return Report(self.kind, self.source, data, lines)

class DoubleProblem(Problem):
    """
    Homology of the double DW = W u_{dW} W and, with a monodromy, the block form of e(f)_* in every degree.
    """
    kind = 'double'

    def parse(self, payload: dict):
        self.page, self.monodromy = _page_and_monodromy(payload, monodromy_required = False)

    def run(self, **flags) -> Report:
        double = build_double(self.page)
        groups = all_homology(double.complex)
        data = {'homology': [g.to_json() for g in groups], 'ranks': list(double.complex.ranks)}
        lines = [format_groups(groups)]
        if self.monodromy is not None:
            blocks = [verify_block_lemma(self.page, self.monodromy, i) for i in range(self.page.complex.top_degree + 1)]
            data['blocks'] = [b.to_json() for b in blocks]
            for b in blocks:
                lines.append(f'degree {b.degree}: var = {format_matrix(b.upper_right.matrix)}, f_* = {format_matrix(b.lower_right.matrix)}')
        return Report(self.kind, self.source, data, lines)

class OpenBookProblem(Problem):
    """
    H_*(M) of the open book (page, monodromy). The payload carries either a chain-level "monodromy"
    or a homology-level variation, as {"monodromy": {"variation_matrix": ...}} or a top-level "variation".
    """
    kind = 'open_book'

    def parse(self, payload: dict):
        raw = payload.get('monodromy')
        if isinstance(raw, dict) and 'variation_matrix' in raw:
            if 'chain_map' in raw:
                raise InputError('monodromy', 'give either "chain_map" or "variation_matrix", not both')
            self.page = _nested('page', PageData.from_json, _require(payload, 'page'))
            self.monodromy = None
            self.variation = _nested('monodromy.variation_matrix', IntMatrix.from_json, raw['variation_matrix'])
        elif 'variation' in payload:
            self.page, self.monodromy = _page_and_monodromy(payload, monodromy_required = False)
            self.variation = _nested('variation', IntMatrix.from_json, payload['variation'])
        else:
            self.page, self.monodromy = _page_and_monodromy(payload)
            self.variation = None
        self.page.require_open_book()

    def run(self, oracle_check: bool = False, **flags) -> Report:
        q = self.page.q
        if self.monodromy is None:
            result = open_book_homology_from_variation(self.page, self.variation)
            blocks = None
        else:
            result = open_book_homology(self.page, self.monodromy, oracle_check = oracle_check)
            blocks = verify_block_lemma(self.page, self.monodromy, q)

        data = {'homology': result.to_json(), 'q': q, 'dim': self.page.manifold_dim}
        lines = [format_groups(result.groups),
                 f'H_{q}(M) = {result.middle}',
                 f'var(f) = {format_matrix(result.variation.matrix)} : {result.variation.domain} -> {result.variation.codomain}',
                 'methods: ' + ', '.join(f'{i}:{tag}' for i, tag in enumerate(result.method_tags))]
        if blocks is not None:
            data['blocks'] = blocks.to_json()
            lines.append(f'e(f)_* on H_{q}(DW) = [[Id, var], [0, f_*]] with f_* = {format_matrix(blocks.lower_right.matrix)}')
        if result.agreement is not None:
            agree = all(result.agreement.values())
            lines.append(f'oracle check: {"agree" if agree else "DISAGREE"} in degrees 0..{q}')
        return Report(self.kind, self.source, data, lines)

## OBSTRUCTION DESCRIPTORS
class Descriptor:
    """
    How the manifold of an obstruction problem is given. Subclasses produce H_q(M) and, where possible, all of H_*(M).
    """
    kind: str = None

    def full_homology(self, hyp: Hypotheses, compute: bool = True) -> Optional[list[FgAbelianGroup]]:
        return None

    def middle(self, hyp: Hypotheses, compute: bool = True) -> Optional[FgAbelianGroup]:
        groups = self.full_homology(hyp, compute)
        return None if groups is None else groups[hyp.q]

    @staticmethod
    def from_json(obj, hyp: Hypotheses) -> 'Descriptor':
        if not isinstance(obj, dict):
            raise InputError(detail = 'a manifold descriptor must be an object with a "type"')
        kinds = {'homology': HomologyDescriptor, 'open_book': OpenBookDescriptor,
                 'lens_space': LensSpaceDescriptor, 'connected_sum': ConnectedSumDescriptor}
        kind = obj.get('type')
        if kind not in kinds:
            raise InputError('type', f'unknown descriptor {kind!r}, expected one of {sorted(kinds)}')
        return kinds[kind](obj, hyp)

class HomologyDescriptor(Descriptor):
    kind = 'homology'

    def __init__(self, obj: dict, hyp: Hypotheses):
        self.groups = None
        self._middle = None
        if 'groups' in obj:
            raw = obj['groups']
            if not isinstance(raw, list) or len(raw) != hyp.dim + 1:
                raise InputError('groups', f'expected {hyp.dim + 1} groups, one per degree 0..{hyp.dim}')
            self.groups = [_nested(f'groups[{i}]', FgAbelianGroup.from_json, g) for i, g in enumerate(raw)]
        elif 'middle' in obj:
            self._middle = _nested('middle', FgAbelianGroup.from_json, obj['middle'])
        else:
            raise InputError('middle', 'a homology descriptor needs "middle" (H_q(M)) or "groups" (all of H_*(M))')

    def full_homology(self, hyp, compute = True):
        return self.groups

    def middle(self, hyp, compute = True):
        return self._middle if self.groups is None else self.groups[hyp.q]

class LensSpaceDescriptor(Descriptor):
    kind = 'lens_space'

    def __init__(self, obj: dict, hyp: Hypotheses):
        self.order = _int(obj, 'order', minimum = 1)

    def full_homology(self, hyp, compute = True):
        return lens_space_homology(hyp.dim, self.order)

class OpenBookDescriptor(Descriptor):
    kind = 'open_book'

    def __init__(self, obj: dict, hyp: Hypotheses):
        self.page, self.monodromy = _page_and_monodromy(obj)
        self.page.require_open_book()
        if self.page.manifold_dim != hyp.dim:
            raise InputError('page.q', f'the open book has dimension {self.page.manifold_dim}, the hypotheses say {hyp.dim}')
        self.pipeline = None

    def full_homology(self, hyp, compute = True):
        if not compute:
            return None
        if self.pipeline is None:
            self.pipeline = flexible_page_pipeline(self.page, self.monodromy, hyp)
        return self.pipeline.homology.groups

class ConnectedSumDescriptor(Descriptor):
    kind = 'connected_sum'

    def __init__(self, obj: dict, hyp: Hypotheses):
        raw = _require(obj, 'summands')
        if not isinstance(raw, list) or not raw:
            raise InputError('summands', 'expected a nonempty list of descriptors')
        self.summands = [_nested(f'summands[{k}]', Descriptor.from_json, s, hyp) for k, s in enumerate(raw)]
        for k, s in enumerate(self.summands):
            if isinstance(s, HomologyDescriptor) and s.groups is None:
                raise InputError(f'summands[{k}].groups', 'a connected-sum summand must give all of H_*')

    def full_homology(self, hyp, compute = True):
        parts = [s.full_homology(hyp, compute) for s in self.summands]
        if any(p is None for p in parts):
            return None
        return connected_sum_homology(parts)

class ObstructionProblem(Problem):
    """
    The torsion obstruction for flexible pages: payload {"hypotheses": {...}, "manifold": descriptor}.
    """
    kind = 'obstruction'

    def parse(self, payload: dict):
        self.hypotheses = _nested('hypotheses', Hypotheses.from_json, _require(payload, 'hypotheses'))
        self.manifold = _nested('manifold', Descriptor.from_json, _require(payload, 'manifold'), self.hypotheses)

    def run(self, force: bool = False, **flags) -> Report:
        hyp = self.hypotheses
        compute = force or hyp.dim >= MIN_DIMENSION
        if not compute:
            logger.info(f'dimension {hyp.dim} < {MIN_DIMENSION}: nothing computed')
        middle = self.manifold.middle(hyp, compute)
        if middle is None:
            # below the dimension gate: the verdict does not depend on H_q(M)
            verdict = flexible_obstruction(FgAbelianGroup(), hyp)
        else:
            verdict = flexible_obstruction(middle, hyp)

        data = {'verdict': verdict.to_json(), 'q': hyp.q,
                'middle_homology': None if middle is None else middle.to_json(),
                'descriptor': self.manifold.kind}
        lines = [f'{verdict.status.value}' + (f' with torsion witness {list(verdict.witness)}' if verdict.witness else ''),
                 f'H_{hyp.q}(M) = {middle if middle is not None else "not computed"}',
                 f'reason: {verdict.reason.get("detail")}',
                 'assumptions: ' + ', '.join(f'{k} = {v}' for k, v in sorted(verdict.assumptions.items()))]
        pipeline = getattr(self.manifold, 'pipeline', None)
        if pipeline is not None:
            data['pipeline'] = pipeline.to_json()
            lines.append(f'cohomology filter: {"passed" if pipeline.filter.passed else "failed in degrees " + str(pipeline.filter.failing_degrees)}')
        return Report(self.kind, self.source, data, lines)

class LoopProblem(Problem):
    """
    Payload {"g": genus, "q_parity": 0 or 1, "matrix": A, "formal_class_preserved": bool}, with an optional "form" Gram matrix
    replacing the hyperbolic form of #_g (S^q x S^q).
    """
    kind = 'loop'

    def parse(self, payload: dict):
        self.g = _int(payload, 'g', minimum = 1)
        q_parity = _int(payload, 'q_parity')
        if q_parity not in (0, 1):
            raise InputError('q_parity', f'expected 0 or 1, got {q_parity}')
        self.matrix = _nested('matrix', IntMatrix.from_json, _require(payload, 'matrix'))
        if 'form' in payload:
            gram = _nested('form', IntMatrix.from_json, payload['form'])
            try:
                self.form = BilinearForm(gram, q_parity)
            except StructuralError as err:
                raise InputError('form', err.detail)
        else:
            self.form = hyperbolic_form(self.g, q_parity)
        self.formal_class_preserved = _flag(payload, 'formal_class_preserved', False)

    def run(self, **flags) -> Report:
        verdict = loop_verdict(self.matrix, self.form, self.formal_class_preserved)
        data = {'verdict': verdict.to_json(), 'matrix': self.matrix.to_json(), 'form': self.form.to_json()}
        order = verdict.to_json()['order']
        lines = [f'{verdict.status.value}' + (f', order {order}' if order is not None else ''),
                 f'reason: {verdict.reason.get("detail")}']
        return Report(self.kind, self.source, data, lines)
