from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional, Sequence
import logging

from ..abgroup import FgAbelianGroup, GroupHom, hom_is_identity
from ..errors import StructuralError, InputError

logger = logging.getLogger(__name__)

MIN_DIMENSION = 7

class ObstructionStatus(str, Enum):
    OBSTRUCTED = 'OBSTRUCTED'
    CONSISTENT = 'CONSISTENT'
    INAPPLICABLE = 'INAPPLICABLE'

@dataclass(frozen=True)
class Hypotheses:
    """
    User-asserted geometric hypotheses. None of them can be checked from chain data.

    dim:                     dimension 2q + 1 of the contact manifold
    c1_vanishes_on_spheres:  c_1 of the contact structure vanishes on 2-spheres
    page_flexible:           the page is a flexible Weinstein domain
    page_sh_vanishes:        the page has vanishing symplectic homology
    """
    dim: int
    c1_vanishes_on_spheres: bool
    page_flexible: bool = True
    page_sh_vanishes: bool = False

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 3 or self.dim % 2 == 0:
            raise StructuralError(f'the manifold dimension must be odd and at least 3, got {self.dim!r}')

    @property
    def q(self) -> int:
        return (self.dim - 1) // 2

    def to_json(self) -> dict:
        return {'dim': self.dim, 'c1_vanishes_on_spheres': self.c1_vanishes_on_spheres,
                'page_flexible': self.page_flexible, 'page_sh_vanishes': self.page_sh_vanishes}

    @classmethod
    def from_json(cls, obj) -> 'Hypotheses':
        if not isinstance(obj, dict):
            raise InputError(detail = 'hypotheses must be an object')
        dim = obj.get('dim')
        if isinstance(dim, bool) or not isinstance(dim, int):
            raise InputError('dim', f'expected an integer, got {dim!r}')
        flags = {}
        for key, default in (('c1_vanishes_on_spheres', None), ('page_flexible', True), ('page_sh_vanishes', False)):
            value = obj.get(key, default)
            if not isinstance(value, bool):
                raise InputError(key, 'expected true or false')
            flags[key] = value
        try:
            return cls(dim, **flags)
        except StructuralError as err:
            raise InputError('dim', err.detail)

@dataclass(frozen=True)
class ObstructionVerdict:
    status: ObstructionStatus
    witness: Optional[tuple[int, ...]] = None
    reason: dict = field(default_factory = dict)
    assumptions: dict = field(default_factory = dict)
    citations: tuple[str, ...] = ()

    def __post_init__(self):
        if self.status == ObstructionStatus.OBSTRUCTED and not self.witness:
            raise StructuralError('an OBSTRUCTED verdict needs a nonempty torsion witness')

    def to_json(self) -> dict:
        return {'status': self.status.value,
                'witness': None if self.witness is None else [str(t) for t in self.witness],
                'reason': dict(self.reason),
                'assumptions': dict(self.assumptions),
                'citations': list(self.citations)}

def flexible_obstruction(HqM: FgAbelianGroup, hyp: Hypotheses) -> ObstructionVerdict:
    """
    A contact manifold of dimension >= 7 with c_1 vanishing on 2-spheres, supported by an open book
    whose page is flexible (or has vanishing symplectic homology), has torsion-free H_q(M).
    OBSTRUCTED means no such open book exists; CONSISTENT never asserts that one does.
    """
    assumptions = hyp.to_json()
    citations = ('torsion-free-middle-homology',)

    if hyp.dim < MIN_DIMENSION:
        reason = {'code': 'dimension', 'detail': f'dimension {hyp.dim} < {MIN_DIMENSION}: the criterion says nothing'}
        return ObstructionVerdict(ObstructionStatus.INAPPLICABLE, None, reason, assumptions, citations)
    if not hyp.c1_vanishes_on_spheres:
        reason = {'code': 'c1', 'detail': 'c_1 is not asserted to vanish on 2-spheres'}
        return ObstructionVerdict(ObstructionStatus.INAPPLICABLE, None, reason, assumptions, citations)
    if not (hyp.page_flexible or hyp.page_sh_vanishes):
        reason = {'code': 'page', 'detail': 'the page is neither flexible nor asserted to have vanishing symplectic homology'}
        return ObstructionVerdict(ObstructionStatus.INAPPLICABLE, None, reason, assumptions, citations)

    if HqM.torsion:
        reason = {'code': 'torsion', 'detail': f'H_{hyp.q}(M) = {HqM} has torsion'}
        verdict = ObstructionVerdict(ObstructionStatus.OBSTRUCTED, tuple(HqM.torsion), reason, assumptions, citations)
    else:
        reason = {'code': 'torsion_free', 'detail': f'H_{hyp.q}(M) = {HqM} is torsion free: no obstruction'}
        verdict = ObstructionVerdict(ObstructionStatus.CONSISTENT, None, reason, assumptions, citations)
    logger.info(f'obstruction verdict: {verdict.status.value}')
    return verdict

class FilterResult(NamedTuple):
    passed: bool
    failing_degrees: list[int]

def flexible_monodromy_filter(actions: Sequence[GroupHom]) -> FilterResult:
    """
    A monodromy of a flexible page acts as the identity on cohomology in every degree.
    actions[i] is the action on H^i; returns whether it passes and the degrees where it does not.
    """
    failing = []
    for i, action in enumerate(actions):
        if action.domain != action.codomain:
            raise StructuralError(f'the action in degree {i} is not an endomorphism: {action.domain} -> {action.codomain}')
        if not hom_is_identity(action):
            failing.append(i)
    return FilterResult(not failing, failing)
