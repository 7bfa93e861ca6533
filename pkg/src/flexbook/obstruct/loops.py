from dataclasses import dataclass, field
from enum import Enum
import logging

from ..zlinalg import IntMatrix
from ..abgroup import FgAbelianGroup, GroupHom
from .forms import BilinearForm, preserves_form
from .automorphism import automorphism_order, INFINITE_ORDER
from .verdicts import flexible_monodromy_filter

logger = logging.getLogger(__name__)

class LoopStatus(str, Enum):
    NONTRIVIAL_LOOP = 'NONTRIVIAL_LOOP'
    NO_CONCLUSION = 'NO_CONCLUSION'

@dataclass(frozen=True)
class LoopVerdict:
    status: LoopStatus
    order: int | float | None = None
    reason: dict = field(default_factory = dict)
    assumptions: dict = field(default_factory = dict)
    citations: tuple[str, ...] = ()

    def to_json(self) -> dict:
        if self.order is None:
            order = None
        elif self.order == INFINITE_ORDER:
            order = 'INFINITE'
        else:
            order = str(self.order)
        return {'status': self.status.value, 'order': order, 'reason': dict(self.reason),
                'assumptions': dict(self.assumptions), 'citations': list(self.citations)}

def loop_verdict(A: IntMatrix, J: BilinearForm, formal_class_preserved: bool) -> LoopVerdict:
    """
    A form-preserving automorphism of H^q of #_g (S^q x S^q) minus a disk, acting nontrivially and realized by a
    diffeomorphism preserving the formal contact class, gives a noncontractible loop of contact structures.
    An infinite-order automorphism gives a loop of infinite order. Anything else gives no conclusion.
    """
    assumptions = {'formal_class_preserved': formal_class_preserved, 'q_parity': J.q_parity, 'rank': J.size}
    citations = ('nontrivial-loop-of-contact-structures', 'form-preserving-automorphisms-are-realized')

    preserved = preserves_form(A, J)
    if not formal_class_preserved:
        reason = {'code': 'formal_class', 'detail': 'the formal contact class is not asserted to be preserved'}
        return LoopVerdict(LoopStatus.NO_CONCLUSION, None, reason, assumptions, citations)
    if not preserved:
        reason = {'code': 'form', 'detail': 'the matrix does not preserve the cup-product form'}
        return LoopVerdict(LoopStatus.NO_CONCLUSION, None, reason, assumptions, citations)

    free = FgAbelianGroup(J.size)
    passed, _ = flexible_monodromy_filter([GroupHom(free, free, A)])
    if passed:
        reason = {'code': 'trivial_action', 'detail': 'the automorphism acts trivially on cohomology'}
        return LoopVerdict(LoopStatus.NO_CONCLUSION, None, reason, assumptions, citations)

    order = automorphism_order(A)
    detail = 'infinite order automorphism: the loop has infinite order' if order == INFINITE_ORDER \
        else f'automorphism of order {order}'
    reason = {'code': 'nontrivial_action', 'detail': detail}
    logger.info(f'loop verdict: NONTRIVIAL_LOOP, order {order}')
    return LoopVerdict(LoopStatus.NONTRIVIAL_LOOP, order, reason, assumptions, citations)
