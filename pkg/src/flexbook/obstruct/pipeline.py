from dataclasses import dataclass
import logging

from ..errors import StructuralError, InternalInvariantError
from ..openbook import (PageData, Monodromy, OpenBookHomology, SkeletonCriterion, open_book_homology,
                        evaluate_skeleton_criterion, skeleton_cohomology_action)
from .verdicts import Hypotheses, ObstructionVerdict, ObstructionStatus, FilterResult, flexible_obstruction, flexible_monodromy_filter

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class PipelineReport:
    filter: FilterResult
    criterion: SkeletonCriterion
    homology: OpenBookHomology
    verdict: ObstructionVerdict

    def to_json(self) -> dict:
        return {'filter': {'passed': self.filter.passed, 'failing_degrees': list(self.filter.failing_degrees)},
                'skeleton_criterion': {'homology_identity': self.criterion.homology_identity,
                                       'cohomology_identity': self.criterion.cohomology_identity},
                'homology': self.homology.to_json(),
                'verdict': self.verdict.to_json()}

def flexible_page_pipeline(page: PageData, f: Monodromy, hyp: Hypotheses) -> PipelineReport:
    """
    Runs the argument behind the obstruction on a concrete open book:
    the cohomology action of e(f) on the q-skeleton of the double goes through the flexible-monodromy filter,
    a passing action makes e(f) the identity there, hence var(f) = 0 and H_q(M) = H_q(W) is torsion free.
    A monodromy that passes the filter and still yields OBSTRUCTED is a bug.
    """
    if hyp.dim != page.manifold_dim:
        raise StructuralError(f'hypotheses are for dimension {hyp.dim}, the open book has dimension {page.manifold_dim}')

    filt = flexible_monodromy_filter(skeleton_cohomology_action(page, f))
    criterion = evaluate_skeleton_criterion(page, f)
    homology = open_book_homology(page, f)
    verdict = flexible_obstruction(homology.middle, hyp)

    if filt.passed and not criterion.cohomology_identity:
        raise InternalInvariantError('the monodromy passes the filter but e(f) is not the identity on H^q of the skeleton')
    if filt.passed and verdict.status == ObstructionStatus.OBSTRUCTED:
        raise InternalInvariantError('a monodromy acting trivially on cohomology produced torsion in H_q(M)',
                                     witness = verdict.witness)

    logger.info(f'pipeline: filter {"passed" if filt.passed else "failed in degrees " + str(filt.failing_degrees)}, verdict {verdict.status.value}')
    return PipelineReport(filt, criterion, homology, verdict)
