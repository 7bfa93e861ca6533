from dataclasses import dataclass, field
from typing import Optional
import logging
import warnings

from ..zlinalg import IntMatrix
from ..abgroup import FgAbelianGroup, GroupHom, hom_cokernel, hom_is_identity, groups_isomorphic
from ..chainkit import ChainComplex, ChainMap, homology, induced_hom, induced_cohom, mapping_cone, direct_sum
from ..errors import StructuralError, InternalInvariantError
from .page import PageData, Monodromy, handle_bound_holds
from .double import extend_monodromy
from .variation import variation

logger = logging.getLogger(__name__)

FORMULA = 'formula'
GLUED = 'glued'
DUALITY = 'duality'

def twisted_double_complex(page: PageData, f: Monodromy) -> ChainComplex:
    """
    Algebraic model of M = (W x I) u_{e(f)} (W x I): the mapping cone of
    (fold o e(f), fold) : C(DW) -> C(W) + C(W). Its homology in degree i is H_i(M).
    """
    double = page.double
    twisted = double.fold @ extend_monodromy(page, f)
    C = page.complex
    target = direct_sum(C, C)
    components = [IntMatrix.vstack([twisted.component(i), double.fold.component(i)], cols = double.complex.rank(i))
                  for i in range(double.complex.top_degree + 1)]
    return mapping_cone(ChainMap(double.complex, target, components))

@dataclass
class OpenBookHomology:
    """
    H_0(M) .. H_{2q+1}(M) with the variation and the provenance of each degree.
    agreement maps each formula-computed degree to whether the glued complex gave the same group (None when not checked).
    """
    groups: list[FgAbelianGroup]
    variation: GroupHom
    method_tags: list[str]
    agreement: Optional[dict[int, bool]] = None
    log: dict = field(default_factory = dict)

    @property
    def q(self) -> int:
        return (len(self.groups) - 2) // 2

    @property
    def middle(self) -> FgAbelianGroup:
        """H_q(M)."""
        return self.groups[self.q]

    def to_json(self) -> dict:
        out = {'groups': [g.to_json() for g in self.groups],
               'variation': self.variation.to_json(),
               'method_tags': list(self.method_tags)}
        if self.agreement is not None:
            out['agreement'] = {str(i): ok for i, ok in sorted(self.agreement.items())}
        return out

def _glued_groups(page: PageData, f: Monodromy) -> list[FgAbelianGroup]:
    cone = twisted_double_complex(page, f)
    return [homology(cone, i) if i <= cone.top_degree else FgAbelianGroup() for i in range(page.manifold_dim + 1)]

def _check_closed_model(groups: list[FgAbelianGroup]):
    if groups[0] != FgAbelianGroup(1):
        raise InternalInvariantError('H_0(M) is not Z for a connected page', witness = str(groups[0]))
    if groups[-1] != FgAbelianGroup(1):
        warnings.warn(f'H_{len(groups) - 1}(M) = {groups[-1]}, not Z: the page model does not look like a compact oriented 2q-manifold with boundary')

def open_book_homology(page: PageData, f: Monodromy, oracle_check: bool = True) -> OpenBookHomology:
    """
    Homology of the open book with page W and monodromy f.
    For Weinstein-type pages, degrees i < q are H_i(W) and degree q is coker(var(f)); all other
    degrees (and every degree of other pages) come from the twisted-double complex.
    With oracle_check the formula degrees are compared with the twisted double and a mismatch is fatal.
    """
    page.require_open_book()
    q = page.q
    var = variation(page, f)
    glued = _glued_groups(page, f)

    groups, tags = list(glued), [GLUED] * len(glued)
    agreement = None
    if page.weinstein_type:
        for i in range(q):
            groups[i], tags[i] = page.homology(i), FORMULA
        groups[q], tags[q] = hom_cokernel(var), FORMULA

        if oracle_check:
            agreement = {i: groups_isomorphic(groups[i], glued[i]) for i in range(q + 1)}
            mismatched = [i for i, ok in agreement.items() if not ok]
            if mismatched:
                raise InternalInvariantError('formula and twisted-double homology disagree',
                                             witness = {i: (str(groups[i]), str(glued[i])) for i in mismatched})

    _check_closed_model(groups)
    logger.info(f'open book with q = {q}: H_q(M) = {groups[q]} ({tags[q]})')
    log = {'q': q, 'weinstein_type': page.weinstein_type, 'oracle_check': oracle_check}
    return OpenBookHomology(groups, var, tags, agreement, log)

def open_book_homology_from_variation(page: PageData, var_matrix: IntMatrix | GroupHom) -> OpenBookHomology:
    """
    H_*(M) from a homology-level variation H_q(W, dW) -> H_q(W) given on the normalized generators.
    Degrees above q are completed by duality: H_{2q+1-j}(M) has the free rank of H_j(M) and the torsion of H_{j-1}(M).
    Needs the handle bound.
    """
    page.require_open_book()
    if not handle_bound_holds(page):
        raise StructuralError('a homology-level variation determines H_*(M) only for pages with handles of index <= q')
    q = page.q
    if isinstance(var_matrix, GroupHom):
        var = var_matrix
        if var.domain != page.relative_homology(q) or var.codomain != page.homology(q):
            raise StructuralError(f'the variation must map {page.relative_homology(q)} -> {page.homology(q)}')
    else:
        var = GroupHom(page.relative_homology(q), page.homology(q), var_matrix)

    n = page.manifold_dim
    groups = [page.homology(i) for i in range(q)] + [hom_cokernel(var)]
    tags = [FORMULA] * (q + 1)
    for i in range(q + 1, n + 1):
        j = n - i
        torsion = groups[j - 1].torsion if j >= 1 else ()
        groups.append(FgAbelianGroup(groups[j].free_rank, torsion))
        tags.append(DUALITY)

    _check_closed_model(groups)
    return OpenBookHomology(groups, var, tags, None, {'q': q, 'source': 'variation_matrix'})

@dataclass(frozen=True)
class SkeletonCriterion:
    homology_identity: bool
    cohomology_identity: bool

    @property
    def holds(self) -> bool:
        return self.homology_identity or self.cohomology_identity

    def __bool__(self):
        return self.holds

def _skeleton_action(page: PageData, f: Monodromy) -> ChainMap:
    e = extend_monodromy(page, f)
    return e.restrict_to_skeleton(min(page.q, e.source.top_degree))

def evaluate_skeleton_criterion(page: PageData, f: Monodromy) -> SkeletonCriterion:
    """
    Whether e(f) acts as the identity on H_q and on H^q of the q-skeleton of the double.
    Either one forces var(f) = 0, which is asserted.
    """
    q = page.q
    e = _skeleton_action(page, f)
    result = SkeletonCriterion(hom_is_identity(induced_hom(e, q)), hom_is_identity(induced_cohom(e, q)))
    if result.holds:
        var = variation(page, f)
        if not var.is_zero():
            raise InternalInvariantError('e(f) is the identity on the q-skeleton of the double but var(f) is not zero',
                                         witness = var.matrix.tolist())
    return result

def skeleton_criterion(page: PageData, f: Monodromy) -> bool:
    return evaluate_skeleton_criterion(page, f).holds

def page_cohomology_action(page: PageData, f: Monodromy) -> list[GroupHom]:
    """f^* on H^i(W) for every degree of the page."""
    return [induced_cohom(f.map, i) for i in range(page.complex.top_degree + 1)]

def skeleton_cohomology_action(page: PageData, f: Monodromy) -> list[GroupHom]:
    """e(f)^* on H^i of the q-skeleton of the double, i = 0..q."""
    e = _skeleton_action(page, f)
    return [induced_cohom(e, i) for i in range(e.source.top_degree + 1)]
