from functools import cached_property
import logging

from ..zlinalg import IntMatrix
from ..abgroup import FgAbelianGroup, groups_isomorphic
from ..chainkit import ChainComplex, ChainMap, SubcomplexPair, homology, cohomology, relative_homology
from ..errors import StructuralError, InputError

logger = logging.getLogger(__name__)

class PageData:
    """
    A cellular model of a page W (dimension 2q) with its binding, the boundary subcomplex dW.

    complex:         chains of W, cells of dW included
    boundary:        the pair (W, dW)
    q:               half-dimension of the page
    weinstein_type:  the page is declared to have handles of index <= q only
    """

    def __init__(self, complex: ChainComplex, boundary: SubcomplexPair | list, q: int, weinstein_type: bool = True):
        if isinstance(q, bool) or not isinstance(q, int) or q < 0:
            raise StructuralError(f'q must be a non-negative integer, got {q!r}')
        if not isinstance(boundary, SubcomplexPair):
            boundary = SubcomplexPair(complex, boundary)
        if boundary.ambient is not complex and boundary.ambient != complex:
            raise StructuralError('the boundary pair does not live on the page complex')

        self.complex = complex
        self.boundary = boundary
        self.q = q
        self.weinstein_type = bool(weinstein_type)

    @property
    def dim(self) -> int:
        return 2 * self.q

    @property
    def manifold_dim(self) -> int:
        """Dimension of the open-book manifold, 2q + 1."""
        return 2 * self.q + 1

    def homology(self, i: int) -> FgAbelianGroup:
        if i > self.complex.top_degree:
            return FgAbelianGroup()
        return homology(self.complex, i)

    def relative_homology(self, i: int) -> FgAbelianGroup:
        if i > self.complex.top_degree:
            return FgAbelianGroup()
        return relative_homology(self.boundary, i)

    def require_open_book(self):
        """
        Raises StructuralError unless the page can carry an open book:
        nonempty binding, connected page, no cells above 2q and, for Weinstein-type pages, the handle bound.
        """
        if self.q < 1:
            raise StructuralError(f'open books need q >= 1, got q = {self.q}')
        if self.boundary.is_empty():
            raise StructuralError('the page has empty boundary: an open book needs a nonempty binding')
        if self.complex.top_degree > self.dim:
            raise StructuralError(f'the page has cells in degree {self.complex.top_degree} > 2q = {self.dim}')
        if homology(self.complex, 0) != FgAbelianGroup(1):
            raise StructuralError(f'the page must be connected, H_0(W) = {homology(self.complex, 0)}')
        if self.weinstein_type and not handle_bound_holds(self):
            raise StructuralError('the page is declared Weinstein-type but its homology violates the bound on handle indices')

    @cached_property
    def double(self):
        from .double import build_double
        return build_double(self)

    ## JSON CODEC
    def to_json(self) -> dict:
        return {'complex': self.complex.to_json(), 'sub_indices': [list(s) for s in self.boundary.sub_indices],
                'q': self.q, 'weinstein_type': self.weinstein_type}

    @classmethod
    def from_json(cls, obj) -> 'PageData':
        if not isinstance(obj, dict):
            raise InputError(detail = 'a page must be an object with complex, sub_indices and q')
        if 'complex' not in obj:
            raise InputError('complex', 'missing')
        try:
            complex = ChainComplex.from_json(obj['complex'])
        except InputError as err:
            raise err.at('complex')
        boundary = SubcomplexPair.from_json(complex, {'sub_indices': obj.get('sub_indices', [])})
        q = obj.get('q')
        if isinstance(q, bool) or not isinstance(q, int) or q < 0:
            raise InputError('q', f'expected a non-negative integer, got {q!r}')
        weinstein_type = obj.get('weinstein_type', True)
        if not isinstance(weinstein_type, bool):
            raise InputError('weinstein_type', 'expected true or false')
        return cls(complex, boundary, q, weinstein_type)

class Monodromy:
    """
    Chain-level monodromy of a page: a chain self-map of W that is the identity on the cells of dW.
    """

    def __init__(self, page: PageData, map: ChainMap | list[IntMatrix]):
        if not isinstance(map, ChainMap):
            map = ChainMap(page.complex, page.complex, map)
        if map.source != page.complex or map.target != page.complex:
            raise StructuralError('the monodromy must be a chain self-map of the page complex')

        C = page.complex
        for i in range(C.top_degree + 1):
            sub = page.boundary.sub(i)
            if map.component(i).columns_at(sub) != IntMatrix.unit_columns(C.rank(i), sub):
                raise StructuralError(f'the monodromy is not the identity on the boundary cells of degree {i}')

        self.page = page
        self.map = map

    @classmethod
    def identity(cls, page: PageData) -> 'Monodromy':
        return cls(page, ChainMap.identity(page.complex))

    def component(self, i: int) -> IntMatrix:
        return self.map.component(i)

    def to_json(self) -> dict:
        return {'chain_map': self.map.to_json()}

    @classmethod
    def from_json(cls, page: PageData, obj) -> 'Monodromy':
        if not isinstance(obj, dict) or 'chain_map' not in obj:
            raise InputError(detail = 'a chain-level monodromy must be an object {"chain_map": [matrix, ...]}')
        raw = obj['chain_map']
        if not isinstance(raw, list):
            raise InputError('chain_map', 'expected one matrix per degree')
        components = []
        for k, m in enumerate(raw):
            try:
                components.append(IntMatrix.from_json(m))
            except InputError as err:
                raise err.at(f'chain_map[{k}]')
        try:
            return cls(page, components)
        except StructuralError as err:
            raise InputError('chain_map', err.detail)

def handle_bound_holds(page: PageData) -> bool:
    """
    Homological shadow of "handles of index <= q": H_i(W) = 0 for i > q and H_i(W, dW) = 0 for i < q.
    """
    C = page.complex
    for i in range(C.top_degree + 1):
        if i > page.q and not homology(C, i).is_trivial():
            logger.debug(f'handle bound fails: H_{i}(W) = {homology(C, i)}')
            return False
        if i < page.q and not relative_homology(page.boundary, i).is_trivial():
            logger.debug(f'handle bound fails: H_{i}(W, dW) = {relative_homology(page.boundary, i)}')
            return False
    return True

def duality_check(page: PageData) -> dict[int, bool]:
    """
    For each degree i = 0..2q, whether H_i(W, dW) and H^{2q-i}(W) are isomorphic groups.
    Only the isomorphism type is compared; no duality map is chosen.
    """
    result = {}
    for i in range(page.dim + 1):
        rel = page.relative_homology(i)
        j = page.dim - i
        cohom = cohomology(page.complex, j) if j <= page.complex.top_degree else FgAbelianGroup()
        result[i] = groups_isomorphic(rel, cohom)
    return result
