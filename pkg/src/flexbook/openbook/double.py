from dataclasses import dataclass
import logging

from ..zlinalg import IntMatrix
from ..chainkit import ChainComplex, ChainMap, SubcomplexPair
from ..errors import StructuralError
from .page import PageData, Monodromy

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class DoubleData:
    """
    The double DW = W_0 u_Id W_1.
    In each degree the cells are those of W_0 (in page order) followed by the interior cells of W_1.

    embed0, embed1:  chain maps W -> DW onto the two copies (they agree on dW)
    fold:            the retraction DW -> W with fold o embed0 = fold o embed1 = Id
    collapse:        DW -> DW / W_1, identified with the relative chains of (W, dW)
    """
    page: PageData
    complex: ChainComplex
    copy0: SubcomplexPair
    copy1: SubcomplexPair
    seam: SubcomplexPair
    embed0: ChainMap
    embed1: ChainMap
    fold: ChainMap
    collapse: ChainMap

def _copy1_columns(page: PageData, i: int) -> IntMatrix:
    # E1_i : W_i -> DW_i, boundary cells to the shared cells, interior cells to the second block
    C, P = page.complex, page.boundary
    n = C.rank(i)
    N = n + len(P.complement(i))
    slots = [0] * n
    for k in P.sub(i):
        slots[k] = k
    for j, k in enumerate(P.complement(i)):
        slots[k] = n + j
    return IntMatrix.unit_columns(N, slots)

def build_double(page: PageData) -> DoubleData:
    C, P = page.complex, page.boundary
    top = C.top_degree
    ranks = [C.rank(i) + len(P.complement(i)) for i in range(top + 1)]

    E0 = [IntMatrix.unit_columns(ranks[i], range(C.rank(i))) for i in range(top + 1)]
    E1 = [_copy1_columns(page, i) for i in range(top + 1)]

    boundaries = []
    for i in range(1, top + 1):
        d = C.boundary(i)
        boundaries.append(IntMatrix.hstack([E0[i-1] @ d, E1[i-1] @ d.columns_at(P.complement(i))], rows = ranks[i-1]))
    DW = ChainComplex(ranks, boundaries)

    copy0 = SubcomplexPair(DW, [list(range(C.rank(i))) for i in range(top + 1)])
    copy1 = SubcomplexPair(DW, [list(P.sub(i)) + list(range(C.rank(i), ranks[i])) for i in range(top + 1)])
    seam = SubcomplexPair(DW, [list(P.sub(i)) for i in range(top + 1)])

    embed0 = ChainMap(C, DW, E0)
    embed1 = ChainMap(C, DW, E1)
    fold = ChainMap(DW, C, [IntMatrix.hstack([IntMatrix.identity(C.rank(i)), IntMatrix.unit_columns(C.rank(i), P.complement(i))], rows = C.rank(i))
                            for i in range(top + 1)])
    collapse = ChainMap(DW, P.quotient_complex, [IntMatrix.unit_columns(ranks[i], P.complement(i)).T for i in range(top + 1)])

    logger.debug(f'double of a page with ranks {list(C.ranks)}: ranks {ranks}')
    return DoubleData(page, DW, copy0, copy1, seam, embed0, embed1, fold, collapse)

def extend_monodromy(page: PageData, f: Monodromy) -> ChainMap:
    """
    e(f) = f u Id on the double: f on the cells of W_0, the identity on the interior cells of W_1.
    """
    if f.map.source != page.complex:
        raise StructuralError('the monodromy belongs to another page')
    double = page.double
    C = page.complex
    components = []
    for i in range(C.top_degree + 1):
        N = double.complex.rank(i)
        n = C.rank(i)
        on_copy0 = double.embed0.component(i) @ f.component(i)
        on_copy1 = IntMatrix.unit_columns(N, range(n, N))
        components.append(IntMatrix.hstack([on_copy0, on_copy1], rows = N))
    return ChainMap(double.complex, double.complex, components)
