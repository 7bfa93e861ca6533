"""
Cellular chain complexes of classical spaces and pages.
Pages carry their binding as a subcomplex; cell orders are fixed and documented per builder.
"""

from ..zlinalg import IntMatrix
from ..chainkit import ChainComplex
from ..openbook import PageData, Monodromy
from ..errors import StructuralError

def _zero_boundaries(ranks: list[int]) -> list[IntMatrix]:
    return [IntMatrix.zeros(ranks[i-1], ranks[i]) for i in range(1, len(ranks))]

## CLOSED SPACES
def circle() -> ChainComplex:
    return ChainComplex([1, 1], [IntMatrix([[0]])])

def sphere(n: int) -> ChainComplex:
    """S^n with one 0-cell and one n-cell (two 0-cells for n = 0)."""
    if n < 0:
        raise StructuralError(f'no sphere of dimension {n}')
    if n == 0:
        return ChainComplex([2])
    ranks = [1] + [0] * (n - 1) + [1]
    return ChainComplex(ranks, _zero_boundaries(ranks))

def real_projective_space(n: int) -> ChainComplex:
    """RP^n with one cell per degree, d_k = 1 + (-1)^k."""
    return ChainComplex([1] * (n + 1), [IntMatrix([[1 + (-1) ** k]]) for k in range(1, n + 1)])

def lens_space_complex(dim: int, p: int) -> ChainComplex:
    """The standard cell structure of L^dim(p): d_k = p for even k, 0 for odd k."""
    if dim % 2 == 0:
        raise StructuralError(f'lens spaces have odd dimension, got {dim}')
    return ChainComplex([1] * (dim + 1), [IntMatrix([[p if k % 2 == 0 else 0]]) for k in range(1, dim + 1)])

def torus() -> ChainComplex:
    return ChainComplex([1, 2, 1], [IntMatrix([[0, 0]]), IntMatrix([[0], [0]])])

def klein_bottle() -> ChainComplex:
    """Word a b a b^-1: d_2 = (2, 0)."""
    return ChainComplex([1, 2, 1], [IntMatrix([[0, 0]]), IntMatrix([[2], [0]])])

## PAGES
def interval_page() -> PageData:
    """D^1: 0-cells [a, b], 1-cell [e], de = b - a, boundary {a, b}."""
    C = ChainComplex([2, 1], [IntMatrix([[-1], [1]])])
    return PageData(C, [[0, 1], []], q = 0, weinstein_type = False)

def disk_page(q: int = 1) -> PageData:
    """
    D^{2q}: a 0-cell v, a (2q-1)-cell s and a 2q-cell D with dD = s. The binding S^{2q-1} is {v, s}.
    """
    if q < 1:
        raise StructuralError(f'disk pages need q >= 1, got {q}')
    ranks = [0] * (2 * q + 1)
    ranks[0] += 1
    ranks[2*q - 1] += 1
    ranks[2*q] += 1
    boundaries = _zero_boundaries(ranks)
    boundaries[2*q - 1] = IntMatrix([[1]])
    sub = [[] for _ in ranks]
    sub[0] = [0]
    sub[2*q - 1] = [0]
    return PageData(ChainComplex(ranks, boundaries), sub, q, weinstein_type = True)

def cylinder_page(q: int = 1) -> PageData:
    """
    S^{2q-1} x I. For q = 1 (the annulus): C_0 = [a, b], C_1 = [alpha, beta, gamma], C_2 = [D] with
    d gamma = b - a and dD = alpha - beta; the binding is {a, b, alpha, beta}.
    For q >= 2: C_0 = [v0, v1], C_1 = [e], C_{2q-1} = [s0, s1], C_{2q} = [D] with de = v1 - v0, dD = s0 - s1.
    Only the annulus satisfies the handle bound.
    """
    if q < 1:
        raise StructuralError(f'cylinder pages need q >= 1, got q = {q}')
    if q == 1:
        C = ChainComplex([2, 3, 1], [IntMatrix([[0, 0, -1], [0, 0, 1]]), IntMatrix([[1], [-1], [0]])])
        return PageData(C, [[0, 1], [0, 1], []], 1, weinstein_type = True)

    ranks = [0] * (2 * q + 1)
    ranks[0], ranks[1], ranks[2*q - 1], ranks[2*q] = 2, 1, 2, 1
    boundaries = _zero_boundaries(ranks)
    boundaries[0] = IntMatrix([[-1], [1]])
    boundaries[2*q - 1] = IntMatrix([[1], [-1]])
    sub = [[] for _ in ranks]
    sub[0] = [0, 1]
    sub[2*q - 1] = [0, 1]
    return PageData(ChainComplex(ranks, boundaries), sub, q, weinstein_type = False)

def annulus_page() -> PageData:
    return cylinder_page(1)

def surface_page(genus: int, boundary_components: int) -> PageData:
    """
    Compact orientable surface with one vertex v_k and one loop c_k per boundary circle.
    C_0 = [v_1 .. v_b], C_1 = [c_1 .. c_b, e_2 .. e_b, a_1, b_1 .. a_g, b_g], C_2 = [D]
    with d e_k = v_k - v_1 and dD = c_1 - c_2 - ... - c_b. The binding is {v_k, c_k}.
    """
    g, b = genus, boundary_components
    if g < 0 or b < 1:
        raise StructuralError(f'surface pages need genus >= 0 and at least one boundary circle, got ({g}, {b})')
    n1 = b + (b - 1) + 2 * g
    d1 = [[0] * n1 for _ in range(b)]
    for k in range(1, b):
        column = b + k - 1
        d1[0][column] = -1
        d1[k][column] = 1
    d2 = [[0] for _ in range(n1)]
    d2[0][0] = 1
    for k in range(1, b):
        d2[k][0] = -1
    C = ChainComplex([b, n1, 1], [IntMatrix(d1, rows = b, cols = n1), IntMatrix(d2, rows = n1, cols = 1)])
    return PageData(C, [list(range(b)), list(range(b)), []], 1, weinstein_type = True)

def sphere_product_page(genus: int, q: int) -> PageData:
    """
    #_g (S^q x S^q) minus an open disk: a 0-cell v, q-cells x_1 .. x_{2g}, a (2q-1)-cell s and a 2q-cell D with dD = s.
    The binding S^{2q-1} is {v, s}. For q = 1 the degree-1 cells are [x_1 .. x_{2g}, s].
    """
    if genus < 1 or q < 1:
        raise StructuralError(f'sphere product pages need genus >= 1 and q >= 1, got ({genus}, {q})')
    ranks = [0] * (2 * q + 1)
    ranks[0] += 1
    ranks[q] += 2 * genus
    ranks[2*q - 1] += 1
    ranks[2*q] += 1
    s = ranks[2*q - 1] - 1
    boundaries = _zero_boundaries(ranks)
    d_top = [[0] for _ in range(ranks[2*q - 1])]
    d_top[s][0] = 1
    boundaries[2*q - 1] = IntMatrix(d_top, rows = ranks[2*q - 1], cols = 1)
    sub = [[] for _ in ranks]
    sub[0] = [0]
    sub[2*q - 1] = [s]
    return PageData(ChainComplex(ranks, boundaries), sub, q, weinstein_type = True)

## MONODROMIES
def twist_monodromy(page: PageData, cycle: int, arc: int, turns: int) -> Monodromy:
    """
    The chain map sending the degree-q cell `arc` to arc + turns * cycle and fixing every other cell.
    """
    q = page.q
    n = page.complex.rank(q)
    components = [IntMatrix.identity(r) for r in page.complex.ranks]
    shear = [[0] * n for _ in range(n)]
    shear[cycle][arc] = turns
    components[q] = components[q] + IntMatrix(shear, rows = n, cols = n)
    return Monodromy(page, components)

def annulus_twist(turns: int) -> tuple[PageData, Monodromy]:
    """The annulus with the turns-fold Dehn twist gamma -> gamma + turns * alpha."""
    page = annulus_page()
    return page, twist_monodromy(page, cycle = 0, arc = 2, turns = turns)
