"""
Seeded generators of matrices, complexes, pages and monodromies for property tests.
Every generator takes a random.Random instance so that runs are reproducible.
"""
import random
from typing import Optional, Sequence

from ..zlinalg import IntMatrix, kernel_basis
from ..chainkit import ChainComplex, ChainMap, SubcomplexPair, direct_sum
from ..openbook import PageData, Monodromy
from . import spaces

MAX_PAGE_CELLS = 12

def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 9) -> IntMatrix:
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)], rows = rows, cols = cols)

def _elementary_pair(rng: random.Random, n: int, steps: int, forbidden: Optional[Sequence[tuple[set, set]]] = None,
                     bound: int = 2) -> tuple[list[list[int]], list[list[int]]]:
    # P and its inverse as products of row additions; (targets, sources) pairs in forbidden are never combined
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    Pinv = [[int(i == j) for j in range(n)] for i in range(n)]
    if n < 2:
        return P, Pinv
    for _ in range(steps):
        a, b = rng.sample(range(n), 2)
        if forbidden and any(b in targets and a in sources for targets, sources in forbidden):
            continue
        k = rng.choice([x for x in range(-bound, bound + 1) if x != 0])
        # P <- (I + k e_b e_a^T) P ; Pinv <- Pinv (I - k e_b e_a^T)
        P[b] = [x + k * y for x, y in zip(P[b], P[a])]
        for row in Pinv:
            row[a] -= k * row[b]
    return P, Pinv

def random_unimodular(rng: random.Random, n: int, steps: Optional[int] = None) -> tuple[IntMatrix, IntMatrix]:
    """A random unimodular matrix and its inverse."""
    steps = 3 * n if steps is None else steps
    P, Pinv = _elementary_pair(rng, n, steps)
    return IntMatrix(P, rows = n, cols = n), IntMatrix(Pinv, rows = n, cols = n)

def change_basis(C: ChainComplex, P: Sequence[IntMatrix], Pinv: Sequence[IntMatrix]) -> ChainComplex:
    """The complex with boundaries P_{i-1} d_i P_i^{-1}."""
    return ChainComplex(C.ranks, [P[i-1] @ C.boundary(i) @ Pinv[i] for i in range(1, C.top_degree + 1)])

def random_complex(rng: random.Random) -> ChainComplex:
    """
    A direct sum of one or two classical complexes in a random basis.
    """
    pool = [spaces.circle, spaces.torus, spaces.klein_bottle,
            lambda: spaces.sphere(rng.randint(1, 3)), lambda: spaces.real_projective_space(rng.randint(2, 4)),
            lambda: spaces.lens_space_complex(3, rng.randint(2, 5))]
    C = rng.choice(pool)()
    if rng.random() < 0.5:
        C = direct_sum(C, rng.choice(pool)())
    pairs = [random_unimodular(rng, r) for r in C.ranks]
    return change_basis(C, [p for p, _ in pairs], [pinv for _, pinv in pairs])

def random_chain_homotopy(rng: random.Random, C: ChainComplex, skip: Sequence[Sequence[int]] = (),
                          zero_degrees: Sequence[int] = (), bound: int = 2) -> list[IntMatrix]:
    """
    h_i : C_i -> C_{i+1} with random entries; the columns listed in skip[i] and the degrees in zero_degrees are zero.
    """
    h = []
    for i in range(C.top_degree + 1):
        rows, cols = C.rank(i + 1), C.rank(i)
        skipped = set(skip[i]) if i < len(skip) else set()
        if i in zero_degrees:
            h.append(IntMatrix.zeros(rows, cols))
            continue
        h.append(IntMatrix([[0 if j in skipped else rng.randint(-bound, bound) for j in range(cols)] for _ in range(rows)],
                           rows = rows, cols = cols))
    return h

## PAGES
def page_families(max_cells: int = MAX_PAGE_CELLS, max_q: int = 3) -> list[PageData]:
    """Every page model from the builders with at most max_cells cells and q <= max_q."""
    pages = []
    for q in range(1, max_q + 1):
        pages.append(spaces.disk_page(q))
        pages.append(spaces.cylinder_page(q))
        g = 1
        while 2 * g + 3 <= max_cells:
            pages.append(spaces.sphere_product_page(g, q))
            g += 1
    for g in range(0, 5):
        for b in range(1, 5):
            if 3 * b + 2 * g <= max_cells and (g, b) != (0, 1):
                pages.append(spaces.surface_page(g, b))
    return [p for p in pages if p.complex.total_rank() <= max_cells]

def change_page_basis(rng: random.Random, page: PageData, steps: int = 6) -> tuple[PageData, list[IntMatrix], list[IntMatrix]]:
    """
    The same page in a random basis that keeps the span of the binding cells: returns the page and the per-degree P, P^-1.
    """
    C, B = page.complex, page.boundary
    Ps, Pinvs = [], []
    for i, r in enumerate(C.ranks):
        # never add a binding row into an interior row
        forbidden = [(set(B.complement(i)), set(B.sub(i)))]
        P, Pinv = _elementary_pair(rng, r, steps, forbidden)
        Ps.append(IntMatrix(P, rows = r, cols = r))
        Pinvs.append(IntMatrix(Pinv, rows = r, cols = r))
    new_complex = change_basis(C, Ps, Pinvs)
    return PageData(new_complex, [list(s) for s in B.sub_indices], page.q, page.weinstein_type), Ps, Pinvs

def transport_monodromy(f: Monodromy, page: PageData, P: Sequence[IntMatrix], Pinv: Sequence[IntMatrix]) -> Monodromy:
    return Monodromy(page, [P[i] @ f.component(i) @ Pinv[i] for i in range(page.complex.top_degree + 1)])

def random_page(rng: random.Random, max_cells: int = MAX_PAGE_CELLS, max_q: int = 3) -> PageData:
    page = rng.choice(page_families(max_cells, max_q))
    page, _, _ = change_page_basis(rng, page)
    return page

def random_monodromy(rng: random.Random, page: PageData, degrees: Optional[Sequence[int]] = None, bound: int = 2) -> Monodromy:
    """
    f = Id + N with N_i = Z_i X_i A_i: Z_i spans the cycles of C_i, the rows of A_i annihilate the boundaries
    d_{i+1} and the binding cells, X_i is random. Such f is a chain map fixing the binding.
    """
    C, B = page.complex, page.boundary
    degrees = range(C.top_degree + 1) if degrees is None else degrees
    components = [IntMatrix.identity(r) for r in C.ranks]
    for i in degrees:
        n = C.rank(i)
        if n == 0:
            continue
        Z = kernel_basis(C.boundary(i))
        blocked = IntMatrix.hstack([C.boundary(i + 1), IntMatrix.unit_columns(n, B.sub(i))], rows = n)
        A = kernel_basis(blocked.T).T
        if Z.cols == 0 or A.rows == 0:
            continue
        X = IntMatrix([[rng.randint(-bound, bound) for _ in range(A.rows)] for _ in range(Z.cols)], rows = Z.cols, cols = A.rows)
        components[i] = components[i] + Z @ X @ A
    return Monodromy(page, components)

def homotopic_monodromy(rng: random.Random, f: Monodromy, zero_degrees: Sequence[int] = (), bound: int = 2) -> Monodromy:
    """
    f + dh + hd for a random homotopy h vanishing on the binding cells.
    """
    page = f.page
    h = random_chain_homotopy(rng, page.complex, page.boundary.sub_indices, zero_degrees, bound)
    return Monodromy(page, f.map.perturb(h))
