"""
Simplicial and Delta-complex models used as independent oracles for the cellular models.
"""
from itertools import combinations, product
from typing import Callable, Hashable, Iterable, Sequence

from ..zlinalg import IntMatrix
from ..chainkit import ChainComplex

def ordered_chain_complex(simplices: Sequence[Sequence[tuple]], key: Callable[[tuple], Hashable] = tuple) -> ChainComplex:
    """
    Chains of a Delta-complex. simplices[k] lists the k-simplices as ordered vertex tuples;
    key maps any face tuple to the label of the simplex it is identified with.
    d[v_0 .. v_k] = sum_j (-1)^j [v_0 .. ^v_j .. v_k].
    """
    index = [{key(s): n for n, s in enumerate(layer)} for layer in simplices]
    ranks = [len(layer) for layer in simplices]
    boundaries = []
    for k in range(1, len(simplices)):
        d = [[0] * ranks[k] for _ in range(ranks[k-1])]
        for col, s in enumerate(simplices[k]):
            for j in range(len(s)):
                face = s[:j] + s[j+1:]
                d[index[k-1][key(face)]][col] += (-1) ** j
        boundaries.append(IntMatrix(d, rows = ranks[k-1], cols = ranks[k]))
    return ChainComplex(ranks, boundaries)

def simplicial_complex(facets: Iterable[Iterable]) -> ChainComplex:
    """Chains of the simplicial complex generated by facets, simplices ordered by sorted vertices."""
    faces = set()
    for facet in facets:
        facet = tuple(sorted(facet))
        for k in range(1, len(facet) + 1):
            faces.update(combinations(facet, k))
    top = max(len(f) for f in faces) - 1
    layers = [sorted(f for f in faces if len(f) == k + 1) for k in range(top + 1)]
    return ordered_chain_complex(layers)

def simplex_boundary(n: int) -> ChainComplex:
    """S^n as the boundary of the (n+1)-simplex."""
    return simplicial_complex(combinations(range(n + 2), n + 1))

def rp2_six_vertex() -> ChainComplex:
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
              (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    return simplicial_complex(facets)

def torus_seven_vertex() -> ChainComplex:
    facets = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    return simplicial_complex(facets)

def klein_bottle_grid(n: int = 4) -> ChainComplex:
    """
    An n x n grid on the square with (x, 0) ~ (x, n) and (0, y) ~ (n, n - y), each square cut along its diagonal.
    """
    def vertex(i, j):
        if j == n:
            j = 0
        if i == n:
            i, j = 0, (n - j) % n
        return (i, j)

    facets = []
    for i, j in product(range(n), range(n)):
        a, b, c, d = vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1), vertex(i, j + 1)
        facets.append((a, b, c))
        facets.append((a, d, c))
    return simplicial_complex(facets)

def projective_space_delta(n: int) -> ChainComplex:
    """
    RP^n as the boundary of the (n+1)-dimensional cross-polytope modulo the antipodal map.
    A face is a set of signed axes, one per axis; vertices are ordered by axis, which the antipodal map preserves.
    Orbits are labelled by the representative whose first sign is +1.
    """
    def canonical(face: tuple) -> tuple:
        if face and face[0][1] < 0:
            return tuple((axis, -sign) for axis, sign in face)
        return face

    layers = []
    for k in range(n + 1):
        layer = []
        for axes in combinations(range(n + 1), k + 1):
            for signs in product((1, -1), repeat = k):
                layer.append(tuple(zip(axes, (1,) + signs)))
        layers.append(layer)
    return ordered_chain_complex(layers, key = canonical)
