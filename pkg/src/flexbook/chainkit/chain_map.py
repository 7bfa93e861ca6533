from typing import Sequence
import logging

from ..zlinalg import IntMatrix
from ..abgroup import GroupHom
from ..errors import StructuralError
from .chain_complex import ChainComplex

logger = logging.getLogger(__name__)

class ChainMap:
    """
    A degree-preserving family of matrices f_i : source_i -> target_i commuting with the boundaries.
    components[i] is f_i for i = 0..source.top_degree; higher degrees are zero.
    """

    def __init__(self, source: ChainComplex, target: ChainComplex, components: Sequence[IntMatrix]):
        components = list(components)
        if len(components) != source.top_degree + 1:
            raise StructuralError(f'expected {source.top_degree + 1} components, got {len(components)}')
        for i, f in enumerate(components):
            if f.shape != (target.rank(i), source.rank(i)):
                raise StructuralError(f'component {i} must have shape ({target.rank(i)}, {source.rank(i)}), got {f.shape}')

        self.source = source
        self.target = target
        self.components = tuple(components)

        for i in range(1, source.top_degree + 1):
            if target.boundary(i) @ self.component(i) != self.component(i-1) @ source.boundary(i):
                raise StructuralError(f'the map does not commute with the boundaries in degree {i}')

    def component(self, i: int) -> IntMatrix:
        if 0 <= i <= self.source.top_degree:
            return self.components[i]
        return IntMatrix.zeros(self.target.rank(i), self.source.rank(i))

    ## CONSTRUCTORS
    @classmethod
    def identity(cls, C: ChainComplex) -> 'ChainMap':
        return cls(C, C, [IntMatrix.identity(r) for r in C.ranks])

    @classmethod
    def zero(cls, source: ChainComplex, target: ChainComplex) -> 'ChainMap':
        return cls(source, target, [IntMatrix.zeros(target.rank(i), source.rank(i)) for i in range(source.top_degree + 1)])

    ## ARITHMETIC
    def compose(self, other: 'ChainMap') -> 'ChainMap':
        """self after other."""
        if other.target != self.source:
            raise StructuralError('cannot compose chain maps: target and source differ')
        return ChainMap(other.source, self.target,
                        [self.component(i) @ other.component(i) for i in range(other.source.top_degree + 1)])

    def __matmul__(self, other: 'ChainMap') -> 'ChainMap':
        return self.compose(other)

    def __add__(self, other: 'ChainMap') -> 'ChainMap':
        if self.source != other.source or self.target != other.target:
            raise StructuralError('cannot add chain maps with different source or target')
        return ChainMap(self.source, self.target, [a + b for a, b in zip(self.components, other.components)])

    def perturb(self, homotopy: Sequence[IntMatrix]) -> 'ChainMap':
        """
        f + d h + h d for a chain homotopy h, where homotopy[i] : source_i -> target_{i+1}.
        Missing trailing components are zero.
        """
        top = self.source.top_degree
        h = list(homotopy) + [None] * (top + 1 - len(homotopy))
        def h_at(i):
            if 0 <= i <= top and h[i] is not None:
                if h[i].shape != (self.target.rank(i+1), self.source.rank(i)):
                    raise StructuralError(f'homotopy component {i} must have shape ({self.target.rank(i+1)}, {self.source.rank(i)}), got {h[i].shape}')
                return h[i]
            return IntMatrix.zeros(self.target.rank(i+1), self.source.rank(i))

        components = [self.component(i) + self.target.boundary(i+1) @ h_at(i) + h_at(i-1) @ self.source.boundary(i)
                      for i in range(top + 1)]
        return ChainMap(self.source, self.target, components)

    def restrict_to_skeleton(self, k: int) -> 'ChainMap':
        from .chain_complex import skeleton
        source, target = skeleton(self.source, k), skeleton(self.target, min(k, self.target.top_degree))
        return ChainMap(source, target, self.components[:k+1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.components == other.components

    def __hash__(self):
        return hash((self.source, self.target, self.components))

    ## JSON CODEC
    def to_json(self) -> list:
        return [f.to_json() for f in self.components]

def induced_hom(f: ChainMap, i: int) -> GroupHom:
    """
    f_* : H_i(source) -> H_i(target) on the normalized generators.
    """
    src = f.source.homology_model(i)
    tgt = f.target.homology_model(i)
    matrix = tgt.classify(f.component(i) @ src.representatives())
    return GroupHom(src.group, tgt.group, matrix)

def induced_cohom(f: ChainMap, i: int) -> GroupHom:
    """
    f^* : H^i(target) -> H^i(source), a cochain phi going to phi o f_i.
    """
    src = f.target.cohomology_model(i)
    tgt = f.source.cohomology_model(i)
    matrix = tgt.classify(f.component(i).T @ src.representatives())
    return GroupHom(src.group, tgt.group, matrix)

def mapping_cone(f: ChainMap) -> ChainComplex:
    """
    cone_i = target_i + source_{i-1} with boundary [[d_target, f_{i-1}], [0, -d_source]].
    """
    S, T = f.source, f.target
    top = max(T.top_degree, S.top_degree + 1)
    ranks = [T.rank(i) + S.rank(i-1) for i in range(top + 1)]
    boundaries = []
    for i in range(1, top + 1):
        boundaries.append(IntMatrix.block([
            [T.boundary(i), f.component(i-1)],
            [IntMatrix.zeros(S.rank(i-2), T.rank(i)), -S.boundary(i-1)],
        ]))
    logger.debug(f'mapping cone with ranks {ranks}')
    return ChainComplex(ranks, boundaries)
