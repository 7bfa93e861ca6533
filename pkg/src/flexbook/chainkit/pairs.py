from functools import cached_property
from typing import Sequence
import logging

from ..zlinalg import IntMatrix
from ..abgroup import FgAbelianGroup, GroupHom
from ..errors import StructuralError, InputError
from .chain_complex import ChainComplex, homology
from .chain_map import ChainMap, induced_hom

logger = logging.getLogger(__name__)

class SubcomplexPair:
    """
    A subcomplex A of X spanned by a subset of the basis cells in each degree.
    sub_indices[i] lists the basis elements of X_i that span A_i; missing degrees are empty.
    """

    def __init__(self, ambient: ChainComplex, sub_indices: Sequence[Sequence[int]] = ()):
        sub_indices = [list(s) for s in sub_indices]
        if len(sub_indices) > ambient.top_degree + 1:
            raise StructuralError(f'sub_indices has {len(sub_indices)} degrees, the complex only {ambient.top_degree + 1}')
        sub_indices += [[] for _ in range(ambient.top_degree + 1 - len(sub_indices))]

        for i, idx in enumerate(sub_indices):
            if len(set(idx)) != len(idx) or any(not 0 <= k < ambient.rank(i) for k in idx):
                raise StructuralError(f'sub_indices[{i}] = {idx} are not distinct cells of degree {i} (rank {ambient.rank(i)})')

        self.ambient = ambient
        self.sub_indices = tuple(tuple(sorted(idx)) for idx in sub_indices)
        self.complement_indices = tuple(tuple(k for k in range(ambient.rank(i)) if k not in set(self.sub_indices[i]))
                                        for i in range(ambient.top_degree + 1))

        for i in range(1, ambient.top_degree + 1):
            d = ambient.boundary(i)
            leak = d.submatrix(self.complement_indices[i-1], self.sub_indices[i])
            if not leak.is_zero():
                raise StructuralError(f'the subcomplex is not closed under the boundary in degree {i}')

    def sub(self, i: int) -> tuple[int, ...]:
        return self.sub_indices[i] if 0 <= i <= self.ambient.top_degree else ()

    def complement(self, i: int) -> tuple[int, ...]:
        return self.complement_indices[i] if 0 <= i <= self.ambient.top_degree else ()

    def is_empty(self) -> bool:
        return not any(self.sub_indices)

    @cached_property
    def subcomplex(self) -> ChainComplex:
        X = self.ambient
        return ChainComplex([len(s) for s in self.sub_indices],
                            [X.boundary(i).submatrix(self.sub(i-1), self.sub(i)) for i in range(1, X.top_degree + 1)])

    @cached_property
    def quotient_complex(self) -> ChainComplex:
        """X / A, on the cells of X not in A."""
        X = self.ambient
        return ChainComplex([len(c) for c in self.complement_indices],
                            [X.boundary(i).submatrix(self.complement(i-1), self.complement(i)) for i in range(1, X.top_degree + 1)])

    @cached_property
    def inclusion(self) -> ChainMap:
        X = self.ambient
        return ChainMap(self.subcomplex, X, [IntMatrix.unit_columns(X.rank(i), self.sub(i)) for i in range(X.top_degree + 1)])

    @cached_property
    def projection(self) -> ChainMap:
        X = self.ambient
        return ChainMap(X, self.quotient_complex, [IntMatrix.unit_columns(X.rank(i), self.complement(i)).T for i in range(X.top_degree + 1)])

    def lift(self, i: int, chains: IntMatrix) -> IntMatrix:
        """Quotient chains of degree i as ambient chains supported off A."""
        return IntMatrix.unit_columns(self.ambient.rank(i), self.complement(i)) @ chains

    def restrict(self, i: int, chains: IntMatrix) -> IntMatrix:
        """Coordinates on the A-cells of ambient chains of degree i (rows of the other cells are dropped)."""
        return chains.rows_at(self.sub(i))

    def supported_on_sub(self, i: int, chains: IntMatrix) -> bool:
        return chains.rows_at(self.complement(i)).is_zero()

    ## JSON CODEC
    def to_json(self) -> dict:
        return {'sub_indices': [list(s) for s in self.sub_indices]}

    @classmethod
    def from_json(cls, ambient: ChainComplex, obj) -> 'SubcomplexPair':
        raw = obj.get('sub_indices', []) if isinstance(obj, dict) else obj
        if not isinstance(raw, list) or not all(isinstance(s, list) for s in raw):
            raise InputError('sub_indices', 'expected a list of index lists, one per degree')
        if any(isinstance(k, bool) or not isinstance(k, int) for s in raw for k in s):
            raise InputError('sub_indices', 'indices must be integers')
        try:
            return cls(ambient, raw)
        except StructuralError as err:
            raise InputError('sub_indices', err.detail)

def relative_homology(P: SubcomplexPair, i: int) -> FgAbelianGroup:
    return homology(P.quotient_complex, i)

def relative_induced_hom(f: ChainMap, P: SubcomplexPair, Q: SubcomplexPair, i: int) -> GroupHom:
    """
    The map H_i(X, A) -> H_i(Y, B) induced by a chain map f : X -> Y with f(A) inside B.
    """
    if f.source != P.ambient or f.target != Q.ambient:
        raise StructuralError('the chain map does not run between the ambient complexes of the pairs')
    X = P.ambient
    components = []
    for k in range(X.top_degree + 1):
        fk = f.component(k)
        if not fk.submatrix(Q.complement(k), P.sub(k)).is_zero():
            raise StructuralError(f'the chain map does not send the subcomplex into the target subcomplex in degree {k}')
        components.append(fk.submatrix(Q.complement(k), P.complement(k)))
    quotient_map = ChainMap(P.quotient_complex, Q.quotient_complex, components)
    return induced_hom(quotient_map, i)

def connecting_hom(P: SubcomplexPair, i: int) -> GroupHom:
    """
    The boundary map H_i(X, A) -> H_{i-1}(A) of the pair (zero when i = 0).
    """
    rel = P.quotient_complex.homology_model(i)
    A = P.subcomplex
    if i == 0:
        return GroupHom.zero(rel.group, FgAbelianGroup())
    sub_model = A.homology_model(i - 1)
    chains = P.lift(i, rel.representatives())
    boundary = P.ambient.boundary(i) @ chains
    if not P.supported_on_sub(i - 1, boundary):
        raise StructuralError('relative cycle lifts have boundary outside the subcomplex')
    matrix = sub_model.classify(P.restrict(i - 1, boundary))
    return GroupHom(rel.group, sub_model.group, matrix)

def long_exact_sequence(P: SubcomplexPair, i: int) -> tuple[GroupHom, GroupHom, GroupHom]:
    """
    H_i(A) -> H_i(X) -> H_i(X, A) -> H_{i-1}(A), the degree-i stretch of the sequence of the pair.
    """
    return induced_hom(P.inclusion, i), induced_hom(P.projection, i), connecting_hom(P, i)
