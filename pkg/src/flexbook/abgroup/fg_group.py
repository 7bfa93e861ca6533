from dataclasses import dataclass
from functools import cached_property
from typing import Sequence
import math

from ..zlinalg import IntMatrix, smith_normal_form, as_int
from ..errors import StructuralError, InputError

@dataclass(frozen=True)
class FgAbelianGroup:
    """
    Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k in invariant-factor form (t_1 | t_2 | ...).
    Generators are ordered free first, then torsion; each torsion generator has order t_i.
    Any list of positive torsion orders is accepted and normalized (Z/2 + Z/3 becomes Z/6).
    """
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise StructuralError(f'free rank must be non-negative, got {self.free_rank}')
        orders = [as_int(t) for t in self.torsion]
        if any(t <= 0 for t in orders):
            raise StructuralError(f'torsion orders must be positive, got {orders}')
        object.__setattr__(self, 'torsion', _normalize_torsion(orders))

    ## PROPERTIES
    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def rank(self) -> int:
        return self.free_rank

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def order(self) -> int | float:
        if self.free_rank > 0:
            return math.inf
        return math.prod(self.torsion)

    @cached_property
    def relation_matrix(self) -> IntMatrix:
        """
        ngens x len(torsion) matrix whose columns are the relations t_k * g_{free_rank + k}.
        """
        k = len(self.torsion)
        return IntMatrix.vstack([IntMatrix.zeros(self.free_rank, k), IntMatrix.diagonal(list(self.torsion))])

    def reduce(self, coords: IntMatrix) -> IntMatrix:
        """
        Canonical representative of coordinate columns: torsion coordinates taken mod their order.
        """
        if coords.rows != self.ngens:
            raise StructuralError(f'coordinates with {coords.rows} rows do not fit a group with {self.ngens} generators')
        if not self.torsion:
            return coords
        rows = coords.tolist()
        for k, t in enumerate(self.torsion):
            r = self.free_rank + k
            rows[r] = [x % t for x in rows[r]]
        return IntMatrix(rows, rows = coords.rows, cols = coords.cols)

    def contains_zero(self, coords: IntMatrix) -> bool:
        """True if every column of coords is the zero element."""
        return self.reduce(coords).is_zero()

    def direct_sum(self, other: 'FgAbelianGroup') -> 'FgAbelianGroup':
        return FgAbelianGroup(self.free_rank + other.free_rank, self.torsion + other.torsion)

    __add__ = direct_sum

    ## REPRESENTATION
    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append('Z')
        elif self.free_rank > 1:
            parts.append(f'Z^{self.free_rank}')
        parts.extend(f'Z/{t}' for t in self.torsion)
        return ' + '.join(parts) if parts else '0'

    def to_json(self) -> dict:
        return {'free_rank': self.free_rank, 'torsion': [str(t) for t in self.torsion]}

    @classmethod
    def from_json(cls, obj) -> 'FgAbelianGroup':
        if not isinstance(obj, dict):
            raise InputError(detail = 'a group must be an object {"free_rank": r, "torsion": [...]}')
        free_rank = obj.get('free_rank', 0)
        torsion = obj.get('torsion', [])
        if isinstance(free_rank, bool) or not isinstance(free_rank, int) or free_rank < 0:
            raise InputError('free_rank', f'expected a non-negative integer, got {free_rank!r}')
        if not isinstance(torsion, list):
            raise InputError('torsion', 'expected a list of orders')
        try:
            return cls(free_rank, tuple(as_int(t) for t in torsion))
        except StructuralError as err:
            raise InputError('torsion', err.detail)

def _normalize_torsion(orders: Sequence[int]) -> tuple[int, ...]:
    if not orders:
        return ()
    smith = smith_normal_form(IntMatrix.diagonal(list(orders)))
    return tuple(d for d in smith.invariant_factors if d > 1)

def from_presentation(generators: int, relations: IntMatrix) -> FgAbelianGroup:
    """
    Z^generators / (column span of relations), normalized.
    """
    if relations.rows != generators:
        raise StructuralError(f'relations have {relations.rows} rows, expected one per generator ({generators})')
    smith = smith_normal_form(relations)
    return FgAbelianGroup(generators - smith.rank, tuple(d for d in smith.invariant_factors if d > 1))

def is_torsion_free(G: FgAbelianGroup) -> bool:
    return len(G.torsion) == 0

def groups_isomorphic(G: FgAbelianGroup, H: FgAbelianGroup) -> bool:
    return G.free_rank == H.free_rank and G.torsion == H.torsion
