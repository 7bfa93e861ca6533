from typing import Sequence
import logging

from ..zlinalg import IntMatrix, smith_normal_form
from ..abgroup import FgAbelianGroup, LatticeQuotient
from ..errors import StructuralError, InputError

logger = logging.getLogger(__name__)

class SubquotientModel:
    """
    ker(out_map) / im(in_map) with explicit cycle coordinates.

    cycles:        n x k matrix, a basis of ker(out_map) (saturated)
    cycle_coords:  k x n left inverse of cycles, exact on cycles
    quotient:      the quotient of Z^k by the boundaries written in cycle coordinates
    """

    def __init__(self, out_map: IntMatrix, in_map: IntMatrix):
        if out_map.cols != in_map.rows:
            raise StructuralError(f'maps of shapes {out_map.shape} and {in_map.shape} do not compose')
        smith = smith_normal_form(out_map)
        n = out_map.cols
        kept = range(smith.rank, n)
        self.cycles = smith.V.columns_at(kept)
        self.cycle_coords = smith.V_inv.rows_at(kept)
        self.quotient = LatticeQuotient(self.cycle_coords @ in_map)
        self.group: FgAbelianGroup = self.quotient.group
        self._out_map = out_map

    def is_cycle(self, chains: IntMatrix) -> bool:
        return (self._out_map @ chains).is_zero()

    def classify(self, chains: IntMatrix, check: bool = True) -> IntMatrix:
        """
        Normalized coordinates of the homology classes of the columns of chains (which must be cycles).
        """
        if check and not self.is_cycle(chains):
            raise StructuralError('cannot classify chains that are not cycles')
        return self.quotient.classify(self.cycle_coords @ chains)

    def representatives(self) -> IntMatrix:
        """Cycles representing the normalized generators, one per column."""
        return self.cycles @ self.quotient.section

    def representative(self, coords: IntMatrix) -> IntMatrix:
        return self.cycles @ self.quotient.representative(coords)

class ChainComplex:
    """
    A bounded chain complex of free modules C_0, ..., C_top with boundary matrices.
    boundaries[i - 1] is the matrix of d_i : C_i -> C_{i-1}, of shape ranks[i-1] x ranks[i].
    Degrees outside 0..top are zero modules.
    """

    def __init__(self, ranks: Sequence[int], boundaries: Sequence[IntMatrix] = ()):
        ranks = [int(r) for r in ranks] or [0]
        if any(r < 0 for r in ranks):
            raise StructuralError(f'ranks must be non-negative, got {ranks}')
        boundaries = list(boundaries)
        if len(boundaries) == len(ranks) and boundaries:
            # a leading d_0 : C_0 -> 0 is accepted and dropped
            d0 = boundaries.pop(0)
            if d0.shape != (0, ranks[0]):
                raise StructuralError(f'd_0 must have shape (0, {ranks[0]}), got {d0.shape}')
        if len(boundaries) != len(ranks) - 1:
            raise StructuralError(f'{len(ranks)} ranks need {len(ranks) - 1} boundary matrices, got {len(boundaries)}')

        for i, d in enumerate(boundaries, start = 1):
            if d.shape != (ranks[i-1], ranks[i]):
                raise StructuralError(f'd_{i} must have shape ({ranks[i-1]}, {ranks[i]}), got {d.shape}')
        for i in range(2, len(ranks)):
            if not (boundaries[i-2] @ boundaries[i-1]).is_zero():
                raise StructuralError(f'd_{i-1} @ d_{i} is not zero: not a chain complex')

        self.ranks = tuple(ranks)
        self.boundaries = tuple(boundaries)
        self._homology_models: dict[int, SubquotientModel] = {}
        self._cohomology_models: dict[int, SubquotientModel] = {}

    ## STRUCTURE
    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 1

    def rank(self, i: int) -> int:
        return self.ranks[i] if 0 <= i <= self.top_degree else 0

    def boundary(self, i: int) -> IntMatrix:
        """d_i : C_i -> C_{i-1}; a zero matrix outside 1..top."""
        if 1 <= i <= self.top_degree:
            return self.boundaries[i-1]
        return IntMatrix.zeros(self.rank(i-1), self.rank(i))

    def check_degree(self, i: int):
        if not 0 <= i <= self.top_degree:
            raise StructuralError(f'degree {i} is outside 0..{self.top_degree}')

    def total_rank(self) -> int:
        return sum(self.ranks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self.ranks == other.ranks and self.boundaries == other.boundaries

    def __hash__(self):
        return hash((self.ranks, self.boundaries))

    def __repr__(self):
        return f'ChainComplex(ranks={list(self.ranks)})'

    ## HOMOLOGY
    def homology_model(self, i: int) -> SubquotientModel:
        self.check_degree(i)
        if i not in self._homology_models:
            self._homology_models[i] = SubquotientModel(self.boundary(i), self.boundary(i+1))
        return self._homology_models[i]

    def cohomology_model(self, i: int) -> SubquotientModel:
        self.check_degree(i)
        if i not in self._cohomology_models:
            self._cohomology_models[i] = SubquotientModel(self.boundary(i+1).T, self.boundary(i).T)
        return self._cohomology_models[i]

    ## JSON CODEC
    def to_json(self) -> dict:
        return {'ranks': list(self.ranks), 'boundaries': [d.to_json() for d in self.boundaries]}

    @classmethod
    def from_json(cls, obj) -> 'ChainComplex':
        if not isinstance(obj, dict):
            raise InputError(detail = 'a chain complex must be an object {"ranks": [...], "boundaries": [...]}')
        ranks = obj.get('ranks', [])
        if not isinstance(ranks, list) or any(isinstance(r, bool) or not isinstance(r, int) or r < 0 for r in ranks):
            raise InputError('ranks', 'expected a list of non-negative integers')
        raw = obj.get('boundaries', [])
        if not isinstance(raw, list):
            raise InputError('boundaries', 'expected a list of matrices')
        boundaries = []
        for k, d in enumerate(raw):
            try:
                boundaries.append(IntMatrix.from_json(d))
            except InputError as err:
                raise err.at(f'boundaries[{k}]')
        try:
            return cls(ranks, boundaries)
        except StructuralError as err:
            raise InputError('boundaries', err.detail)

def homology(C: ChainComplex, i: int) -> FgAbelianGroup:
    return C.homology_model(i).group

def cohomology(C: ChainComplex, i: int) -> FgAbelianGroup:
    return C.cohomology_model(i).group

def all_homology(C: ChainComplex) -> list[FgAbelianGroup]:
    return [homology(C, i) for i in range(C.top_degree + 1)]

def all_cohomology(C: ChainComplex) -> list[FgAbelianGroup]:
    return [cohomology(C, i) for i in range(C.top_degree + 1)]

def euler_characteristic(C: ChainComplex) -> int:
    return sum((-1) ** i * r for i, r in enumerate(C.ranks))

def direct_sum(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    top = max(C.top_degree, D.top_degree)
    ranks = [C.rank(i) + D.rank(i) for i in range(top + 1)]
    boundaries = []
    for i in range(1, top + 1):
        dc, dd = C.boundary(i), D.boundary(i)
        boundaries.append(IntMatrix.block([[dc, IntMatrix.zeros(dc.rows, dd.cols)],
                                           [IntMatrix.zeros(dd.rows, dc.cols), dd]]))
    return ChainComplex(ranks, boundaries)

def skeleton(C: ChainComplex, k: int) -> ChainComplex:
    """
    Truncation to degrees 0..k.
    """
    C.check_degree(k)
    return ChainComplex(C.ranks[:k+1], C.boundaries[:k])
