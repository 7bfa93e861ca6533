from typing import Sequence

from ..abgroup import FgAbelianGroup
from ..errors import StructuralError

def lens_space_homology(dim: int, p: int) -> list[FgAbelianGroup]:
    """
    H_*(L^dim(p)) for the lens space S^dim / Z_p: Z in degrees 0 and dim, Z/p in odd degrees below dim.
    p = 1 gives the sphere, p = 2 real projective space.
    """
    if dim < 1 or dim % 2 == 0:
        raise StructuralError(f'lens spaces have odd dimension, got {dim}')
    if p < 1:
        raise StructuralError(f'the order of a lens space must be positive, got {p}')
    groups = []
    for i in range(dim + 1):
        if i == 0 or i == dim:
            groups.append(FgAbelianGroup(1))
        elif i % 2 == 1:
            groups.append(FgAbelianGroup(0, (p,)))
        else:
            groups.append(FgAbelianGroup())
    return groups

def connected_sum_homology(summands: Sequence[Sequence[FgAbelianGroup]]) -> list[FgAbelianGroup]:
    """
    H_* of a connected sum of closed connected oriented manifolds of the same dimension:
    Z in degrees 0 and top, direct sums in between.
    """
    if not summands:
        raise StructuralError('a connected sum needs at least one summand')
    dims = {len(h) - 1 for h in summands}
    if len(dims) != 1:
        raise StructuralError(f'summands have different dimensions {sorted(dims)}')
    dim = dims.pop()
    groups = [FgAbelianGroup(1)]
    for i in range(1, dim):
        total = FgAbelianGroup()
        for h in summands:
            total = total.direct_sum(h[i])
        groups.append(total)
    if dim > 0:
        groups.append(FgAbelianGroup(1))
    return groups
