from typing import Optional
from math import gcd
import logging

from .int_matrix import IntMatrix
from .smith import SmithForm, smith_normal_form
from ..errors import StructuralError

logger = logging.getLogger(__name__)

def kernel_basis(A: IntMatrix) -> IntMatrix:
    """
    Columns form a basis of the integer kernel of A : Z^cols -> Z^rows.
    The basis is saturated: it is the tail of the unimodular column certificate V.
    """
    smith = smith_normal_form(A)
    return smith.V.columns_at(range(smith.rank, A.cols))

def cokernel_presentation(A: IntMatrix):
    """
    Z^rows / image(A) as a normalized FgAbelianGroup.
    """
    from ..abgroup import FgAbelianGroup

    smith = smith_normal_form(A)
    torsion = [d for d in smith.invariant_factors if d > 1]
    return FgAbelianGroup(A.rows - smith.rank, tuple(torsion))

def is_unimodular(A: IntMatrix) -> bool:
    if not A.is_square():
        raise StructuralError(f'is_unimodular needs a square matrix, got {A.rows}x{A.cols}')
    return abs(determinant(A)) == 1

def determinant(A: IntMatrix) -> int:
    """
    Determinant by Bareiss fraction-free elimination. Independent of the Smith normal form code.
    """
    if not A.is_square():
        raise StructuralError(f'determinant needs a square matrix, got {A.rows}x{A.cols}')
    n = A.rows
    if n == 0:
        return 1
    M = A.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n-1][n-1]

def rational_rank(A: IntMatrix) -> int:
    """
    Rank over the rationals by fraction-free row reduction, rows kept primitive.
    """
    rows = [list(r) for r in A.tolist()]
    rank = 0
    for col in range(A.cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            a = rows[i][col]
            if a == 0:
                continue
            new = [p * x - a * y for x, y in zip(rows[i], rows[rank])]
            g = 0
            for x in new:
                g = gcd(g, x)
            rows[i] = [x // g for x in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank

def solve_integer(R: IntMatrix, v: IntMatrix, smith: Optional[SmithForm] = None) -> Optional[IntMatrix]:
    """
    Returns an integer matrix X with R @ X = v, or None if some column of v is not in the lattice spanned by the columns of R.
    A precomputed Smith form of R can be passed to skip the elimination.
    """
    if R.rows != v.rows:
        raise StructuralError(f'cannot solve a system with {R.rows} equations for a right-hand side with {v.rows} rows')
    if smith is None:
        smith = smith_normal_form(R)

    w = smith.U @ v
    rank = smith.rank
    y_rows = []
    for i in range(R.cols):
        if i < rank:
            d = smith.invariant_factors[i]
            row = w.rows_at([i]).flat()
            if any(x % d for x in row):
                return None
            y_rows.append([x // d for x in row])
        else:
            y_rows.append([0] * v.cols)
    if rank < R.rows and not w.rows_at(range(rank, R.rows)).is_zero():
        return None

    y = IntMatrix(y_rows, rows = R.cols, cols = v.cols)
    return smith.V @ y

def lattice_contains(R: IntMatrix, v: IntMatrix, smith: Optional[SmithForm] = None) -> bool:
    """
    True if every column of v lies in the column lattice of R.
    """
    return solve_integer(R, v, smith) is not None
