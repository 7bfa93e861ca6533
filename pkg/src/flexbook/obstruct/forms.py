from dataclasses import dataclass

from ..zlinalg import IntMatrix, is_unimodular
from ..errors import StructuralError

@dataclass(frozen=True)
class BilinearForm:
    """
    Gram matrix J of a (-1)^q-symmetric form on the free generators of H^q.
    """
    matrix: IntMatrix
    q_parity: int

    def __post_init__(self):
        if not self.matrix.is_square():
            raise StructuralError(f'a Gram matrix must be square, got {self.matrix.rows}x{self.matrix.cols}')
        object.__setattr__(self, 'q_parity', self.q_parity % 2)
        if self.matrix.T != self.symmetry * self.matrix:
            raise StructuralError(f'the Gram matrix is not {"skew-" if self.q_parity else ""}symmetric')

    @property
    def symmetry(self) -> int:
        return -1 if self.q_parity else 1

    @property
    def size(self) -> int:
        return self.matrix.rows

    def to_json(self) -> dict:
        return {'matrix': self.matrix.to_json(), 'q_parity': self.q_parity}

def hyperbolic_form(g: int, q_parity: int) -> BilinearForm:
    """
    The form of #_g (S^q x S^q): g diagonal blocks [[0, 1], [(-1)^q, 0]].
    """
    if g < 1:
        raise StructuralError(f'the genus must be at least 1, got {g}')
    sign = -1 if q_parity % 2 else 1
    block = IntMatrix([[0, 1], [sign, 0]])
    zero = IntMatrix.zeros(2, 2)
    rows = [[block if j == k else zero for k in range(g)] for j in range(g)]
    return BilinearForm(IntMatrix.block(rows), q_parity)

def preserves_form(A: IntMatrix, J: BilinearForm) -> bool:
    """True iff A is unimodular and A^T J A = J."""
    if A.shape != (J.size, J.size):
        raise StructuralError(f'a {A.rows}x{A.cols} matrix cannot act on a form of rank {J.size}')
    return A.T @ J.matrix @ A == J.matrix and is_unimodular(A)
