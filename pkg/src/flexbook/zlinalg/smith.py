from dataclasses import dataclass, field
import logging

import numpy as np

from .int_matrix import IntMatrix, _object_eye

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class SmithForm:
    """
    Smith normal form D = U @ A @ V with unimodular certificates.
    U_inv and V_inv are the exact inverses of U and V, accumulated alongside them.
    """
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    rank: int
    invariant_factors: tuple[int, ...]
    U_inv: IntMatrix = field(repr=False)
    V_inv: IntMatrix = field(repr=False)

    @property
    def diagonal(self) -> list[int]:
        n = min(self.D.rows, self.D.cols)
        return [self.D.entry(i, i) for i in range(n)]

def _first_min_pivot(block: np.ndarray) -> tuple[int, int] | None:
    # row-major first occurrence of the smallest nonzero absolute value
    best = None
    best_abs = None
    for i in range(block.shape[0]):
        for j in range(block.shape[1]):
            value = block[i, j]
            if value != 0 and (best_abs is None or abs(value) < best_abs):
                best, best_abs = (i, j), abs(value)
                if best_abs == 1:
                    return best
    return best

def _first_not_divisible(block: np.ndarray, p: int) -> int | None:
    for i in range(block.shape[0]):
        for j in range(block.shape[1]):
            if block[i, j] % p != 0:
                return i
    return None

def smith_normal_form(A: IntMatrix) -> SmithForm:
    """
    Computes the Smith normal form of A by elimination with minimal-absolute-value pivots.
    Returns U, D, V (and their inverses) with U @ A @ V = D, D rectangular-diagonal with
    positive entries d_1 | d_2 | ... | d_r followed by zeros.
    Empty matrices are fine and give empty certificates.
    """
    m, n = A.shape
    D = np.array(A.data, dtype=object, copy=True)
    U = _object_eye(m)
    Ui = _object_eye(m)
    V = _object_eye(n)
    Vi = _object_eye(n)

    rank = 0
    for t in range(min(m, n)):
        while True:
            pos = _first_min_pivot(D[t:, t:])
            if pos is None:
                break
            i, j = pos[0] + t, pos[1] + t

            # move the pivot to (t, t)
            if i != t:
                D[[t, i], :] = D[[i, t], :]
                U[[t, i], :] = U[[i, t], :]
                Ui[:, [t, i]] = Ui[:, [i, t]]
            if j != t:
                D[:, [t, j]] = D[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]
                Vi[[t, j], :] = Vi[[j, t], :]
            p = D[t, t]

            # clear the pivot column: row_i -= q * row_t
            if t + 1 < m:
                q = D[t+1:, t] // p
                if np.any(q != 0):
                    D[t+1:, :] = D[t+1:, :] - q[:, None] * D[t, :][None, :]
                    U[t+1:, :] = U[t+1:, :] - q[:, None] * U[t, :][None, :]
                    Ui[:, t] = Ui[:, t] + Ui[:, t+1:] @ q

            # clear the pivot row: col_j -= q * col_t
            if t + 1 < n:
                q = D[t, t+1:] // p
                if np.any(q != 0):
                    D[:, t+1:] = D[:, t+1:] - D[:, t][:, None] * q[None, :]
                    V[:, t+1:] = V[:, t+1:] - V[:, t][:, None] * q[None, :]
                    Vi[t, :] = Vi[t, :] + q @ Vi[t+1:, :]

            if np.any(D[t+1:, t] != 0) or np.any(D[t, t+1:] != 0):
                # nonzero remainders are smaller than |p|: pick again
                continue

            k = _first_not_divisible(D[t+1:, t+1:], p)
            if k is not None:
                # row_t += row_k brings an entry not divisible by p into the pivot row
                k += t + 1
                D[t, :] = D[t, :] + D[k, :]
                U[t, :] = U[t, :] + U[k, :]
                Ui[:, k] = Ui[:, k] - Ui[:, t]
                continue
            break

        if D[t, t] == 0:
            break
        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]
            Ui[:, t] = -Ui[:, t]
        rank += 1

    factors = tuple(int(D[i, i]) for i in range(rank))
    logger.debug(f'SNF of a {m}x{n} matrix: rank {rank}, factors {factors}')

    return SmithForm(U = IntMatrix._wrap(U), D = IntMatrix._wrap(D), V = IntMatrix._wrap(V),
                     rank = rank, invariant_factors = factors,
                     U_inv = IntMatrix._wrap(Ui), V_inv = IntMatrix._wrap(Vi))
