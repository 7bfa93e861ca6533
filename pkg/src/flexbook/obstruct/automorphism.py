import logging
import math

import sympy

from ..zlinalg import IntMatrix, is_unimodular
from ..errors import StructuralError

logger = logging.getLogger(__name__)

INFINITE_ORDER = math.inf

_x = sympy.Symbol('x')

def _cyclotomic_index(factor: sympy.Poly) -> int | None:
    # n with Phi_n = factor; phi(n) = deg forces n <= 2 deg^2 + 2
    degree = factor.degree()
    for n in range(1, 2 * degree * degree + 3):
        if sympy.totient(n) != degree:
            continue
        if sympy.Poly(sympy.cyclotomic_poly(n, _x), _x) == factor:
            return n
    return None

def _evaluate(coeffs: list[int], A: IntMatrix) -> IntMatrix:
    # Horner scheme, coefficients from the leading one down
    result = IntMatrix.zeros(A.rows, A.cols)
    identity = IntMatrix.identity(A.rows)
    for c in coeffs:
        result = result @ A + c * identity
    return result

def automorphism_order(A: IntMatrix) -> int | float:
    """
    Order of a unimodular matrix, or INFINITE_ORDER.
    A has finite order iff its minimal polynomial is a product of distinct cyclotomic polynomials;
    the order is then the lcm of their indices.
    """
    if not A.is_square():
        raise StructuralError(f'automorphism order needs a square matrix, got {A.rows}x{A.cols}')
    if not is_unimodular(A):
        raise StructuralError('automorphism order needs a unimodular matrix')
    if A.rows == 0:
        return 1

    charpoly = sympy.Matrix(A.tolist()).charpoly(_x)
    _, factors = sympy.factor_list(charpoly.as_expr(), _x)

    indices = []
    radical = sympy.Poly(1, _x)
    for expr, _ in factors:
        factor = sympy.Poly(expr, _x)
        if factor.LC() < 0:
            factor = -factor
        n = _cyclotomic_index(factor)
        if n is None:
            logger.debug(f'non-cyclotomic factor {factor.as_expr()}: infinite order')
            return INFINITE_ORDER
        indices.append(n)
        radical = radical * factor

    # the minimal polynomial must be squarefree: it divides the radical iff radical(A) = 0
    if not _evaluate([int(c) for c in radical.all_coeffs()], A).is_zero():
        logger.debug('minimal polynomial is not squarefree: infinite order')
        return INFINITE_ORDER

    order = math.lcm(*indices)
    logger.debug(f'cyclotomic indices {indices}: order {order}')
    return order
