from .int_matrix import IntMatrix, matrix_multiply, as_int
from .smith import SmithForm, smith_normal_form
from .lattice import kernel_basis, cokernel_presentation, is_unimodular, determinant, rational_rank, solve_integer, lattice_contains
