from typing import Iterable, Optional, Sequence
import numpy as np

from ..errors import StructuralError, InputError

def as_int(value) -> int:
    """
    Returns value as a Python int. Accepts ints, integral numpy scalars and decimal strings.
    """
    if isinstance(value, bool):
        raise StructuralError(f'boolean {value!r} is not an integer entry')
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise StructuralError(f'"{value}" is not a decimal integer')
    raise StructuralError(f'{value!r} of type {type(value).__name__} is not an integer entry')

def _object_zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)

def _object_eye(n: int) -> np.ndarray:
    data = _object_zeros(n, n)
    for i in range(n):
        data[i, i] = 1
    return data

class IntMatrix:
    """
    An exact integer matrix.
    Entries are Python ints held in a read-only numpy array of dtype object, so every operation is exact at any size.
    Empty shapes (0 rows or 0 columns) are legal and stand for maps between zero modules.
    """

    def __init__(self, entries: Iterable[Iterable] = (), rows: Optional[int] = None, cols: Optional[int] = None):
        if isinstance(entries, IntMatrix):
            data = entries._data.copy()
        elif isinstance(entries, np.ndarray):
            if entries.ndim != 2:
                raise StructuralError(f'expected a 2-dimensional array, got shape {entries.shape}')
            data = _object_zeros(*entries.shape)
            for idx, value in np.ndenumerate(entries):
                data[idx] = as_int(value)
        else:
            row_list = [list(row) for row in entries]
            nrows = len(row_list) if rows is None else rows
            ncols = (len(row_list[0]) if row_list else 0) if cols is None else cols
            if len(row_list) != nrows:
                raise StructuralError(f'expected {nrows} rows, got {len(row_list)}')
            data = _object_zeros(nrows, ncols)
            for i, row in enumerate(row_list):
                if len(row) != ncols:
                    raise StructuralError(f'row {i} has {len(row)} entries, expected {ncols}')
                for j, value in enumerate(row):
                    data[i, j] = as_int(value)

        if rows is not None and data.shape[0] != rows or cols is not None and data.shape[1] != cols:
            raise StructuralError(f'matrix has shape {data.shape}, expected ({rows}, {cols})')

        data.flags.writeable = False
        self._data = data

    @classmethod
    def _wrap(cls, data: np.ndarray) -> 'IntMatrix':
        # data must already be a 2d object array of Python ints
        new = cls.__new__(cls)
        data = np.array(data, dtype=object, copy=True)
        if data.ndim != 2:
            raise StructuralError(f'expected a 2-dimensional array, got shape {data.shape}')
        data.flags.writeable = False
        new._data = data
        return new

    ## CONSTRUCTORS
    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls._wrap(_object_zeros(rows, cols))

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls._wrap(_object_eye(n))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: Optional[int] = None, cols: Optional[int] = None) -> 'IntMatrix':
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = _object_zeros(rows, cols)
        for i, value in enumerate(values):
            data[i, i] = as_int(value)
        return cls._wrap(data)

    @classmethod
    def column_vector(cls, values: Sequence[int]) -> 'IntMatrix':
        return cls([[v] for v in values], rows = len(values), cols = 1)

    @classmethod
    def unit_columns(cls, n: int, indices: Sequence[int]) -> 'IntMatrix':
        """
        The n x len(indices) matrix whose k-th column is the standard basis vector e_{indices[k]}.
        """
        data = _object_zeros(n, len(indices))
        for k, i in enumerate(indices):
            data[i, k] = 1
        return cls._wrap(data)

    @classmethod
    def hstack(cls, blocks: Sequence['IntMatrix'], rows: Optional[int] = None) -> 'IntMatrix':
        if not blocks:
            return cls.zeros(rows or 0, 0)
        nrows = blocks[0].rows
        for block in blocks:
            if block.rows != nrows:
                raise StructuralError(f'cannot stack horizontally blocks with {block.rows} and {nrows} rows')
        return cls._wrap(np.concatenate([b._data for b in blocks], axis = 1))

    @classmethod
    def vstack(cls, blocks: Sequence['IntMatrix'], cols: Optional[int] = None) -> 'IntMatrix':
        if not blocks:
            return cls.zeros(0, cols or 0)
        ncols = blocks[0].cols
        for block in blocks:
            if block.cols != ncols:
                raise StructuralError(f'cannot stack vertically blocks with {block.cols} and {ncols} columns')
        return cls._wrap(np.concatenate([b._data for b in blocks], axis = 0))

    @classmethod
    def block(cls, grid: Sequence[Sequence['IntMatrix']]) -> 'IntMatrix':
        return cls.vstack([cls.hstack(row) for row in grid])

    ## PROPERTIES
    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the underlying object array."""
        return self._data

    @property
    def T(self) -> 'IntMatrix':
        return IntMatrix._wrap(self._data.T)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not np.any(self._data != 0)

    def entry(self, i: int, j: int) -> int:
        return self._data[i, j]

    def tolist(self) -> list[list[int]]:
        return [[self._data[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def column(self, j: int) -> 'IntMatrix':
        return IntMatrix._wrap(self._data[:, j:j+1])

    def columns_at(self, indices: Sequence[int]) -> 'IntMatrix':
        return IntMatrix._wrap(self._data[:, list(indices)].reshape(self.rows, len(indices)))

    def rows_at(self, indices: Sequence[int]) -> 'IntMatrix':
        return IntMatrix._wrap(self._data[list(indices), :].reshape(len(indices), self.cols))

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> 'IntMatrix':
        return self.rows_at(row_indices).columns_at(col_indices)

    def flat(self) -> list[int]:
        """Entries of a column (or row) vector as a list."""
        return list(self._data.reshape(-1))

    ## ARITHMETIC
    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        return matrix_multiply(self, other)

    def __add__(self, other: 'IntMatrix') -> 'IntMatrix':
        self._check_same_shape(other, 'add')
        return IntMatrix._wrap(self._data + other._data)

    def __sub__(self, other: 'IntMatrix') -> 'IntMatrix':
        self._check_same_shape(other, 'subtract')
        return IntMatrix._wrap(self._data - other._data)

    def __neg__(self) -> 'IntMatrix':
        return IntMatrix._wrap(-self._data)

    def __mul__(self, scalar: int) -> 'IntMatrix':
        return IntMatrix._wrap(self._data * as_int(scalar))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'IntMatrix':
        if not self.is_square():
            raise StructuralError(f'cannot take powers of a {self.rows}x{self.cols} matrix')
        if n < 0:
            raise StructuralError('negative powers are not supported')
        result = IntMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def _check_same_shape(self, other: 'IntMatrix', what: str):
        if self.shape != other.shape:
            raise StructuralError(f'cannot {what} matrices of shapes {self.shape} and {other.shape}')

    ## COMPARISON
    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and not np.any(self._data != other._data)

    def __hash__(self):
        return hash((self.shape, tuple(self._data.reshape(-1))))

    def __repr__(self):
        return f'IntMatrix({self.tolist()}, rows={self.rows}, cols={self.cols})'

    def __str__(self):
        if self.rows == 0 or self.cols == 0:
            return f'[{self.rows}x{self.cols} empty]'
        strings = [[str(v) for v in row] for row in self.tolist()]
        width = max(len(s) for row in strings for s in row)
        return '\n'.join('[' + ' '.join(s.rjust(width) for s in row) + ']' for row in strings)

    ## JSON CODEC
    def to_json(self) -> dict:
        return {'rows': self.rows, 'cols': self.cols,
                'entries': [[str(v) for v in row] for row in self.tolist()]}

    @classmethod
    def from_json(cls, obj) -> 'IntMatrix':
        """
        Decodes {"rows": r, "cols": c, "entries": [[...], ...]}.
        A bare list of rows is accepted too. Entries may be decimal strings or JSON integers.
        """
        if isinstance(obj, list):
            obj = {'entries': obj}
        if not isinstance(obj, dict) or 'entries' not in obj:
            raise InputError('entries', 'a matrix needs an "entries" list of rows')

        entries = obj['entries']
        if not isinstance(entries, list) or not all(isinstance(row, list) for row in entries):
            raise InputError('entries', 'entries must be a list of rows')
        shape = {}
        for key, default in (('rows', len(entries)), ('cols', len(entries[0]) if entries else 0)):
            try:
                shape[key] = as_int(obj.get(key, default))
            except StructuralError as err:
                raise InputError(key, err.detail)
            if shape[key] < 0:
                raise InputError(key, f'negative size {shape[key]}')
        try:
            return cls(entries, rows = shape['rows'], cols = shape['cols'])
        except StructuralError as err:
            raise InputError('entries', err.detail)

def matrix_multiply(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    """
    Exact product A @ B.
    """
    if A.cols != B.rows:
        raise StructuralError(f'cannot multiply a {A.rows}x{A.cols} matrix by a {B.rows}x{B.cols} matrix')
    if A.cols == 0:
        return IntMatrix.zeros(A.rows, B.cols)
    return IntMatrix._wrap(A.data @ B.data)
