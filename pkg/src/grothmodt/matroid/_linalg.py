from functools import reduce
from typing import List, Sequence

from sympy import Matrix, ilcm, igcd

from grothmodt.core import InputError


def to_matrix(rows: Sequence[Sequence[int]], columns: int = None) -> Matrix:
    """
    Turns the integer rows into a sympy matrix, validating the shape.

    :param rows: the rows
    :type rows: Sequence
    :param columns: the number of columns, required if there are no rows
    :type columns: int
    :return: the matrix
    :rtype: Matrix
    """
    if len(rows) == 0:
        if columns is None:
            raise InputError("Number of columns required for an empty matrix")
        return Matrix.zeros(0, columns)
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise InputError("Row %d has %d entries, expected: %d" % (i + 1, len(row), width))
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError("Matrix entries must be integers, got: %s" % str(x))
    if (columns is not None) and (columns != width):
        raise InputError("Expected %d columns, got: %d" % (columns, width))
    return Matrix(rows)


def integer_rank(rows: Sequence[Sequence[int]], columns: int = None) -> int:
    if len(rows) == 0:
        return 0
    return to_matrix(rows, columns).rank()


def column_minor(m: Matrix, columns: Sequence[int]) -> int:
    """
    Determinant of the square submatrix formed by the given columns, by fraction-free
    elimination.

    :param m: the r x n matrix
    :type m: Matrix
    :param columns: the r column indices
    :type columns: Sequence
    :return: the determinant
    :rtype: int
    """
    if m.rows == 0:
        return 1
    return int(m.extract(list(range(m.rows)), list(columns)).det(method="bareiss"))


def integer_kernel_basis(rows: Sequence[Sequence[int]], columns: int) -> List[List[int]]:
    """
    Returns integer vectors spanning the right kernel of the matrix, ie the orthogonal
    complement of its row space. Each vector is scaled to primitive integer entries.

    :param rows: the matrix rows
    :type rows: Sequence
    :param columns: the number of columns
    :type columns: int
    :return: the kernel basis as rows
    :rtype: list
    """
    if len(rows) == 0:
        return [[1 if i == j else 0 for j in range(columns)] for i in range(columns)]
    result = []
    for vec in to_matrix(rows, columns).nullspace():
        denominators = [x.q for x in vec]
        scale = reduce(ilcm, denominators, 1)
        ints = [int(x * scale) for x in vec]
        g = reduce(igcd, [abs(x) for x in ints if x != 0], 0)
        if g > 1:
            ints = [x // g for x in ints]
        result.append(ints)
    return result
