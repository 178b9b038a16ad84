"""
Matrix algebra over Q(i)(z) on sympy DomainMatrix
matrices are sequences of rows of RationalFunction; nothing is mutated in place
"""

from typing import List, Sequence, Tuple

from sympy import Poly
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from exactalg.rational_function import RationalFunction, z
from utils.exceptions import InvalidInputError

Row = List[RationalFunction]
Matrix = List[Row]

FIELD = QQ_I.frac_field(z)


def to_field(e: RationalFunction):
    return FIELD.from_sympy(e.num.as_expr() / e.den.as_expr())


def from_field(element) -> RationalFunction:
    return RationalFunction(
        Poly(element.numer.as_expr(), z, domain=QQ_I),
        Poly(element.denom.as_expr(), z, domain=QQ_I),
    )


def to_domain_matrix(rows: Sequence[Sequence[RationalFunction]]) -> DomainMatrix:
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    if any(len(row) != n_cols for row in rows):
        raise InvalidInputError("Rows of unequal length")
    return DomainMatrix([[to_field(e) for e in row] for row in rows], (n_rows, n_cols), FIELD)


def from_domain_matrix(matrix: DomainMatrix) -> Matrix:
    return [[from_field(e) for e in row] for row in matrix.to_list()]


def rref(rows: Sequence[Sequence[RationalFunction]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form (pivot entries 1) and the pivot columns; zero rows dropped"""
    if not rows:
        return [], []
    reduced, pivots = to_domain_matrix(rows).rref()
    return from_domain_matrix(reduced)[: len(pivots)], list(pivots)


def rank(rows: Sequence[Sequence[RationalFunction]]) -> int:
    if not rows:
        return 0
    return to_domain_matrix(rows).rank()


def in_span(vector: Sequence[RationalFunction], basis: Sequence[Sequence[RationalFunction]]) -> bool:
    """vector lies in the row span of the independent rows `basis`"""
    if all(e.is_zero for e in vector):
        return True
    return rank(list(basis) + [list(vector)]) == len(basis)


def matmul(a: Sequence[Sequence[RationalFunction]], b: Sequence[Sequence[RationalFunction]]) -> Matrix:
    if not a or not b:
        return [[] for _ in a]
    if len(a[0]) != len(b):
        raise InvalidInputError(f"Cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    return from_domain_matrix(to_domain_matrix(a) * to_domain_matrix(b))


def inverse(matrix: Sequence[Sequence[RationalFunction]]) -> Matrix:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise InvalidInputError("Only square matrices can be inverted")
    m = to_domain_matrix(matrix)
    if m.rank() < n:
        raise InvalidInputError("Matrix is singular over Q(i)(z)")
    return from_domain_matrix(m.inv())


def determinant(matrix: Sequence[Sequence[RationalFunction]]) -> RationalFunction:
    """ZERO for singular input"""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise InvalidInputError("Only square matrices have a determinant")
    if n == 0:
        return RationalFunction.one()
    return from_field(to_domain_matrix(matrix).det())
