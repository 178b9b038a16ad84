from typing import Sequence

from exactalg.rational_function import RationalFunction
from loopalg.factors import ConstantInvertible, DiagonalHom, LoopProduct
from loopalg.matrices import RatMatrix
from utils.exceptions import InvalidInputError


def s1_invariance_check(h: LoopProduct, gamma: DiagonalHom) -> bool:
    """
    H(z, alpha lambda) = H(z, lambda) gamma(alpha) for symbolic alpha:
    the lambda^j coefficient may only be nonzero in columns s with e_s = j
    """
    if gamma.n != h.n:
        raise InvalidInputError(f"gamma has size {gamma.n}, loop has size {h.n}")
    for power, matrix in h.expand().items():
        for _, s, _ in matrix.nonzero_entries():
            if gamma.exponents[s] != power:
                return False
    return True


def cpn_frame(f: Sequence[RationalFunction], i: int) -> LoopProduct:
    """
    [f^(n-1) ... f' f] diag(lambda^2, ..., lambda^2, lambda, 1, ..., 1)
    with n-i-1 squares and i trailing ones
    """
    n = len(f)
    if n < 2:
        raise InvalidInputError("CP^(n-1) frame needs a vector of length at least 2")
    if not 0 <= i <= n - 1:
        raise InvalidInputError(f"Frame index i={i} outside 0..{n - 1}")

    derivatives = [list(f)]
    for _ in range(n - 1):
        derivatives.append([e.derivative() for e in derivatives[-1]])
    columns = list(reversed(derivatives))
    wronskian = RatMatrix([[columns[c][r] for c in range(n)] for r in range(n)])

    try:
        frame = ConstantInvertible(wronskian)
    except InvalidInputError as e:
        raise InvalidInputError(
            "Degenerate f: f, f', ..., f^(n-1) are linearly dependent"
        ) from e

    exponents = [2] * (n - i - 1) + [1] + [0] * i
    return LoopProduct(n, [frame, DiagonalHom(exponents)])
