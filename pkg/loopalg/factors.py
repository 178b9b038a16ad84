from functools import cached_property, reduce
from typing import List, Optional, Sequence, Tuple

from exactalg.linear_algebra import inverse as matrix_inverse
from exactalg.rational_function import GaussianRational, RationalFunction
from loopalg.matrices import LaurentMatrix, RatMatrix
from loopalg.series import check_nilpotent, dexp_series, nilpotent_exp
from utils.exceptions import InvalidInputError


class LoopFactor:
    """One structurally invertible factor of a LoopProduct"""

    kind: str = ""
    n: int

    def expand(self) -> LaurentMatrix:
        raise NotImplementedError

    def expand_inverse(self) -> LaurentMatrix:
        raise NotImplementedError

    def inverse(self) -> "LoopFactor":
        raise NotImplementedError

    def maurer_cartan(self) -> LaurentMatrix:
        """F^-1 F'"""
        raise NotImplementedError

    def conjugate(self, x: LaurentMatrix) -> LaurentMatrix:
        """F^-1 X F"""
        return self.expand_inverse() * x * self.expand()

    def scaled(self, alpha: GaussianRational) -> List["LoopFactor"]:
        """Factors of F(alpha * lambda)"""
        raise NotImplementedError

    def is_z_independent(self) -> bool:
        raise NotImplementedError


class ExpNilpotent(LoopFactor):
    kind = "exp"

    def __init__(self, b: LaurentMatrix):
        check_nilpotent(b)
        self.b = b
        self.n = b.n

    @cached_property
    def _expanded(self) -> LaurentMatrix:
        return nilpotent_exp(self.b)

    def expand(self) -> LaurentMatrix:
        return self._expanded

    def expand_inverse(self) -> LaurentMatrix:
        return nilpotent_exp(-self.b)

    def inverse(self) -> "ExpNilpotent":
        return ExpNilpotent(-self.b)

    def maurer_cartan(self) -> LaurentMatrix:
        return dexp_series(self.b)

    def scaled(self, alpha: GaussianRational) -> List[LoopFactor]:
        return [ExpNilpotent(self.b.substitute_scaled(alpha))]

    def is_z_independent(self) -> bool:
        return self.b.derivative().is_zero

    def __repr__(self):
        return f"ExpNilpotent({self.b!r})"


class DiagonalHom(LoopFactor):
    """gamma(lambda) = diag(lambda^e_1, ..., lambda^e_n)"""

    kind = "diag"

    def __init__(self, exponents: Sequence[int]):
        if not exponents:
            raise InvalidInputError("DiagonalHom needs at least one exponent")
        self.exponents: Tuple[int, ...] = tuple(int(e) for e in exponents)
        self.n = len(self.exponents)

    def expand(self) -> LaurentMatrix:
        return LaurentMatrix.diagonal_hom(self.exponents)

    def expand_inverse(self) -> LaurentMatrix:
        return LaurentMatrix.diagonal_hom([-e for e in self.exponents])

    def inverse(self) -> "DiagonalHom":
        return DiagonalHom([-e for e in self.exponents])

    def maurer_cartan(self) -> LaurentMatrix:
        return LaurentMatrix.zero(self.n)

    def conjugate(self, x: LaurentMatrix) -> LaurentMatrix:
        return x.conjugate_diagonal([-e for e in self.exponents])

    def scaled(self, alpha: GaussianRational) -> List[LoopFactor]:
        a = RationalFunction.constant(alpha)
        scale = [a**e for e in self.exponents]
        if all(s == 1 for s in scale):
            return [self]
        return [ConstantInvertible(RatMatrix.diagonal(scale)), self]

    def is_z_independent(self) -> bool:
        return True

    def __repr__(self):
        return f"DiagonalHom({list(self.exponents)})"


class ConstantInvertible(LoopFactor):
    """lambda-independent matrix M(z), invertible over Q(i)(z)"""

    kind = "const"

    def __init__(self, matrix: RatMatrix, inverse: Optional[RatMatrix] = None):
        if not matrix.is_square:
            raise InvalidInputError("ConstantInvertible needs a square matrix")
        n = matrix.shape[0]
        if inverse is None:
            inverse = RatMatrix(matrix_inverse(matrix.rows))
        elif matrix @ inverse != RatMatrix.identity(n):
            raise InvalidInputError("Supplied inverse does not invert the matrix")
        self.matrix = matrix
        self.inverse_matrix = inverse
        self.n = n

    def expand(self) -> LaurentMatrix:
        return LaurentMatrix.constant(self.matrix)

    def expand_inverse(self) -> LaurentMatrix:
        return LaurentMatrix.constant(self.inverse_matrix)

    def inverse(self) -> "ConstantInvertible":
        return ConstantInvertible(self.inverse_matrix, self.matrix)

    def maurer_cartan(self) -> LaurentMatrix:
        return LaurentMatrix.constant(self.inverse_matrix @ self.matrix.derivative())

    def conjugate(self, x: LaurentMatrix) -> LaurentMatrix:
        return LaurentMatrix(
            self.n,
            {p: self.inverse_matrix @ m @ self.matrix for p, m in x.items()},
        )

    def scaled(self, alpha: GaussianRational) -> List[LoopFactor]:
        return [self]

    def is_z_independent(self) -> bool:
        return self.matrix.is_z_independent()

    def __repr__(self):
        return f"ConstantInvertible({self.matrix!r})"


class Explicit(LoopFactor):
    """Laurent matrix supplied together with its inverse; checked on construction"""

    kind = "explicit"

    def __init__(self, loop: LaurentMatrix, inverse: LaurentMatrix):
        if loop.n != inverse.n or not (loop * inverse).is_identity():
            raise InvalidInputError("Explicit factor: supplied inverse does not invert the loop")
        self.loop = loop
        self.inverse_loop = inverse
        self.n = loop.n

    def expand(self) -> LaurentMatrix:
        return self.loop

    def expand_inverse(self) -> LaurentMatrix:
        return self.inverse_loop

    def inverse(self) -> "Explicit":
        return Explicit(self.inverse_loop, self.loop)

    def maurer_cartan(self) -> LaurentMatrix:
        return self.inverse_loop * self.loop.derivative()

    def scaled(self, alpha: GaussianRational) -> List[LoopFactor]:
        return [
            Explicit(
                self.loop.substitute_scaled(alpha),
                self.inverse_loop.substitute_scaled(alpha),
            )
        ]

    def is_z_independent(self) -> bool:
        return self.loop.derivative().is_zero

    def __repr__(self):
        return f"Explicit({self.loop!r})"


class LoopProduct:
    """Ordered product of factors, left to right"""

    def __init__(self, n: int, factors: Sequence[LoopFactor] = ()):
        for factor in factors:
            if factor.n != n:
                raise InvalidInputError(
                    f"Factor {factor.kind} has size {factor.n}, loop has size {n}"
                )
        self.n = n
        self.factors: Tuple[LoopFactor, ...] = tuple(factors)

    @classmethod
    def identity(cls, n: int) -> "LoopProduct":
        return cls(n)

    @classmethod
    def of(cls, *factors: LoopFactor) -> "LoopProduct":
        if not factors:
            raise InvalidInputError("LoopProduct.of needs at least one factor")
        return cls(factors[0].n, factors)

    def expand(self) -> LaurentMatrix:
        return reduce(
            lambda acc, f: acc * f.expand(), self.factors, LaurentMatrix.identity(self.n)
        )

    def expand_inverse(self) -> LaurentMatrix:
        return reduce(
            lambda acc, f: acc * f.expand_inverse(),
            reversed(self.factors),
            LaurentMatrix.identity(self.n),
        )

    def inverse(self) -> "LoopProduct":
        return LoopProduct(self.n, [f.inverse() for f in reversed(self.factors)])

    def __mul__(self, other: "LoopProduct") -> "LoopProduct":
        if self.n != other.n:
            raise InvalidInputError(f"Loop size mismatch {self.n} vs {other.n}")
        return LoopProduct(self.n, self.factors + other.factors)

    def is_z_independent(self) -> bool:
        if all(f.is_z_independent() for f in self.factors):
            return True
        return self.expand().derivative().is_zero

    def lambda_support(self) -> List[int]:
        return self.expand().support()

    def __repr__(self):
        return f"LoopProduct(n={self.n}, {list(self.factors)!r})"
