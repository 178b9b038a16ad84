from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from exactalg.linear_algebra import matmul
from exactalg.rational_function import ONE, ZERO, GaussianRational, RationalFunction
from utils.exceptions import InvalidInputError

ScalarLike = Union[int, Fraction, GaussianRational, RationalFunction]


class RatMatrix:
    """Rectangular matrix of RationalFunction; immutable"""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[RationalFunction]]):
        frozen = tuple(tuple(row) for row in rows)
        if not frozen or not frozen[0]:
            raise InvalidInputError("Matrix dimensions must be at least 1")
        width = len(frozen[0])
        if any(len(row) != width for row in frozen):
            raise InvalidInputError("Ragged matrix rows")
        self.rows = frozen
        self.shape = (len(frozen), width)

    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[ONE if r == c else ZERO for c in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[RationalFunction]) -> "RatMatrix":
        n = len(entries)
        return cls([[entries[r] if r == c else ZERO for c in range(n)] for r in range(n)])

    @classmethod
    def unit(cls, n: int, r: int, c: int, value: RationalFunction = ONE) -> "RatMatrix":
        """value at (r, c), zeros elsewhere; 0-based"""
        return cls([[value if (i, j) == (r, c) else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, index: int) -> Tuple[RationalFunction, ...]:
        return self.rows[index]

    def __iter__(self) -> Iterator[Tuple[RationalFunction, ...]]:
        return iter(self.rows)

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.rows for e in row)

    def entries(self) -> Iterator[Tuple[int, int, RationalFunction]]:
        for r, row in enumerate(self.rows):
            for c, e in enumerate(row):
                yield r, c, e

    def nonzero_entries(self) -> Iterator[Tuple[int, int, RationalFunction]]:
        return ((r, c, e) for r, c, e in self.entries() if not e.is_zero)

    def map(self, fn) -> "RatMatrix":
        return RatMatrix([[fn(e) for e in row] for row in self.rows])

    def map_indexed(self, fn) -> "RatMatrix":
        return RatMatrix(
            [[fn(r, c, e) for c, e in enumerate(row)] for r, row in enumerate(self.rows)]
        )

    def _check_shape(self, other: "RatMatrix"):
        if self.shape != other.shape:
            raise InvalidInputError(f"Shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_shape(other)
        return RatMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_shape(other)
        return RatMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "RatMatrix":
        return self.map(lambda e: -e)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape[1] != other.shape[0]:
            raise InvalidInputError(f"Cannot multiply {self.shape} by {other.shape}")
        return RatMatrix(matmul(self.rows, other.rows))

    def scale(self, factor: ScalarLike) -> "RatMatrix":
        return self.map(lambda e: e * factor)

    def derivative(self) -> "RatMatrix":
        return self.map(lambda e: e.derivative())

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.rows))

    def column(self, c: int) -> List[RationalFunction]:
        return [row[c] for row in self.rows]

    def is_z_independent(self) -> bool:
        return all(e.is_constant for row in self.rows for e in row)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"RatMatrix([{body}])"


class LaurentMatrix:
    """
    Finite Laurent polynomial in lambda with n x n RatMatrix coefficients
    zero coefficients are never stored
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Dict[int, RatMatrix] = None):
        if n < 1:
            raise InvalidInputError("Loop size must be positive")
        cleaned: Dict[int, RatMatrix] = {}
        for power, matrix in (coeffs or {}).items():
            if matrix.shape != (n, n):
                raise InvalidInputError(
                    f"Coefficient of lambda^{power} has shape {matrix.shape}, expected ({n}, {n})"
                )
            if not matrix.is_zero:
                cleaned[int(power)] = matrix
        self.n = n
        self.coeffs = dict(sorted(cleaned.items()))

    @classmethod
    def zero(cls, n: int) -> "LaurentMatrix":
        return cls(n)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls(n, {0: RatMatrix.identity(n)})

    @classmethod
    def constant(cls, matrix: RatMatrix) -> "LaurentMatrix":
        return cls(matrix.shape[0], {0: matrix})

    @classmethod
    def diagonal_hom(cls, exponents: Sequence[int]) -> "LaurentMatrix":
        n = len(exponents)
        coeffs: Dict[int, RatMatrix] = {}
        for power in set(exponents):
            coeffs[power] = RatMatrix.diagonal(
                [ONE if e == power else ZERO for e in exponents]
            )
        return cls(n, coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> List[int]:
        return list(self.coeffs)

    def min_power(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_power(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def coefficient(self, power: int) -> RatMatrix:
        return self.coeffs.get(power, RatMatrix.zeros(self.n))

    def items(self):
        return self.coeffs.items()

    def _check(self, other: "LaurentMatrix"):
        if self.n != other.n:
            raise InvalidInputError(f"Loop size mismatch {self.n} vs {other.n}")

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        out = dict(self.coeffs)
        for power, matrix in other.coeffs.items():
            out[power] = out[power] + matrix if power in out else matrix
        return LaurentMatrix(self.n, out)

    def __neg__(self) -> "LaurentMatrix":
        return LaurentMatrix(self.n, {p: -m for p, m in self.coeffs.items()})

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self + (-other)

    def __mul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if not isinstance(other, LaurentMatrix):
            return self.scale(other)
        self._check(other)
        out: Dict[int, RatMatrix] = {}
        for p, a in self.coeffs.items():
            for q, b in other.coeffs.items():
                product = a @ b
                out[p + q] = out[p + q] + product if p + q in out else product
        return LaurentMatrix(self.n, out)

    def scale(self, factor: ScalarLike) -> "LaurentMatrix":
        return LaurentMatrix(self.n, {p: m.scale(factor) for p, m in self.coeffs.items()})

    def __pow__(self, exponent: int) -> "LaurentMatrix":
        result = LaurentMatrix.identity(self.n)
        for _ in range(exponent):
            result = result * self
        return result

    def commutator(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self * other - other * self

    def derivative(self) -> "LaurentMatrix":
        return LaurentMatrix(self.n, {p: m.derivative() for p, m in self.coeffs.items()})

    def shift(self, power: int) -> "LaurentMatrix":
        """Multiply by lambda^power"""
        return LaurentMatrix(self.n, {p + power: m for p, m in self.coeffs.items()})

    def substitute_scaled(self, alpha: GaussianRational) -> "LaurentMatrix":
        """lambda -> alpha * lambda"""
        a = RationalFunction.constant(alpha)
        return LaurentMatrix(self.n, {p: m.scale(a**p) for p, m in self.coeffs.items()})

    def conjugate_diagonal(self, exponents: Sequence[int]) -> "LaurentMatrix":
        """D X D^-1 for D = diag(lambda^e); entry (r, s) moves by e_r - e_s"""
        out: Dict[int, RatMatrix] = {}
        for p, m in self.coeffs.items():
            for r, s, e in m.nonzero_entries():
                target = p + exponents[r] - exponents[s]
                piece = RatMatrix.unit(self.n, r, s, e)
                out[target] = out[target] + piece if target in out else piece
        return LaurentMatrix(self.n, out)

    def is_z_independent(self) -> bool:
        return all(m.is_z_independent() for m in self.coeffs.values())

    def is_identity(self) -> bool:
        return self == LaurentMatrix.identity(self.n)

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, tuple(self.coeffs.items())))

    def __repr__(self):
        terms = ", ".join(f"{p}: {m!r}" for p, m in self.coeffs.items())
        return f"LaurentMatrix(n={self.n}, {{{terms}}})"
