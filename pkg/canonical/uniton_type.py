from itertools import product
from typing import Iterator, List, Sequence, Tuple

from loopalg.factors import DiagonalHom
from loopalg.matrices import RatMatrix
from utils.exceptions import InvalidInputError


class UnitonType:
    """
    Schubert symbol v = (v_1 >= ... >= v_n = 0) with unit steps
    multiplicities a_j count the coordinates with v_r = k - j, j = 0..k
    """

    __slots__ = ("v", "n", "k", "multiplicities")

    def __init__(self, v: Sequence[int]):
        v = tuple(int(x) for x in v)
        if not v:
            raise InvalidInputError("Uniton type needs at least one entry")
        if v[-1] != 0:
            raise InvalidInputError(f"Uniton type {v} must end in 0")
        for left, right in zip(v, v[1:]):
            if left - right not in (0, 1):
                raise InvalidInputError(
                    f"Uniton type {v} must be non-increasing in steps of 0 or 1"
                )
        self.v: Tuple[int, ...] = v
        self.n = len(v)
        self.k = v[0]
        self.multiplicities: Tuple[int, ...] = tuple(
            sum(1 for x in v if x == self.k - j) for j in range(self.k + 1)
        )

    @classmethod
    def parse(cls, text: str) -> "UnitonType":
        """'2,1,0' or '(2,1,0)'"""
        try:
            return cls([int(part) for part in text.strip().strip("()").split(",")])
        except ValueError as e:
            raise InvalidInputError(f"Cannot parse uniton type {text!r}") from e

    def block_index(self, r: int) -> int:
        return self.k - self.v[r]

    def gamma(self) -> DiagonalHom:
        return DiagonalHom(self.v)

    def eigenspace(self, j: int) -> List[int]:
        """Coordinates spanning E_j, the lambda^j eigenspace of gamma_v"""
        return [r for r, x in enumerate(self.v) if x == j]

    def filtration_dimension(self) -> int:
        """dim of gamma_v H_+ modulo lambda^k H_+"""
        return sum(sum(1 for x in self.v if x <= i) for i in range(self.k))

    def profile(self, level: int) -> "BlockProfile":
        return BlockProfile(self, level)

    def __eq__(self, other):
        if not isinstance(other, UnitonType):
            return NotImplemented
        return self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __lt__(self, other: "UnitonType"):
        return self.v < other.v

    def __str__(self):
        return ",".join(str(x) for x in self.v)

    def __repr__(self):
        return f"UnitonType({self.v})"


class BlockProfile:
    """p^i_v: entry (r, s) allowed iff block(r) < block(s) - i, i.e. v_r - v_s > i"""

    __slots__ = ("type", "level")

    def __init__(self, uniton_type: UnitonType, level: int):
        self.type = uniton_type
        self.level = level

    def allows(self, r: int, s: int) -> bool:
        return self.type.v[r] - self.type.v[s] > self.level

    def allowed_entries(self) -> Iterator[Tuple[int, int]]:
        n = self.type.n
        return ((r, s) for r in range(n) for s in range(n) if self.allows(r, s))

    def violations(self, matrix: RatMatrix) -> List[Tuple[int, int]]:
        return [(r, s) for r, s, _ in matrix.nonzero_entries() if not self.allows(r, s)]

    def check(self, matrix: RatMatrix, name: str = "matrix") -> None:
        n = self.type.n
        if matrix.shape != (n, n):
            raise InvalidInputError(f"{name} has shape {matrix.shape}, expected ({n}, {n})")
        bad = self.violations(matrix)
        if bad:
            cells = ", ".join(f"({r + 1},{s + 1})" for r, s in bad)
            raise InvalidInputError(
                f"{name} has entries outside p^{self.level} of type {self.type}: {cells}"
            )


def enumerate_types(n: int) -> List[UnitonType]:
    """All 2^(n-1) types of size n, lexicographically descending"""
    if n < 1:
        raise InvalidInputError("Group size must be at least 1")
    types = []
    for steps in product((0, 1), repeat=n - 1):
        v = [0]
        for step in reversed(steps):
            v.append(v[-1] + step)
        types.append(UnitonType(list(reversed(v))))
    return sorted(types, key=lambda t: t.v, reverse=True)
