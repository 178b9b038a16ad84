from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from exactalg.linear_algebra import in_span, rref
from exactalg.rational_function import ONE, ZERO, RationalFunction
from utils.exceptions import InvalidInputError

Vector = List[RationalFunction]


class ModelSpace:
    """
    Window lambda^low C^n + ... + lambda^(low+k-1) C^n of H_+ modulo lambda^(low+k) H_+
    slot (power i, coordinate a) sits at index (i - low) * n + a
    """

    __slots__ = ("n", "k", "low")

    def __init__(self, n: int, k: int, low: int = 0):
        if n < 1 or k < 0:
            raise InvalidInputError(f"Invalid model space n={n}, k={k}")
        self.n = n
        self.k = k
        self.low = low

    @property
    def high(self) -> int:
        return self.low + self.k

    @property
    def dim(self) -> int:
        return self.n * self.k

    def index(self, power: int, a: int) -> int:
        if not self.low <= power < self.high:
            raise InvalidInputError(f"Power {power} outside window [{self.low}, {self.high})")
        return (power - self.low) * self.n + a

    def slot(self, index: int) -> Tuple[int, int]:
        return self.low + index // self.n, index % self.n

    def zero_vector(self) -> Vector:
        return [ZERO] * self.dim

    def vector_from_slots(self, slots: Mapping[int, Sequence[RationalFunction]]) -> Vector:
        """Laurent vector {power: C^n part}; powers at or above the window top vanish"""
        v = self.zero_vector()
        for power, part in slots.items():
            if len(part) != self.n:
                raise InvalidInputError(f"Slot vector has length {len(part)}, expected {self.n}")
            if power >= self.high:
                continue
            if power < self.low and any(not e.is_zero for e in part):
                raise InvalidInputError(
                    f"Vector has a lambda^{power} component below the window [{self.low}, {self.high})"
                )
            if power < self.low:
                continue
            for a, e in enumerate(part):
                v[self.index(power, a)] = e
        return v

    def slots_of(self, vector: Sequence[RationalFunction]) -> Dict[int, Vector]:
        out: Dict[int, Vector] = {}
        for i in range(self.k):
            part = list(vector[i * self.n : (i + 1) * self.n])
            if any(not e.is_zero for e in part):
                out[self.low + i] = part
        return out

    def unit(self, power: int, a: int) -> Vector:
        v = self.zero_vector()
        v[self.index(power, a)] = ONE
        return v

    def shift(self, vector: Sequence[RationalFunction]) -> Vector:
        """N: multiplication by lambda, the top slot falls off"""
        n = self.n
        return [ZERO] * n + list(vector[: self.dim - n])

    def derivative(self, vector: Sequence[RationalFunction]) -> Vector:
        return [e.derivative() for e in vector]

    def __eq__(self, other):
        if not isinstance(other, ModelSpace):
            return NotImplemented
        return (self.n, self.k, self.low) == (other.n, other.k, other.low)

    def __hash__(self):
        return hash((self.n, self.k, self.low))

    def __repr__(self):
        return f"ModelSpace(n={self.n}, k={self.k}, low={self.low})"


class PlaneFamily:
    """
    W(z) modulo lambda^high H_+ (which W contains), kept as a reduced echelon
    basis over Q(i)(z): pivots on the lowest slot index, pivot entries 1
    """

    def __init__(self, space: ModelSpace, vectors: Iterable[Sequence[RationalFunction]] = ()):
        rows = [list(v) for v in vectors]
        for v in rows:
            if len(v) != space.dim:
                raise InvalidInputError(f"Vector has length {len(v)}, model space has {space.dim}")
        self.space = space
        self.basis, self.pivots = rref(rows) if rows else ([], [])

    @classmethod
    def full(cls, space: ModelSpace) -> "PlaneFamily":
        return cls(space, [space.unit(space.low + i, a) for i in range(space.k) for a in range(space.n)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[RationalFunction]) -> bool:
        return in_span(vector, self.basis)

    def contains_plane(self, other: "PlaneFamily") -> bool:
        other = other.in_window(self.space.low, self.space.k)
        return all(self.contains(v) for v in other.basis)

    def lowest_power(self) -> int:
        """Smallest lambda power carried by W; the window top if W is just lambda^high H_+"""
        if not self.basis:
            return self.space.high
        return min(self.space.slot(p)[0] for p in self.pivots)

    def contains_slot(self, power: int) -> bool:
        """lambda^power C^n inside W"""
        if power >= self.space.high:
            return True
        if power < self.space.low:
            return False
        return all(self.contains(self.space.unit(power, a)) for a in range(self.space.n))

    def in_window(self, low: int, k: int) -> "PlaneFamily":
        """Same W expressed in the window [low, low + k)"""
        space = self.space
        if (low, k) == (space.low, space.k):
            return self
        target = ModelSpace(space.n, k, low)
        if target.high < space.high and not all(
            self.contains_slot(p) for p in range(max(target.high, space.low), space.high)
        ):
            raise InvalidInputError(
                f"W does not contain lambda^{target.high} H_+; cannot truncate the window there"
            )
        vectors = [target.vector_from_slots(space.slots_of(v)) for v in self.basis]
        for power in range(max(space.high, target.low), target.high):
            vectors.extend(target.unit(power, a) for a in range(space.n))
        return PlaneFamily(target, vectors)

    def __eq__(self, other):
        if not isinstance(other, PlaneFamily):
            return NotImplemented
        low = min(self.space.low, other.space.low)
        high = max(self.space.high, other.space.high)
        a = self.in_window(low, high - low)
        b = other.in_window(low, high - low)
        return a.basis == b.basis

    __hash__ = None

    def __repr__(self):
        return f"PlaneFamily({self.space!r}, dim={self.dim})"


def slot_support(plane: PlaneFamily) -> List[int]:
    powers = set()
    for v in plane.basis:
        powers.update(plane.space.slots_of(v))
    return sorted(powers)
