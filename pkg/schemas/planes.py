from typing import Any, Dict, List, Optional, Tuple

from pydantic import field_validator, model_validator

from canonical.uniton_type import UnitonType
from deform.path import U3Data
from grassmann.frenet import FRENET_ROWS, FrenetData
from grassmann.model_space import ModelSpace, PlaneFamily
from schemas.algebra import AlgebraModel, Entry
from utils.exceptions import InvalidInputError


def split_vector(text: str) -> List[str]:
    """'(z, 0, (z-1)/(z+2))' -> ['z', '0', '(z-1)/(z+2)']"""
    text = text.strip()
    if text.startswith("(") and _closing_paren(text) == len(text) - 1:
        text = text[1:-1]
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InvalidInputError(f"Unbalanced parentheses in vector {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise InvalidInputError(f"Unbalanced parentheses in vector {text!r}")
    parts.append("".join(current).strip())
    if any(not p for p in parts):
        raise InvalidInputError(f"Empty component in vector {text!r}")
    return parts


def _closing_paren(text: str) -> int:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return i
    return -1


def parse_row(value: Any) -> Tuple[int, ...]:
    if isinstance(value, str):
        value = UnitonType.parse(value).v
    try:
        return tuple(int(x) for x in value)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"Row must be a type vector, got {value!r}") from e


class PlaneSchema(AlgebraModel):
    """{"n": 3, "k": 2, "low": 0, "basis": [[...n*k entries, lambda^low slot first...]]}"""

    n: int
    k: int
    low: int = 0
    basis: List[List[Entry]] = []

    @model_validator(mode="after")
    def validate_shape(self) -> "PlaneSchema":
        if self.n < 1 or self.k < 0:
            raise InvalidInputError(f"Bad window n={self.n}, k={self.k}")
        for i, row in enumerate(self.basis):
            if len(row) != self.n * self.k:
                raise InvalidInputError(
                    f"Basis row {i} has length {len(row)}, window needs n*k = {self.n * self.k}"
                )
        return self

    def to_plane(self) -> PlaneFamily:
        return PlaneFamily(ModelSpace(self.n, self.k, self.low), self.basis)

    @classmethod
    def from_plane(cls, plane: PlaneFamily) -> "PlaneSchema":
        space = plane.space
        return cls(n=space.n, k=space.k, low=space.low, basis=[list(v) for v in plane.basis])


class FrenetSchema(AlgebraModel):
    """{"row": "2,1,0", "l": ["z", "0", "1"], "m": "(1,0,0)"}"""

    row: Tuple[int, ...]
    l: List[Entry]
    m: Optional[List[Entry]] = None
    n: Optional[List[Entry]] = None

    @field_validator("row", mode="before")
    @classmethod
    def validate_row(cls, v: Any) -> Tuple[int, ...]:
        row = parse_row(v)
        if row not in FRENET_ROWS:
            raise InvalidInputError(f"No Frenet table row for type {row}")
        return row

    @field_validator("l", "m", "n", mode="before")
    @classmethod
    def split_text_vector(cls, v: Any) -> Any:
        return split_vector(v) if isinstance(v, str) else v

    def vectors(self) -> Dict[str, List[Any]]:
        given = {"l": self.l, "m": self.m, "n": self.n}
        return {name: vec for name, vec in given.items() if vec is not None}

    def to_data(self) -> FrenetData:
        return FrenetData(self.row, self.vectors())


class U3DataSchema(AlgebraModel):
    """(2,1,0) data for the deformation: {"alpha": "z", "beta": "z^2", "delta": "(z-1)*(z-2)"}"""

    alpha: Entry
    beta: Entry
    delta: Entry
    gamma: Optional[Entry] = None

    def to_data(self) -> U3Data:
        return U3Data(self.alpha, self.beta, self.delta, gamma=self.gamma)

    @classmethod
    def from_data(cls, data: U3Data) -> "U3DataSchema":
        return cls(alpha=data.alpha, beta=data.beta, delta=data.delta, gamma=data.gamma)
