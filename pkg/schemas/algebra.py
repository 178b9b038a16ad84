from enum import Enum
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    PlainSerializer,
    field_validator,
    model_validator,
)

from canonical.uniton_type import UnitonType
from exactalg.rational_function import RationalFunction
from exactalg.text_format import to_rational
from loopalg.factors import (
    ConstantInvertible,
    DiagonalHom,
    ExpNilpotent,
    Explicit,
    LoopFactor,
    LoopProduct,
)
from loopalg.matrices import LaurentMatrix, RatMatrix
from utils.exceptions import InvalidInputError

# text syntax, int or {"num": ..., "den": ...} in; text syntax out
Entry = Annotated[
    RationalFunction,
    BeforeValidator(to_rational),
    PlainSerializer(lambda f: str(f), return_type=str),
]
MatrixRows = List[List[Entry]]


def _check_square(rows: List[List[Any]], name: str = "matrix") -> List[List[Any]]:
    if not rows:
        raise InvalidInputError(f"{name} is empty")
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise InvalidInputError(f"{name} is ragged or not square: row of length {len(row)} in a {size}-row matrix")
    return rows


def matrix_to_rows(matrix: RatMatrix) -> List[List[str]]:
    return [[str(e) for e in row] for row in matrix]


class AlgebraModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)


class FactorKindEnum(str, Enum):
    EXP = "exp"
    DIAG = "diag"
    CONST = "const"
    EXPLICIT = "explicit"


class LaurentSchema(AlgebraModel):
    """Expanded loop: {"coeffs": {"-2": [[...]], ...}}"""

    coeffs: Dict[int, MatrixRows]

    @field_validator("coeffs")
    @classmethod
    def validate_coeffs(cls, v: Dict[int, List[List[Any]]]) -> Dict[int, List[List[Any]]]:
        sizes = {len(_check_square(rows, f"lambda^{p} coefficient")) for p, rows in v.items()}
        if len(sizes) > 1:
            raise InvalidInputError(f"Coefficients have different sizes {sorted(sizes)}")
        return v

    def to_laurent(self, n: int) -> LaurentMatrix:
        for rows in self.coeffs.values():
            if len(rows) != n:
                raise InvalidInputError(f"Coefficient has size {len(rows)}, loop has size {n}")
        return LaurentMatrix(n, {p: RatMatrix(rows) for p, rows in self.coeffs.items()})

    @classmethod
    def from_laurent(cls, loop: LaurentMatrix) -> "LaurentSchema":
        return cls(coeffs={p: [list(row) for row in m] for p, m in loop.items()})


class ExpFactorSchema(LaurentSchema):
    kind: Literal[FactorKindEnum.EXP] = FactorKindEnum.EXP

    def to_factor(self, n: int) -> LoopFactor:
        return ExpNilpotent(self.to_laurent(n))


class DiagFactorSchema(AlgebraModel):
    kind: Literal[FactorKindEnum.DIAG] = FactorKindEnum.DIAG
    exponents: List[int]

    @field_validator("exponents")
    @classmethod
    def validate_exponents(cls, v: List[int]) -> List[int]:
        if not v:
            raise InvalidInputError("Diagonal homomorphism needs exponents")
        return v

    def to_factor(self, n: int) -> LoopFactor:
        if len(self.exponents) != n:
            raise InvalidInputError(f"{len(self.exponents)} exponents for a loop of size {n}")
        return DiagonalHom(self.exponents)


class ConstFactorSchema(AlgebraModel):
    kind: Literal[FactorKindEnum.CONST] = FactorKindEnum.CONST
    matrix: MatrixRows
    inverse: Optional[MatrixRows] = None

    @field_validator("matrix", "inverse")
    @classmethod
    def validate_square(cls, v: Optional[List[List[Any]]]) -> Optional[List[List[Any]]]:
        return v if v is None else _check_square(v)

    def to_factor(self, n: int) -> LoopFactor:
        if len(self.matrix) != n:
            raise InvalidInputError(f"Matrix has size {len(self.matrix)}, loop has size {n}")
        inverse = RatMatrix(self.inverse) if self.inverse is not None else None
        return ConstantInvertible(RatMatrix(self.matrix), inverse)


class ExplicitFactorSchema(LaurentSchema):
    kind: Literal[FactorKindEnum.EXPLICIT] = FactorKindEnum.EXPLICIT
    inverse_coeffs: Dict[int, MatrixRows]

    def to_factor(self, n: int) -> LoopFactor:
        inverse = LaurentSchema(coeffs=self.inverse_coeffs).to_laurent(n)
        return Explicit(self.to_laurent(n), inverse)


FactorSchema = Union[ExpFactorSchema, DiagFactorSchema, ConstFactorSchema, ExplicitFactorSchema]


def parse_factor(factor_dict: Dict[str, Any]) -> FactorSchema:
    kind = factor_dict.get("kind")

    factor_map = {
        FactorKindEnum.EXP.value: ExpFactorSchema,
        FactorKindEnum.DIAG.value: DiagFactorSchema,
        FactorKindEnum.CONST.value: ConstFactorSchema,
        FactorKindEnum.EXPLICIT.value: ExplicitFactorSchema,
    }

    factor_class = factor_map.get(kind)
    if not factor_class:
        raise InvalidInputError(f"Unknown factor kind: {kind}")

    fields = {key: value for key, value in factor_dict.items() if key != "kind"}
    return factor_class(**fields)


def factor_to_schema(factor: LoopFactor) -> FactorSchema:
    if isinstance(factor, ExpNilpotent):
        return ExpFactorSchema(coeffs=LaurentSchema.from_laurent(factor.b).coeffs)
    if isinstance(factor, DiagonalHom):
        return DiagFactorSchema(exponents=list(factor.exponents))
    if isinstance(factor, ConstantInvertible):
        return ConstFactorSchema(
            matrix=[list(row) for row in factor.matrix],
            inverse=[list(row) for row in factor.inverse_matrix],
        )
    if isinstance(factor, Explicit):
        return ExplicitFactorSchema(
            coeffs=LaurentSchema.from_laurent(factor.loop).coeffs,
            inverse_coeffs=LaurentSchema.from_laurent(factor.inverse_loop).coeffs,
        )
    raise InvalidInputError(f"No schema for factor {factor!r}")


class LoopSchema(AlgebraModel):
    """{"n": 3, "factors": [{"kind": "exp", "coeffs": {...}}, {"kind": "diag", "exponents": [...]}]}"""

    n: int
    factors: List[FactorSchema]

    @field_validator("n")
    @classmethod
    def validate_n(cls, v: int) -> int:
        if v < 1:
            raise InvalidInputError(f"Loop size must be positive, got {v}")
        return v

    @field_validator("factors", mode="before")
    @classmethod
    def parse_factors(cls, v: Any) -> List[FactorSchema]:
        if not isinstance(v, list):
            raise InvalidInputError("factors must be a list")
        return [parse_factor(f) if isinstance(f, dict) else f for f in v]

    def to_loop(self) -> LoopProduct:
        return LoopProduct(self.n, [f.to_factor(self.n) for f in self.factors])

    @classmethod
    def from_loop(cls, loop: LoopProduct) -> "LoopSchema":
        return cls(n=loop.n, factors=[factor_to_schema(f) for f in loop.factors])


class PotentialSchema(AlgebraModel):
    """
    B_1 for the canonical solver: {"type": "2,1,0", "entries": {"1,2": "z", ...}}
    block coordinates are 1-based; constants maps a level to further entries
    """

    type: str
    entries: Dict[str, Entry] = {}
    constants: Dict[int, Dict[str, Entry]] = {}

    @field_validator("type")
    @classmethod
    def validate_type(cls, v: str) -> str:
        UnitonType.parse(v)
        return v

    @field_validator("entries")
    @classmethod
    def validate_entries(cls, v: Dict[str, Any]) -> Dict[str, Any]:
        for key in v:
            _coordinate(key)
        return v

    @model_validator(mode="after")
    def validate_coordinates_in_range(self) -> "PotentialSchema":
        n = self.uniton_type().n
        keys = list(self.entries) + [key for level in self.constants.values() for key in level]
        for key in keys:
            r, s = _coordinate(key)
            if not (0 <= r < n and 0 <= s < n):
                raise InvalidInputError(f"Entry {key} outside a {n} x {n} matrix")
        return self

    def uniton_type(self) -> UnitonType:
        return UnitonType.parse(self.type)

    def _matrix(self, entries: Dict[str, RationalFunction]) -> RatMatrix:
        n = self.uniton_type().n
        rows = [[RationalFunction.zero()] * n for _ in range(n)]
        for key, value in entries.items():
            r, s = _coordinate(key)
            rows[r][s] = value
        return RatMatrix(rows)

    def b1(self) -> RatMatrix:
        return self._matrix(self.entries)

    def constant_matrices(self) -> Dict[int, RatMatrix]:
        return {level: self._matrix(entries) for level, entries in self.constants.items()}


def _coordinate(key: str) -> Tuple[int, int]:
    try:
        r, s = (int(part) for part in key.split(","))
    except ValueError as e:
        raise InvalidInputError(f"Block coordinate must look like 'r,s', got {key!r}") from e
    return r - 1, s - 1
