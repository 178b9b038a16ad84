from typing import Dict, List, NamedTuple, Optional, Sequence

from custom_logging.custom_logger import get_logger
from exactalg.rational_function import RationalFunction
from grassmann.model_space import ModelSpace, PlaneFamily, Vector
from utils.exceptions import InvalidInputError

clogger = get_logger()
MODULE_NAME = "GRASSMANN_CES"


class CesViolation(NamedTuple):
    basis_index: int
    test: str  # "N s" or "N s'"
    vector: Vector


class CesReport(NamedTuple):
    accepted: bool
    violations: List[CesViolation]

    @property
    def first_violation(self) -> Optional[CesViolation]:
        return self.violations[0] if self.violations else None


def check_ces(plane: PlaneFamily) -> CesReport:
    """lambda W' <= W, tested on N s and N s' for every basis vector s"""
    space = plane.space
    violations = []
    for index, s in enumerate(plane.basis):
        shifted = space.shift(s)
        if not plane.contains(shifted):
            violations.append(CesViolation(index, "N s", shifted))
        shifted_derivative = space.shift(space.derivative(s))
        if not plane.contains(shifted_derivative):
            violations.append(CesViolation(index, "N s'", shifted_derivative))

    if violations:
        first = violations[0]
        clogger.debug(
            f"[{MODULE_NAME}] W rejected: {first.test} not in W for basis vector {first.basis_index}"
        )
    return CesReport(accepted=not violations, violations=violations)


def generate_from_X(x: Sequence[Sequence[RationalFunction]], space: ModelSpace) -> PlaneFamily:
    """W = X + lambda X' + ... + lambda^(k-1) X^(k-1) where X^(j) spans all derivatives up to order j"""
    for v in x:
        if len(v) != space.dim:
            raise InvalidInputError(f"Vector has length {len(v)}, model space has {space.dim}")

    vectors: List[Vector] = []
    for s in x:
        derivatives = [list(s)]
        for _ in range(1, space.k):
            derivatives.append(space.derivative(derivatives[-1]))
        for j in range(space.k):
            for m in range(j + 1):
                shifted = derivatives[m]
                for _ in range(j):
                    shifted = space.shift(shifted)
                vectors.append(shifted)
    return PlaneFamily(space, vectors)


def echelon_split(x: Sequence[Sequence[RationalFunction]], space: ModelSpace) -> Dict[int, List[Vector]]:
    """
    X = X_0 + lambda X_1 + ...: reduced echelon rows grouped by the power of
    their pivot slot, each group shifted down to start at lambda^0
    """
    plane = PlaneFamily(space, x)
    groups: Dict[int, List[Vector]] = {}
    n = space.n
    for row, pivot in zip(plane.basis, plane.pivots):
        power, _ = space.slot(pivot)
        offset = (power - space.low) * n
        lowered = list(row[offset:]) + [RationalFunction.zero()] * offset
        groups.setdefault(power - space.low, []).append(lowered)
    return groups
