import time
from typing import Dict, Optional, Sequence, Tuple, Union

from canonical.uniton_type import UnitonType
from custom_logging.custom_logger import get_logger
from exactalg.integration import IntegrationObstruction, integrate
from exactalg.rational_function import ZERO
from loopalg.factors import DiagonalHom, ExpNilpotent, LoopProduct
from loopalg.matrices import LaurentMatrix, RatMatrix
from loopalg.series import dexp_series
from utils.exceptions import InvalidInputError, StructuralError

clogger = get_logger()
MODULE_NAME = "CANONICAL_POTENTIAL"


class CanonicalPotential:
    """B(z, lambda) = sum over i of lambda^-i B_i(z), with B_i in p^(i-1)_v"""

    __slots__ = ("type", "levels")

    def __init__(self, uniton_type: UnitonType, levels: Sequence[RatMatrix]):
        if len(levels) != uniton_type.k:
            raise InvalidInputError(
                f"Type {uniton_type} needs {uniton_type.k} levels, got {len(levels)}"
            )
        for i, matrix in enumerate(levels, start=1):
            uniton_type.profile(i - 1).check(matrix, name=f"B_{i}")
        self.type = uniton_type
        self.levels: Tuple[RatMatrix, ...] = tuple(levels)

    def level(self, i: int) -> RatMatrix:
        return self.levels[i - 1]

    def as_laurent(self) -> LaurentMatrix:
        return LaurentMatrix(self.type.n, {-i: m for i, m in enumerate(self.levels, start=1)})

    def __repr__(self):
        return f"CanonicalPotential(type={self.type}, levels={list(self.levels)!r})"


def _integrate_matrix(
    integrand: RatMatrix, level: int
) -> Union[RatMatrix, IntegrationObstruction]:
    rows = []
    for r, row in enumerate(integrand.rows):
        out_row = []
        for s, entry in enumerate(row):
            if entry.is_zero:
                out_row.append(ZERO)
                continue
            result = integrate(entry)
            if isinstance(result, IntegrationObstruction):
                return result._replace(level=level, entry=(r, s))
            out_row.append(result)
        rows.append(out_row)
    return RatMatrix(rows)


def solve_canonical(
    uniton_type: UnitonType,
    b1: RatMatrix,
    constants: Optional[Dict[int, RatMatrix]] = None,
) -> Union[CanonicalPotential, IntegrationObstruction]:
    """
    Recursive quadrature for B_2..B_k: the lambda^-i coefficient of
    (exp B)^-1 (exp B)' must vanish for i >= 2, which fixes B_i' from B_1..B_(i-1)
    constants maps a level to a z-independent matrix added after integration
    """
    start = time.perf_counter()
    n, k = uniton_type.n, uniton_type.k
    uniton_type.profile(0).check(b1, name="B_1")

    constants = constants or {}
    for level, matrix in constants.items():
        if not 1 <= level <= k:
            raise InvalidInputError(f"Integration constant for level {level} outside 1..{k}")
        if not matrix.is_z_independent():
            raise InvalidInputError(f"Integration constant for level {level} depends on z")
        uniton_type.profile(level - 1).check(matrix, name=f"constant for B_{level}")

    if k == 0:
        return CanonicalPotential(uniton_type, [])

    levels = [b1 + constants[1] if 1 in constants else b1]
    for i in range(2, k + 1):
        partial = LaurentMatrix(n, {-j: m for j, m in enumerate(levels, start=1)})
        residual = dexp_series(partial).coefficient(-i)

        stray = uniton_type.profile(i - 1).violations(residual)
        if stray:
            raise StructuralError(f"Recursion for B_{i} left entries outside p^{i - 1}: {stray}")

        integrated = _integrate_matrix(-residual, level=i)
        if isinstance(integrated, IntegrationObstruction):
            r, s = integrated.entry
            clogger.info(
                f"[{MODULE_NAME}] Obstruction for type {uniton_type} at B_{i}"
                f"({r + 1},{s + 1}): {integrated.remainder}"
            )
            return integrated

        if i in constants:
            integrated = integrated + constants[i]
        levels.append(integrated)

    clogger.log_performance(
        "solve_canonical",
        time.perf_counter() - start,
        {"type": str(uniton_type), "levels": k},
    )
    return CanonicalPotential(uniton_type, levels)


def build_H(potential: CanonicalPotential) -> LoopProduct:
    """H = exp B"""
    return LoopProduct(potential.type.n, [ExpNilpotent(potential.as_laurent())])


def to_big_cell(potential: CanonicalPotential) -> Tuple[LaurentMatrix, DiagonalHom]:
    """C = gamma_v B gamma_v^-1, so exp B = gamma_v^-1 (exp C) gamma_v"""
    c = potential.as_laurent().conjugate_diagonal(potential.type.v)
    return c, potential.type.gamma()


def big_cell_loop(c: LaurentMatrix, uniton_type: UnitonType) -> LoopProduct:
    """(exp C) gamma_v"""
    if c.n != uniton_type.n:
        raise InvalidInputError(f"C has size {c.n}, type has size {uniton_type.n}")
    outside = [p for p in c.support() if p < 0 or p >= uniton_type.k]
    if outside:
        raise InvalidInputError(f"C must be supported in powers 0..k-1, found {outside}")
    for power, matrix in c.items():
        uniton_type.profile(power).check(matrix, name=f"C_{power}")
    return LoopProduct(c.n, [ExpNilpotent(c), uniton_type.gamma()])
