from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from canonical.uniton_type import UnitonType
from custom_logging.custom_logger import get_logger
from exactalg.rational_function import ZERO, RationalFunction
from grassmann.extended import generate_from_X
from grassmann.model_space import ModelSpace, PlaneFamily
from loopalg.matrices import LaurentMatrix
from loopalg.series import nilpotent_exp
from utils.exceptions import InvalidInputError, StructuralError

clogger = get_logger()
MODULE_NAME = "GRASSMANN_FRENET"

VectorFn = List[RationalFunction]
Generator = Dict[int, VectorFn]  # lambda power -> C^n part


def _d(v: VectorFn) -> VectorFn:
    return [e.derivative() for e in v]


# each row maps the named vectors to the generators of X
FRENET_ROWS: Dict[Tuple[int, ...], Tuple[Tuple[str, ...], Callable[[Mapping[str, VectorFn]], List[Generator]]]] = {
    # U_3
    (2, 1, 0): (("l", "m"), lambda d: [{0: d["l"], 1: d["m"]}]),
    (1, 1, 0): (("l",), lambda d: [{0: d["l"]}]),
    (1, 0, 0): (("l", "m"), lambda d: [{0: d["l"]}, {0: d["m"]}]),
    # U_4
    (3, 2, 1, 0): (("l", "m", "n"), lambda d: [{0: d["l"], 1: d["m"], 2: d["n"]}]),
    (2, 2, 1, 0): (("l", "m"), lambda d: [{0: d["l"], 1: d["m"]}]),
    (2, 1, 1, 0): (("l", "m", "n"), lambda d: [{0: d["l"], 1: d["m"]}, {1: d["n"]}]),
    (2, 1, 0, 0): (
        ("l", "m", "n"),
        lambda d: [{0: d["l"], 1: d["m"]}, {0: _d(d["l"]), 1: d["n"]}],
    ),
    (1, 1, 1, 0): (("l",), lambda d: [{0: d["l"]}]),
    (1, 1, 0, 0): (("l", "m"), lambda d: [{0: d["l"]}, {0: d["m"]}]),
    (1, 0, 0, 0): (("l", "m", "n"), lambda d: [{0: d["l"]}, {0: d["m"]}, {0: d["n"]}]),
}


class FrenetData:
    """Holomorphic vector functions l, m, n feeding one table row"""

    def __init__(self, row: Sequence[int], vectors: Mapping[str, Sequence[RationalFunction]]):
        row = tuple(row)
        if row not in FRENET_ROWS:
            raise InvalidInputError(f"No Frenet table row for type {row}")
        names, _ = FRENET_ROWS[row]
        missing = [name for name in names if name not in vectors]
        if missing:
            raise InvalidInputError(f"Row {row} needs vectors {names}; missing {missing}")
        n = len(row)
        for name in names:
            if len(vectors[name]) != n:
                raise InvalidInputError(
                    f"Vector {name} has length {len(vectors[name])}, row {row} needs {n}"
                )
        self.row = row
        self.type = UnitonType(row)
        self.vectors: Dict[str, VectorFn] = {name: list(vectors[name]) for name in names}

    def generators(self) -> List[Generator]:
        _, build = FRENET_ROWS[self.row]
        return build(self.vectors)

    def __repr__(self):
        return f"FrenetData(row={self.row}, vectors={sorted(self.vectors)})"


def frenet(data: FrenetData) -> PlaneFamily:
    """W = generate_from_X(X) for the X assembled from the row's table entry"""
    space = ModelSpace(data.type.n, data.type.k, 0)
    x = [space.vector_from_slots(g) for g in data.generators()]
    plane = generate_from_X(x, space)
    clogger.debug(f"[{MODULE_NAME}] frenet row {data.row}: dim W = {plane.dim}")
    return plane


def frenet_data_from_big_cell(uniton_type: UnitonType, c: LaurentMatrix) -> FrenetData:
    """
    Change of variables from C = C_0 + lambda C_1 to table data, for rows
    (2,1,0) and (2,1,1,0)
    """
    row = uniton_type.v
    a0 = nilpotent_exp(LaurentMatrix.constant(c.coefficient(0))).coefficient(0)
    c1 = c.coefficient(1)

    if row == (2, 1, 0):
        # l = (alpha, beta, 1) = A_0 e_3, m = (delta, 0, 0)
        l = a0.column(2)
        m = [c1[0][2], ZERO, ZERO]
        return FrenetData(row, {"l": l, "m": m})

    if row == (2, 1, 1, 0):
        l = a0.column(3)
        m = [c1[0][3], ZERO, ZERO, ZERO]
        q = a0.column(1)  # (g, 1, 0, 0)
        p = a0.column(2)  # (h, 0, 1, 0)
        dl = _d(l)
        if not dl[1].is_zero:
            n = p
        elif not dl[2].is_zero:
            n = q
        else:
            raise StructuralError("A_0 e_4 is constant; data has no (2,1,1,0) Frenet form")
        return FrenetData(row, {"l": l, "m": m, "n": n})

    raise InvalidInputError(f"Big-cell change of variables is tabulated for (2,1,0) and (2,1,1,0), not {row}")
