from loopalg.factors import (
    ConstantInvertible,
    DiagonalHom,
    Explicit,
    ExpNilpotent,
    LoopFactor,
    LoopProduct,
)
from loopalg.matrices import LaurentMatrix, RatMatrix
from loopalg.operations import (
    ExtendedReport,
    VerifyMode,
    circle_action,
    dressing,
    gauge,
    maurer_cartan,
    verify_extended,
)
from loopalg.series import check_nilpotent, dexp_series, nilpotent_exp

__all__ = [
    "ConstantInvertible",
    "DiagonalHom",
    "ExpNilpotent",
    "Explicit",
    "ExtendedReport",
    "LaurentMatrix",
    "LoopFactor",
    "LoopProduct",
    "RatMatrix",
    "VerifyMode",
    "check_nilpotent",
    "circle_action",
    "dexp_series",
    "dressing",
    "gauge",
    "maurer_cartan",
    "nilpotent_exp",
    "verify_extended",
]
