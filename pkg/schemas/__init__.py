from schemas.algebra import (
    Entry,
    FactorKindEnum,
    LaurentSchema,
    LoopSchema,
    PotentialSchema,
    factor_to_schema,
    matrix_to_rows,
    parse_factor,
)
from schemas.planes import FrenetSchema, PlaneSchema, U3DataSchema, split_vector
from schemas.reports import (
    CesReportSchema,
    DeformationReportSchema,
    DegreeReportSchema,
    ExtendedReportSchema,
    FactorReportSchema,
    FactorizationSchema,
    GenerateResultSchema,
    ObstructionSchema,
    ResidualReportSchema,
    TypeListSchema,
    WitnessReportSchema,
)

__all__ = [
    "CesReportSchema",
    "DeformationReportSchema",
    "DegreeReportSchema",
    "Entry",
    "ExtendedReportSchema",
    "FactorKindEnum",
    "FactorReportSchema",
    "FactorizationSchema",
    "FrenetSchema",
    "GenerateResultSchema",
    "LaurentSchema",
    "LoopSchema",
    "ObstructionSchema",
    "PlaneSchema",
    "PotentialSchema",
    "ResidualReportSchema",
    "TypeListSchema",
    "U3DataSchema",
    "WitnessReportSchema",
    "factor_to_schema",
    "matrix_to_rows",
    "parse_factor",
    "split_vector",
]
