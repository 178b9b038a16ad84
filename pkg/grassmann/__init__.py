from grassmann.degree import (
    pluecker_degree,
    schubert_count,
    schubert_test_space,
    x0_ambient_columns,
    x0_degree_matches,
    x0_degrees,
)
from grassmann.extended import CesReport, CesViolation, check_ces, echelon_split, generate_from_X
from grassmann.frenet import FRENET_ROWS, FrenetData, frenet, frenet_data_from_big_cell
from grassmann.loops import apply_loop, extract_X0, model_from_loop, plane_of_loop
from grassmann.model_space import ModelSpace, PlaneFamily, slot_support

__all__ = [
    "FRENET_ROWS",
    "CesReport",
    "CesViolation",
    "FrenetData",
    "ModelSpace",
    "PlaneFamily",
    "apply_loop",
    "check_ces",
    "echelon_split",
    "extract_X0",
    "frenet",
    "frenet_data_from_big_cell",
    "generate_from_X",
    "model_from_loop",
    "pluecker_degree",
    "plane_of_loop",
    "schubert_count",
    "schubert_test_space",
    "slot_support",
    "x0_ambient_columns",
    "x0_degree_matches",
    "x0_degrees",
]
