from canonical.bounds import EXCEPTIONAL_BOUNDS, uniton_bound
from canonical.frames import cpn_frame, s1_invariance_check
from canonical.potential import (
    CanonicalPotential,
    big_cell_loop,
    build_H,
    solve_canonical,
    to_big_cell,
)
from canonical.uniton_type import BlockProfile, UnitonType, enumerate_types

__all__ = [
    "EXCEPTIONAL_BOUNDS",
    "BlockProfile",
    "CanonicalPotential",
    "UnitonType",
    "big_cell_loop",
    "build_H",
    "cpn_frame",
    "enumerate_types",
    "s1_invariance_check",
    "solve_canonical",
    "to_big_cell",
    "uniton_bound",
]
