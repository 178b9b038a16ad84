from deform.path import (
    DeformationPath,
    PathPoint,
    U3Data,
    endpoint_premultiplier,
    lowering_path,
    value_at,
)
from deform.verification import (
    DeformationReport,
    EndpointReport,
    WitnessReport,
    connectivity_witness,
    delta_zero_count,
    sandwich_flags,
    uniton_width,
    verify_path,
)

__all__ = [
    "DeformationPath",
    "DeformationReport",
    "EndpointReport",
    "PathPoint",
    "U3Data",
    "WitnessReport",
    "connectivity_witness",
    "delta_zero_count",
    "endpoint_premultiplier",
    "lowering_path",
    "sandwich_flags",
    "uniton_width",
    "value_at",
    "verify_path",
]
