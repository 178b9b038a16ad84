from unitary.eells_wood import cartan_embedding, eells_wood, gram_schmidt
from unitary.factorization import (
    PeelConvention,
    UnitonFactorization,
    loop_unitarity_error,
    phi_at,
    roundtrip_error,
    uniton_factorize,
)
from unitary.harmonic import (
    HarmonicSample,
    ResidualReport,
    check_unitary,
    constant_discrepancy,
    convergence_study,
    grid_points,
    harmonic_residual,
    phi_of_plane,
    sample_harmonic_map,
    write_phi_csv,
)
from unitary.numeric_plane import NumericPlane, evaluate_plane

__all__ = [
    "HarmonicSample",
    "NumericPlane",
    "PeelConvention",
    "ResidualReport",
    "UnitonFactorization",
    "cartan_embedding",
    "check_unitary",
    "constant_discrepancy",
    "convergence_study",
    "eells_wood",
    "evaluate_plane",
    "grid_points",
    "gram_schmidt",
    "harmonic_residual",
    "loop_unitarity_error",
    "phi_at",
    "phi_of_plane",
    "roundtrip_error",
    "sample_harmonic_map",
    "uniton_factorize",
    "write_phi_csv",
]
