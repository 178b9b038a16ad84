from exactalg.integration import (
    IntegrationObstruction,
    hermite_reduce,
    integrate,
    is_integrable,
    sphere_degree_data,
)
from exactalg.rational_function import ONE, ZERO, GaussianRational, RationalFunction, z
from exactalg.text_format import (
    format_rational,
    parse_rational,
    rational_from_json,
    rational_to_json,
    to_rational,
)

__all__ = [
    "ONE",
    "ZERO",
    "GaussianRational",
    "IntegrationObstruction",
    "RationalFunction",
    "format_rational",
    "hermite_reduce",
    "integrate",
    "is_integrable",
    "parse_rational",
    "rational_from_json",
    "rational_to_json",
    "sphere_degree_data",
    "to_rational",
    "z",
]
