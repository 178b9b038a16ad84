from typing import List, Sequence

import numpy as np

from canonical.uniton_type import UnitonType
from exactalg.rational_function import ZERO, GaussianRational, RationalFunction
from loopalg.matrices import RatMatrix


def _integer_coefficients(coeffs: Sequence[int]) -> List[GaussianRational]:
    return [GaussianRational.from_parts(int(c), 1, 0, 1) for c in coeffs]


def random_polynomial(
    rng: np.random.Generator, max_degree: int = 3, bound: int = 3
) -> RationalFunction:
    """Integer-coefficient polynomial, never identically zero"""
    while True:
        degree = int(rng.integers(0, max_degree + 1))
        coeffs = rng.integers(-bound, bound + 1, size=degree + 1)
        if coeffs.any():
            return RationalFunction.from_coefficients(
                _integer_coefficients(coeffs), _integer_coefficients([1])
            )


def random_pole_function(
    rng: np.random.Generator, max_den_degree: int = 5, bound: int = 3
) -> RationalFunction:
    """Proper fraction with a monic integer denominator of degree 1..max_den_degree"""
    den_degree = int(rng.integers(1, max_den_degree + 1))
    den = list(rng.integers(-bound, bound + 1, size=den_degree)) + [1]
    num = list(rng.integers(-bound, bound + 1, size=den_degree))
    if not any(num):
        num[0] = 1
    return RationalFunction.from_coefficients(
        _integer_coefficients(num), _integer_coefficients(den)
    )


def random_b1(
    uniton_type: UnitonType, rng: np.random.Generator, max_degree: int = 3
) -> RatMatrix:
    """Polynomial B_1 filling every entry permitted by p^0_v"""
    n = uniton_type.n
    rows: List[List[RationalFunction]] = [[ZERO] * n for _ in range(n)]
    for r, s in uniton_type.profile(0).allowed_entries():
        rows[r][s] = random_polynomial(rng, max_degree)
    return RatMatrix(rows)
