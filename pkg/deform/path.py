"""
Uniton-number-lowering deformation of U_3 type (2,1,0) extended solutions

Data (alpha, beta, delta) stands for
    W = (A_0 + lambda delta E_13) diag(lambda^2, lambda, 1) H_+,
    A_0 = [[1, gamma, alpha], [0, 1, beta], [0, 0, 1]],  alpha' = gamma beta'
Along the path alpha and beta keep their value at a base point and have the rest
scaled by (1 - t); delta does not move. The endpoint is dressed by
diag(lambda^-1, 1, 1) A_0^-1, which brings it to width 1.
"""

from fractions import Fraction
from typing import List, NamedTuple, Optional, Union

from sympy import Rational

from canonical.uniton_type import UnitonType
from custom_logging.custom_logger import get_logger
from exactalg.rational_function import ONE, ZERO, GaussianRational, RationalFunction
from grassmann.loops import model_from_loop
from grassmann.model_space import PlaneFamily
from loopalg.factors import ConstantInvertible, DiagonalHom, ExpNilpotent, LoopProduct
from loopalg.matrices import LaurentMatrix, RatMatrix
from loopalg.series import nilpotent_exp
from utils.exceptions import InvalidInputError

clogger = get_logger()
MODULE_NAME = "DEFORM_PATH"

TYPE_210 = UnitonType((2, 1, 0))
HALF = Fraction(1, 2)
BasePoint = Union[int, Fraction, GaussianRational]


def value_at(f: RationalFunction, point: BasePoint) -> RationalFunction:
    """f(point) as a constant; raises at a pole"""
    if isinstance(point, GaussianRational):
        point = point.to_expr()
    elif isinstance(point, Fraction):
        point = Rational(point.numerator, point.denominator)
    den = f.den.eval(point)
    if den == 0:
        raise InvalidInputError(f"{f} has a pole at the base point {point}")
    return RationalFunction.constant(GaussianRational.from_expr(f.num.eval(point) / den))


class U3Data:
    """Canonical (2,1,0) data; gamma is derived as alpha'/beta' unless beta is constant"""

    def __init__(
        self,
        alpha: RationalFunction,
        beta: RationalFunction,
        delta: RationalFunction,
        gamma: Optional[RationalFunction] = None,
    ):
        d_alpha, d_beta = alpha.derivative(), beta.derivative()
        if gamma is None:
            if not d_beta.is_zero:
                gamma = d_alpha / d_beta
            elif d_alpha.is_zero:
                gamma = ZERO
            else:
                raise InvalidInputError(
                    "beta is constant but alpha is not: no gamma solves alpha' = gamma beta'"
                )
        elif d_alpha != gamma * d_beta:
            raise InvalidInputError("Data violates alpha' = gamma beta'")
        self.alpha = alpha
        self.beta = beta
        self.delta = delta
        self.gamma = gamma

    @classmethod
    def from_big_cell(cls, c: LaurentMatrix) -> "U3Data":
        """Read (alpha, beta, gamma, delta) off C = C_0 + lambda C_1"""
        if c.n != 3:
            raise InvalidInputError(f"Big-cell matrix has size {c.n}, expected 3")
        a0 = nilpotent_exp(LaurentMatrix.constant(c.coefficient(0))).coefficient(0)
        return cls(a0[0][2], a0[1][2], c.coefficient(1)[0][2], gamma=a0[0][1])

    def a0(self) -> RatMatrix:
        return RatMatrix(
            [[ONE, self.gamma, self.alpha], [ZERO, ONE, self.beta], [ZERO, ZERO, ONE]]
        )

    def big_cell(self) -> LaurentMatrix:
        c0 = RatMatrix(
            [
                [ZERO, self.gamma, self.alpha - self.gamma * self.beta * HALF],
                [ZERO, ZERO, self.beta],
                [ZERO, ZERO, ZERO],
            ]
        )
        return LaurentMatrix(3, {0: c0, 1: RatMatrix.unit(3, 0, 2, self.delta)})

    def loop(self) -> LoopProduct:
        """exp C; the plane is this times gamma_v H_+"""
        return LoopProduct(3, [ExpNilpotent(self.big_cell())])

    def plane(self) -> PlaneFamily:
        return model_from_loop(self.loop(), TYPE_210)

    def x0_vector(self) -> List[RationalFunction]:
        """A_0 E_0 = (alpha, beta, 1)"""
        return [self.alpha, self.beta, ONE]

    def __repr__(self):
        return f"U3Data(alpha={self.alpha}, beta={self.beta}, gamma={self.gamma}, delta={self.delta})"


class PathPoint(NamedTuple):
    t: Fraction
    data: U3Data


class DeformationPath:
    def __init__(
        self,
        start: U3Data,
        points: List[PathPoint],
        premultiplier: LoopProduct,
        gamma_reset: bool,
    ):
        self.start = start
        self.points = points
        self.premultiplier = premultiplier
        # gamma was not constant and is set to 0 at t = 1
        self.gamma_reset = gamma_reset

    @property
    def ts(self) -> List[Fraction]:
        return [p.t for p in self.points]

    @property
    def endpoint(self) -> U3Data:
        return self.points[-1].data

    def __repr__(self):
        return f"DeformationPath(grid={len(self.points)}, gamma_reset={self.gamma_reset}, start={self.start!r})"


def endpoint_premultiplier(endpoint: U3Data) -> LoopProduct:
    """
    diag(lambda^-1, 1, 1) A_0^-1 for an endpoint with constant A_0: the dressing
    arranges A_0 = I, after which lambda H_+ <= W <= H_+
    """
    a0 = endpoint.a0()
    if not a0.is_z_independent():
        raise InvalidInputError(f"Endpoint A_0 is not constant: {endpoint!r}")
    return LoopProduct.of(DiagonalHom([-1, 0, 0]), ConstantInvertible(a0).inverse())


def lowering_path(start: U3Data, m: int, base_point: BasePoint = 0) -> DeformationPath:
    """
    alpha_t = alpha(z*) + (1 - t)(alpha - alpha(z*)), likewise beta, on t = j/m.
    For t < 1 gamma = alpha'/beta' is unchanged; at t = 1 beta is constant, so a
    non-constant gamma is set to 0 there.
    """
    if m < 1:
        raise InvalidInputError(f"Grid size must be at least 1, got {m}")
    if start.delta.is_zero:
        raise InvalidInputError(
            "delta is identically zero: perturb delta so its zeros carry the degree, then deform"
        )

    alpha_star = value_at(start.alpha, base_point)
    beta_star = value_at(start.beta, base_point)
    gamma_reset = not start.gamma.derivative().is_zero
    points = []
    for j in range(m + 1):
        t = Fraction(j, m)
        s = 1 - t
        gamma = ZERO if (j == m and gamma_reset) else start.gamma
        data = U3Data(
            alpha_star + (start.alpha - alpha_star) * s,
            beta_star + (start.beta - beta_star) * s,
            start.delta,
            gamma=gamma,
        )
        points.append(PathPoint(t, data))

    if gamma_reset:
        clogger.warning(
            f"[{MODULE_NAME}] gamma = {start.gamma} is not constant; the degree is kept "
            "only when the zeros of delta carry it"
        )
    clogger.info(f"[{MODULE_NAME}] path of {m + 1} points from {start!r}")
    return DeformationPath(start, points, endpoint_premultiplier(points[-1].data), gamma_reset)
