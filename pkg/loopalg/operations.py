from enum import Enum
from typing import List, NamedTuple, Optional

from custom_logging.custom_logger import get_logger
from exactalg.rational_function import GaussianRational
from loopalg.factors import LoopProduct
from loopalg.matrices import LaurentMatrix, RatMatrix
from utils.exceptions import InvalidInputError

clogger = get_logger()
MODULE_NAME = "LOOP_OPERATIONS"


class VerifyMode(str, Enum):
    GENERAL = "general"
    NORMALIZED = "normalized"


class ExtendedReport(NamedTuple):
    accepted: bool
    mode: VerifyMode
    offending_powers: List[int]
    a_coefficient: Optional[RatMatrix]
    maurer_cartan: LaurentMatrix


def maurer_cartan(h: LoopProduct) -> LaurentMatrix:
    """H^-1 H' folded factor by factor: (PQ)^-1 (PQ)' = Q^-1 (P^-1 P') Q + Q^-1 Q'"""
    acc = LaurentMatrix.zero(h.n)
    for factor in h.factors:
        if not acc.is_zero:
            acc = factor.conjugate(acc)
        acc = acc + factor.maurer_cartan()
    return acc


def verify_extended(h: LoopProduct, mode: VerifyMode = VerifyMode.GENERAL) -> ExtendedReport:
    mode = VerifyMode(mode)
    mc = maurer_cartan(h)
    if mode == VerifyMode.NORMALIZED:
        offending = [p for p in mc.support() if p != -1]
    else:
        offending = [p for p in mc.support() if p < -1]

    report = ExtendedReport(
        accepted=not offending,
        mode=mode,
        offending_powers=offending,
        a_coefficient=mc.coefficient(-1),
        maurer_cartan=mc,
    )
    clogger.debug(
        f"[{MODULE_NAME}] verify_extended({mode.value}): accepted={report.accepted}, "
        f"offending={offending}"
    )
    return report


def circle_action(alpha: GaussianRational, h: LoopProduct) -> LoopProduct:
    """lambda -> alpha * lambda in every factor"""
    if alpha.is_zero():
        raise InvalidInputError("Circle action needs a nonzero scalar")
    factors = []
    for factor in h.factors:
        factors.extend(factor.scaled(alpha))
    return LoopProduct(h.n, factors)


def dressing(gamma: LoopProduct, h: LoopProduct) -> LoopProduct:
    """Left multiplication by a z-independent loop; leaves H^-1 H' unchanged"""
    if not gamma.is_z_independent():
        raise InvalidInputError("Dressing loop must be independent of z")
    return gamma * h


def gauge(h: LoopProduct, m: LoopProduct) -> LoopProduct:
    """Right multiplication by a loop holomorphic in lambda"""
    expanded = m.expand()
    negative = [p for p in expanded.support() if p < 0]
    if negative:
        raise InvalidInputError(f"Gauge loop has negative lambda powers {negative}")
    if any(p < 0 for p in m.expand_inverse().support()):
        clogger.warning(
            f"[{MODULE_NAME}] Gauge loop is not invertible at lambda = 0; "
            "the extended-solution property may not survive"
        )
    return h * m
