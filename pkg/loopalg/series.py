from fractions import Fraction
from math import factorial

from custom_logging.custom_logger import get_logger
from loopalg.matrices import LaurentMatrix
from utils.exceptions import NotNilpotentError

clogger = get_logger()
MODULE_NAME = "LOOP_SERIES"


def check_nilpotent(b: LaurentMatrix) -> None:
    """B^n must vanish over the field of rational functions in (z, lambda)"""
    if b.is_zero:
        return
    if not (b**b.n).is_zero:
        clogger.debug(f"[{MODULE_NAME}] B^{b.n} != 0 for {b!r}")
        raise NotNilpotentError(f"Matrix is not nilpotent: B^{b.n} != 0")


def nilpotent_exp(b: LaurentMatrix) -> LaurentMatrix:
    """exp B as the finite sum over j < n of B^j / j!"""
    check_nilpotent(b)
    result = LaurentMatrix.identity(b.n)
    term = LaurentMatrix.identity(b.n)
    for j in range(1, b.n):
        term = term * b
        if term.is_zero:
            break
        result = result + term.scale(Fraction(1, factorial(j)))
    return result


def dexp_series(b: LaurentMatrix) -> LaurentMatrix:
    """
    (exp B)^-1 (exp B)' = sum over m of (-1)^m / (m+1)! (ad B)^m B'
    (ad B)^m vanishes for m > 2n - 2
    """
    check_nilpotent(b)
    term = b.derivative()
    result = LaurentMatrix.zero(b.n)
    for m in range(2 * b.n - 1):
        if term.is_zero:
            break
        result = result + term.scale(Fraction((-1) ** m, factorial(m + 1)))
        term = b.commutator(term)
    return result
