from typing import NamedTuple, Optional, Tuple, Union

from sympy import Poly

from custom_logging.custom_logger import get_logger
from exactalg.rational_function import RationalFunction, z
from utils.exceptions import InvalidInputError

clogger = get_logger()
MODULE_NAME = "EXACT_INTEGRATION"


class IntegrationObstruction(NamedTuple):
    """Hermite remainder of an integrand with a nonvanishing residue"""

    remainder: RationalFunction
    # set by callers integrating matrix entries
    level: Optional[int] = None
    entry: Optional[Tuple[int, int]] = None

    def __str__(self):
        return f"IntegrationObstruction({self.remainder})"


def _solve_diophantine(a: Poly, b: Poly, c: Poly) -> Tuple[Poly, Poly]:
    """s*a + t*b = c with deg s < deg b; a and b coprime"""
    s, _, h = a.gcdex(b)
    s = s.mul(c).exquo(h)
    s = s.rem(b)
    t = (c - s * a).exquo(b)
    return s, t


def hermite_reduce(num: Poly, den: Poly) -> Tuple[RationalFunction, RationalFunction]:
    """
    Hermite reduction of a proper fraction num/den
    returns (g, h) with num/den = g' + h and h having a squarefree denominator
    """
    g = RationalFunction.zero()
    d_minus = den.gcd(den.diff(z))
    d_star = den.exquo(d_minus)

    while d_minus.degree() > 0:
        d_minus2 = d_minus.gcd(d_minus.diff(z))
        d_minus_star = d_minus.exquo(d_minus2)
        b, c = _solve_diophantine(
            -(d_star * d_minus.diff(z)).exquo(d_minus), d_minus_star, num
        )
        num = c - (b.diff(z) * d_star).exquo(d_minus_star)
        g = g + RationalFunction(b, d_minus)
        d_minus = d_minus2

    return g, RationalFunction(num, d_star)


def integrate(f: RationalFunction) -> Union[RationalFunction, IntegrationObstruction]:
    """Antiderivative with zero constant of integration, or the logarithmic remainder"""
    if f.is_zero:
        return f
    if f.is_polynomial:
        return RationalFunction(f.num.integrate(z), f.den, _reduced=True)

    polynomial_part, proper = f.split_polynomial_part()
    g, remainder = hermite_reduce(proper, f.den)

    if not remainder.is_zero:
        clogger.debug(f"[{MODULE_NAME}] Logarithmic remainder {remainder} for {f}")
        return IntegrationObstruction(remainder)

    if polynomial_part.is_zero:
        return g
    return g + RationalFunction(polynomial_part.integrate(z))


def is_integrable(f: RationalFunction) -> bool:
    return not isinstance(integrate(f), IntegrationObstruction)


def sphere_degree_data(f: RationalFunction) -> Tuple[int, int]:
    """(zeros, poles) on the Riemann sphere counted with multiplicity"""
    if f.is_zero:
        raise InvalidInputError("The zero function has no degree on the sphere")
    count = max(f.num.degree(), f.den.degree())
    return count, count
