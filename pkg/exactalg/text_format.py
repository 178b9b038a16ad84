import re
from tokenize import TokenError
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union

from sympy import Float, I
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from exactalg.rational_function import GaussianRational, RationalFunction, z
from utils.exceptions import InvalidInputError

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_LOCALS = {"z": z, "I": I}

# "1/4i" -> "(1/4)*I", "2i" -> "(2)*I"; lone "i" -> "I"
_IMAGINARY_LITERAL = re.compile(r"(?<![\w.])(\d+(?:/\d+)?)i(?!\w)")
_BARE_I = re.compile(r"\bi\b")


def parse_rational(text: Union[str, int]) -> RationalFunction:
    """Parse the text syntax: Gaussian literals like (3/2+1/4i), variable z, + - * / ^"""
    if isinstance(text, int):
        return RationalFunction.constant(text)
    if not isinstance(text, str) or not text.strip():
        raise InvalidInputError(f"Empty or non-string rational function: {text!r}")

    source = _IMAGINARY_LITERAL.sub(r"(\1)*I", text)
    source = _BARE_I.sub("I", source)

    try:
        expr = parse_expr(source, local_dict=_LOCALS, transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, SympifyError, TokenError) as e:
        raise InvalidInputError(f"Cannot parse {text!r}: {e}") from e

    if expr.has(Float):
        raise InvalidInputError(f"Floating-point literal in {text!r}")
    extra = {s for s in expr.free_symbols if s != z}
    if extra:
        names = ", ".join(sorted(str(s) for s in extra))
        raise InvalidInputError(f"Unknown symbol(s) {names} in {text!r}")

    try:
        return RationalFunction.from_expr(expr)
    except (PolynomialError, CoercionFailed, ZeroDivisionError) as e:
        raise InvalidInputError(f"{text!r} is not a rational function of z: {e}") from e


def format_gaussian(c: GaussianRational) -> str:
    if c.im == 0:
        return _format_fraction(c.re)
    if c.re == 0:
        return f"{_format_fraction(c.im)}i"
    sign = "-" if c.im < 0 else "+"
    return f"({_format_fraction(c.re)}{sign}{_format_fraction(abs(c.im))}i)"


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _split_sign(c: GaussianRational) -> Tuple[str, GaussianRational]:
    if (c.im == 0 and c.re < 0) or (c.re == 0 and c.im < 0):
        return "-", GaussianRational(-c.re, -c.im)
    return "+", c


def format_polynomial(coeffs: List[GaussianRational]) -> str:
    """Ascending coefficients in, highest power printed first"""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c.is_zero():
            continue
        sign, magnitude = _split_sign(c)
        if power == 0:
            body = format_gaussian(magnitude)
        else:
            monomial = "z" if power == 1 else f"z^{power}"
            if magnitude == GaussianRational(Fraction(1), Fraction(0)):
                body = monomial
            else:
                body = f"{format_gaussian(magnitude)}*{monomial}"
        terms.append((sign, body))

    if not terms:
        return "0"

    first_sign, first_body = terms[0]
    text = f"-{first_body}" if first_sign == "-" else first_body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text


def format_rational(f: RationalFunction) -> str:
    num = format_polynomial(f.num_coefficients())
    if f.is_polynomial:
        return num
    return f"({num})/({format_polynomial(f.den_coefficients())})"


def rational_to_json(f: RationalFunction) -> Dict[str, List[List[int]]]:
    return {
        "num": [c.to_parts() for c in f.num_coefficients()],
        "den": [c.to_parts() for c in f.den_coefficients()],
    }


def rational_from_json(data: Dict[str, Any]) -> RationalFunction:
    try:
        num = [GaussianRational.from_parts(*entry) for entry in data["num"]]
        den = [GaussianRational.from_parts(*entry) for entry in data["den"]]
    except (KeyError, TypeError) as e:
        raise InvalidInputError(f"Malformed rational function object: {data!r}") from e
    return RationalFunction.from_coefficients(num, den)


def to_rational(value: Any) -> RationalFunction:
    """Accepts the text syntax, an int or the JSON object form"""
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, dict):
        return rational_from_json(value)
    return parse_rational(value)
