from fractions import Fraction
from functools import cached_property
from typing import List, NamedTuple, Tuple, Union

import numpy as np
from sympy import I, Poly, Rational, Symbol, sympify
from sympy import im as sym_im
from sympy import re as sym_re
from sympy.polys.domains import QQ_I

from utils.exceptions import InvalidInputError, NumericalFailure

z = Symbol("z")


class GaussianRational(NamedTuple):
    """Exact element of Q(i); Fraction keeps both parts in lowest terms"""

    re: Fraction
    im: Fraction

    @classmethod
    def from_expr(cls, value) -> "GaussianRational":
        value = sympify(value)
        real_part, imag_part = sym_re(value), sym_im(value)
        if not (real_part.is_Rational and imag_part.is_Rational):
            raise InvalidInputError(f"Not a Gaussian rational: {value}")
        return cls(
            Fraction(int(real_part.p), int(real_part.q)),
            Fraction(int(imag_part.p), int(imag_part.q)),
        )

    @classmethod
    def from_parts(cls, re_n: int, re_d: int, im_n: int, im_d: int) -> "GaussianRational":
        if re_d == 0 or im_d == 0:
            raise InvalidInputError("Zero denominator in Gaussian rational")
        return cls(Fraction(re_n, re_d), Fraction(im_n, im_d))

    def to_expr(self):
        return Rational(self.re.numerator, self.re.denominator) + I * Rational(
            self.im.numerator, self.im.denominator
        )

    def to_parts(self) -> List[int]:
        return [
            self.re.numerator,
            self.re.denominator,
            self.im.numerator,
            self.im.denominator,
        ]

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


Scalar = Union[int, Fraction, GaussianRational, "RationalFunction"]


def _poly(expr) -> Poly:
    return Poly(expr, z, domain=QQ_I)


_ZERO = _poly(0)
_ONE = _poly(1)


class RationalFunction:
    """
    Exact element of Q(i)(z)
    immutable, num/den coprime with den monic so equal values compare equal
    """

    def __init__(self, num: Poly, den: Poly = _ONE, _reduced: bool = False):
        if den.is_zero:
            raise InvalidInputError("Denominator is the zero polynomial")

        if not _reduced:
            if num.is_zero:
                num, den = _ZERO, _ONE
            elif den.degree() > 0:
                g = num.gcd(den)
                if g.degree() > 0:
                    num = num.exquo(g)
                    den = den.exquo(g)
            lc = den.LC()
            if lc != 1:
                num = num.quo_ground(lc)
                den = den.monic()

        self.num = num
        self.den = den

    # constructors

    @classmethod
    def from_expr(cls, expr) -> "RationalFunction":
        expr = sympify(expr).together()
        numerator, denominator = expr.as_numer_denom()
        return cls(_poly(numerator), _poly(denominator))

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        if isinstance(value, GaussianRational):
            value = value.to_expr()
        elif isinstance(value, Fraction):
            value = Rational(value.numerator, value.denominator)
        return cls(_poly(value), _ONE, _reduced=True)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return _RF_ZERO

    @classmethod
    def one(cls) -> "RationalFunction":
        return _RF_ONE

    @classmethod
    def variable(cls) -> "RationalFunction":
        return cls(_poly(z), _ONE, _reduced=True)

    @classmethod
    def from_coefficients(
        cls, num: List[GaussianRational], den: List[GaussianRational]
    ) -> "RationalFunction":
        """Ascending coefficient lists, as in the JSON object form"""
        return cls(_poly_from_ascending(num), _poly_from_ascending(den))

    # predicates

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self.num.degree() <= 0

    def constant_value(self) -> GaussianRational:
        if not self.is_constant:
            raise InvalidInputError(f"{self} is not constant")
        return GaussianRational.from_expr(self.num.LC() if not self.is_zero else 0)

    # coefficient access

    def num_coefficients(self) -> List[GaussianRational]:
        return _ascending(self.num)

    def den_coefficients(self) -> List[GaussianRational]:
        return _ascending(self.den)

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    # arithmetic

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RationalFunction.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return _RF_ZERO
        if self.is_polynomial and other.is_polynomial:
            return RationalFunction(self.num * other.num, _ONE, _reduced=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("RationalFunction division by zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent, _reduced=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(self.num.all_coeffs()), tuple(self.den.all_coeffs())))

    # calculus

    def derivative(self) -> "RationalFunction":
        if self.is_polynomial:
            return RationalFunction(self.num.diff(z), _ONE, _reduced=True)
        return RationalFunction(
            self.num.diff(z) * self.den - self.num * self.den.diff(z), self.den**2
        )

    def split_polynomial_part(self) -> Tuple[Poly, Poly]:
        """Returns (polynomial part, proper numerator); proper part is numerator/den"""
        quotient, remainder = self.num.div(self.den)
        return quotient, remainder

    def compose_reciprocal(self) -> "RationalFunction":
        """f(1/z) as a rational function of z (the chart at infinity)"""
        if self.is_zero:
            return self
        dn, dd = self.num.degree(), self.den.degree()
        num = _poly_from_ascending(list(reversed(self.num_coefficients())))
        den = _poly_from_ascending(list(reversed(self.den_coefficients())))
        shift = _poly(z ** abs(dd - dn))
        if dd >= dn:
            return RationalFunction(num * shift, den)
        return RationalFunction(num, den * shift)

    # numerics

    @cached_property
    def _numeric_coefficients(self) -> Tuple[np.ndarray, np.ndarray]:
        return (
            np.array([complex(c) for c in self.num.all_coeffs()], dtype=complex),
            np.array([complex(c) for c in self.den.all_coeffs()], dtype=complex),
        )

    def evaluate(self, point: complex) -> complex:
        num, den = self._numeric_coefficients
        den_value = np.polyval(den, point)
        if den_value == 0:
            raise NumericalFailure(f"Pole of {self} at z = {point}")
        return complex(np.polyval(num, point) / den_value)

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        num, den = self._numeric_coefficients
        return np.polyval(num, points) / np.polyval(den, points)

    def denominator_at(self, point: complex) -> complex:
        return complex(np.polyval(self._numeric_coefficients[1], point))

    def __repr__(self):
        from exactalg.text_format import format_rational

        return f"RationalFunction({format_rational(self)!r})"

    def __str__(self):
        from exactalg.text_format import format_rational

        return format_rational(self)


def _ascending(poly: Poly) -> List[GaussianRational]:
    if poly.is_zero:
        return []
    return [GaussianRational.from_expr(c) for c in reversed(poly.all_coeffs())]


def _poly_from_ascending(coeffs: List[GaussianRational]) -> Poly:
    if not coeffs:
        return _ZERO
    expr = sum((c.to_expr() * z**i for i, c in enumerate(coeffs)), Rational(0))
    return _poly(expr)


_RF_ZERO = RationalFunction(_ZERO, _ONE, _reduced=True)
_RF_ONE = RationalFunction(_ONE, _ONE, _reduced=True)

ZERO = _RF_ZERO
ONE = _RF_ONE
