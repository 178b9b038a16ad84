from fractions import Fraction

import numpy as np
import pytest

from canonical.random_instances import random_pole_function, random_polynomial
from exactalg.integration import IntegrationObstruction, integrate, is_integrable, sphere_degree_data
from exactalg.linear_algebra import (
    determinant,
    from_field,
    in_span,
    inverse,
    matmul,
    rank,
    rref,
    to_field,
)
from exactalg.rational_function import GaussianRational, RationalFunction
from exactalg.residues import has_nonzero_residue, residue_report, residues
from exactalg.text_format import (
    format_rational,
    parse_rational,
    rational_from_json,
    rational_to_json,
    to_rational,
)
from utils.exceptions import InvalidInputError, NumericalFailure

R = parse_rational


class TestParsing:
    def test_polynomial(self):
        f = R("z^2 + 1")
        assert f.is_polynomial
        assert f.num.degree() == 2
        assert f.evaluate(2) == 5

    def test_gaussian_literal(self):
        f = R("(3/2+1/4i)")
        assert f.is_constant
        assert f.constant_value() == GaussianRational(Fraction(3, 2), Fraction(1, 4))

    def test_lone_i(self):
        assert R("i*z") * R("i*z") == R("-z^2")

    def test_fraction_is_reduced(self):
        f = R("(z^2 - 1)/(z - 1)")
        assert f == R("z + 1")
        assert f.is_polynomial

    def test_denominator_made_monic(self):
        f = R("1/(2*z)")
        assert f.den == R("z").num
        assert f.num_coefficients() == [GaussianRational(Fraction(1, 2), Fraction(0))]

    @pytest.mark.parametrize("text", ["", "2.5*z", "x + 1", "z +* 2"])
    def test_rejects(self, text):
        with pytest.raises(InvalidInputError):
            R(text)

    def test_int_input(self):
        assert R(3) == RationalFunction.constant(3)


class TestFormatting:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("z^3/6", "1/6*z^3"),
            ("1/z", "(1)/(z)"),
            ("-z + 2", "-z + 2"),
            ("0", "0"),
            ("2*i*z", "2i*z"),
        ],
    )
    def test_format(self, text, expected):
        assert format_rational(R(text)) == expected

    def test_format_parses_back(self):
        f = R("(z^2 + (1+2i)*z - 3)/(z^3 - 1/2)")
        assert R(format_rational(f)) == f

    def test_json_object_form(self):
        f = R("(z + i)/(z^2 + 1)")
        assert rational_from_json(rational_to_json(f)) == f

    def test_object_form_input(self):
        data = {"num": [[1, 1, 0, 1]], "den": [[0, 1, 0, 1], [1, 1, 0, 1]]}
        assert to_rational(data) == R("1/z")

    def test_malformed_object(self):
        with pytest.raises(InvalidInputError):
            to_rational({"num": [[1, 1]]})


class TestArithmetic:
    def test_derivative_quotient_rule(self):
        assert R("1/(z-1)").derivative() == R("-1/(z-1)^2")

    def test_leibniz_rule(self, rng):
        for _ in range(10):
            f, g = random_pole_function(rng, 3), random_polynomial(rng) + random_pole_function(rng, 2)
            assert (f * g).derivative() == f.derivative() * g + f * g.derivative()

    def test_random_format_parses_back(self, rng):
        for _ in range(10):
            f = random_polynomial(rng) * GaussianRational.from_parts(1, 3, 2, 1) + random_pole_function(rng)
            assert R(format_rational(f)) == f

    def test_compose_reciprocal(self):
        assert R("z^2 + 1").compose_reciprocal() == R("(1 + z^2)/z^2")
        assert R("1/(z-2)").compose_reciprocal() == R("z/(1 - 2*z)")

    def test_evaluate_pole(self):
        with pytest.raises(NumericalFailure):
            R("1/(z-1)").evaluate(1)

    def test_sphere_degree(self):
        assert sphere_degree_data(R("z^2/(z-1)")) == (2, 2)
        with pytest.raises(InvalidInputError):
            sphere_degree_data(R("0"))


class TestIntegration:
    @pytest.mark.parametrize(
        "integrand, antiderivative",
        [
            ("z^2", "z^3/3"),
            ("1/z^2", "-1/z"),
            ("2*z/(z^2+1)^2", "-1/(z^2+1)"),
            ("1 + 1/(z-i)^3", "z - 1/(2*(z-i)^2)"),
        ],
    )
    def test_integrable(self, integrand, antiderivative):
        result = integrate(R(integrand))
        assert result == R(antiderivative)
        assert result.derivative() == R(integrand)

    def test_zero_constant_of_integration(self):
        assert integrate(R("1")) == R("z")

    @pytest.mark.parametrize("integrand", ["1/z", "1/(z^2+1)", "z/(z-1)^2"])
    def test_obstruction(self, integrand):
        result = integrate(R(integrand))
        assert isinstance(result, IntegrationObstruction)
        assert not result.remainder.is_zero
        assert not is_integrable(R(integrand))

    def test_obstruction_remainder(self):
        assert integrate(R("1/z")).remainder == R("1/z")


class TestResidues:
    def test_simple_pole(self):
        [(pole, residue)] = residues(R("1/z"))
        assert abs(pole) < 1e-40
        assert abs(residue - 1) < 1e-40

    def test_double_poles_without_residue(self):
        assert not has_nonzero_residue(R("1/z^2 + 1/(z-1)^2"))

    def test_report_lists_poles(self):
        obstruction = integrate(R("1/z + 2/(z-1)"))
        report = residue_report(obstruction)
        assert len(report) == 2
        assert {"pole", "residue"} <= set(report[0])

    def test_oracle_agrees_with_hermite(self, rng):
        for _ in range(50):
            f = random_pole_function(rng)
            assert is_integrable(f) == (not has_nonzero_residue(f)), str(f)

    def test_oracle_on_exact_derivatives(self):
        for text in ["1/z", "1/(z^2 - 2)", "z/(z-1)^2"]:
            f = R(text).derivative()
            assert is_integrable(f)
            assert not has_nonzero_residue(f)


class TestLinearAlgebra:
    def test_rank_over_function_field(self):
        assert rank([[R("1"), R("z")], [R("z"), R("z^2")]]) == 1

    def test_rref_pivots(self):
        basis, pivots = rref([[R("0"), R("z"), R("1")], [R("1"), R("0"), R("z")]])
        assert pivots == [0, 1]
        assert basis[1] == [R("0"), R("1"), R("1/z")]

    def test_determinant(self):
        assert determinant([[R("z"), R("1")], [R("1"), R("z")]]) == R("z^2 - 1")

    def test_inverse(self):
        m = [[R("1"), R("z")], [R("0"), R("1")]]
        assert matmul(m, inverse(m)) == [[R("1"), R("0")], [R("0"), R("1")]]

    def test_singular_inverse(self):
        with pytest.raises(InvalidInputError):
            inverse([[R("1"), R("z")], [R("z"), R("z^2")]])

    def test_inverse_with_poles(self):
        m = [[R("1/(z-1)"), R("i")], [R("z"), R("1/z")]]
        assert inverse(inverse(m)) == m
        assert determinant(m) == R("1/(z^2 - z) - i*z")

    def test_in_span(self):
        basis, _ = rref([[R("1"), R("z"), R("0")], [R("0"), R("1"), R("1/z")]])
        assert in_span([R("z"), R("z^2 + 1"), R("1/z")], basis)
        assert not in_span([R("0"), R("0"), R("1")], basis)
        assert in_span([R("0"), R("0"), R("0")], [])

    def test_matmul_shapes(self):
        product = matmul([[R("z"), R("1")]], [[R("1")], [R("-z")]])
        assert product == [[R("0")]]
        with pytest.raises(InvalidInputError):
            matmul([[R("z"), R("1")]], [[R("1")]])

    def test_field_conversion(self):
        f = R("(z^2 + i)/(2*z - 3)")
        assert from_field(to_field(f)) == f


def test_numeric_evaluation_matches_array():
    f = R("(z^2 + i)/(z - 3)")
    points = np.array([0.5, 1j, -2 + 0.25j])
    expected = [f.evaluate(p) for p in points]
    assert np.allclose(f.evaluate_array(points), expected)
