from fractions import Fraction

import pytest
from conftest import rational_matrix

from exactalg.rational_function import GaussianRational
from loopalg.factors import ConstantInvertible, DiagonalHom, Explicit, ExpNilpotent, LoopProduct
from loopalg.matrices import LaurentMatrix, RatMatrix
from loopalg.operations import VerifyMode, circle_action, dressing, gauge, maurer_cartan, verify_extended
from loopalg.series import dexp_series, nilpotent_exp
from utils.exceptions import InvalidInputError, NotNilpotentError

E12 = rational_matrix([["0", "1"], ["0", "0"]])


def canonical_loop(d: str = "1/4*z^4") -> LoopProduct:
    b = LaurentMatrix(
        3,
        {
            -1: rational_matrix([["0", "z", "z^2"], ["0", "0", "z^3"], ["0", "0", "0"]]),
            -2: rational_matrix([["0", "0", d], ["0", "0", "0"], ["0", "0", "0"]]),
        },
    )
    return LoopProduct(3, [ExpNilpotent(b)])


class TestSeries:
    def test_exp_truncates(self):
        n = LaurentMatrix.constant(rational_matrix([["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]]))
        expected = rational_matrix([["1", "1", "1/2"], ["0", "1", "1"], ["0", "0", "1"]])
        assert nilpotent_exp(n) == LaurentMatrix.constant(expected)

    def test_exp_of_lambda_coefficient(self, exp_loop):
        expanded = exp_loop.expand()
        assert expanded.support() == [-1, 0]
        assert expanded.coefficient(-1) == rational_matrix([["0", "z"], ["0", "0"]])

    @pytest.mark.parametrize(
        "coeffs",
        [
            {0: [["0", "1"], ["1", "0"]]},
            {-1: [["0", "1"], ["0", "0"]], -2: [["0", "0"], ["1", "0"]]},
        ],
    )
    def test_not_nilpotent(self, coeffs):
        b = LaurentMatrix(2, {p: rational_matrix(rows) for p, rows in coeffs.items()})
        with pytest.raises(NotNilpotentError):
            ExpNilpotent(b)

    def test_dexp_cancels_second_order_pole(self):
        b1 = rational_matrix([["0", "z", "0"], ["0", "0", "z^2"], ["0", "0", "0"]])
        b2 = rational_matrix([["0", "0", "z^3/6"], ["0", "0", "0"], ["0", "0", "0"]])
        mc = dexp_series(LaurentMatrix(3, {-1: b1, -2: b2}))
        assert mc.coefficient(-2).is_zero
        assert mc.coefficient(-1) == b1.derivative()


class TestVerify:
    def test_exp_loop_is_normalized(self, exp_loop):
        report = verify_extended(exp_loop, VerifyMode.NORMALIZED)
        assert report.accepted
        assert report.a_coefficient == E12

    def test_canonical_loop_accepted(self):
        report = verify_extended(canonical_loop(), "normalized")
        assert report.accepted
        assert report.offending_powers == []
        assert report.a_coefficient == rational_matrix(
            [["0", "1", "2*z"], ["0", "0", "3*z^2"], ["0", "0", "0"]]
        )

    def test_perturbed_potential_rejected(self):
        report = verify_extended(canonical_loop("1/4*z^4 + z"))
        assert not report.accepted
        assert report.offending_powers == [-2]

    def test_explicit_factor_agrees_with_exp(self, exp_loop):
        loop = LaurentMatrix(2, {0: RatMatrix.identity(2), -1: rational_matrix([["0", "z"], ["0", "0"]])})
        inverse = LaurentMatrix(2, {0: RatMatrix.identity(2), -1: rational_matrix([["0", "-z"], ["0", "0"]])})
        explicit = LoopProduct.of(Explicit(loop, inverse))
        assert maurer_cartan(explicit) == maurer_cartan(exp_loop)


class TestOperations:
    def test_circle_action_rescales(self, exp_loop):
        scaled = circle_action(GaussianRational(Fraction(2), Fraction(0)), exp_loop)
        assert scaled.expand().coefficient(-1) == rational_matrix([["0", "z/2"], ["0", "0"]])
        assert verify_extended(scaled, VerifyMode.NORMALIZED).accepted

    def test_circle_action_on_diagonal_adds_constant(self):
        h = LoopProduct.of(DiagonalHom([1, 0]))
        scaled = circle_action(GaussianRational(Fraction(3), Fraction(0)), h)
        assert [f.kind for f in scaled.factors] == ["const", "diag"]
        assert scaled.expand().coefficient(1) == rational_matrix([["3", "0"], ["0", "0"]])

    def test_circle_action_composes(self, exp_loop):
        h = LoopProduct.of(DiagonalHom([1, 0])) * exp_loop
        alpha = GaussianRational(Fraction(2), Fraction(0))
        beta = GaussianRational(Fraction(3), Fraction(1))
        product = GaussianRational(Fraction(6), Fraction(2))
        twice = circle_action(alpha, circle_action(beta, h))
        assert twice.expand() == circle_action(product, h).expand()
        assert circle_action(beta, circle_action(alpha, h)).expand() == twice.expand()

    def test_circle_action_rejects_zero(self, exp_loop):
        with pytest.raises(InvalidInputError):
            circle_action(GaussianRational(Fraction(0), Fraction(0)), exp_loop)

    def test_dressing_keeps_maurer_cartan(self, exp_loop):
        dressed = dressing(LoopProduct.of(DiagonalHom([1, 0])), exp_loop)
        assert maurer_cartan(dressed) == maurer_cartan(exp_loop)

    def test_dressing_needs_constant_loop(self, exp_loop):
        gamma = LoopProduct.of(ConstantInvertible(rational_matrix([["1", "z"], ["0", "1"]])))
        with pytest.raises(InvalidInputError):
            dressing(gamma, exp_loop)

    def test_gauge_moves_pole(self, exp_loop):
        gauged = gauge(exp_loop, LoopProduct.of(DiagonalHom([0, 1])))
        mc = maurer_cartan(gauged)
        assert mc.support() == [0]
        assert mc.coefficient(0) == E12
        assert verify_extended(gauged).accepted
        assert verify_extended(gauged, VerifyMode.NORMALIZED).offending_powers == [0]

    def test_gauge_rejects_negative_powers(self, exp_loop):
        with pytest.raises(InvalidInputError):
            gauge(exp_loop, LoopProduct.of(DiagonalHom([-1, 0])))


class TestLoopProduct:
    def test_inverse(self):
        h = canonical_loop() * LoopProduct.of(DiagonalHom([2, 1, 0]))
        assert (h * h.inverse()).expand().is_identity()
        assert h.expand() * h.expand_inverse() == LaurentMatrix.identity(3)

    def test_size_mismatch(self, exp_loop):
        with pytest.raises(InvalidInputError):
            exp_loop * canonical_loop()

    def test_explicit_checks_inverse(self):
        with pytest.raises(InvalidInputError):
            Explicit(LaurentMatrix.identity(2), LaurentMatrix.diagonal_hom([1, 0]))

    def test_constant_inverse_computed(self):
        m = rational_matrix([["2", "z"], ["0", "1"]])
        factor = ConstantInvertible(m)
        assert factor.matrix @ factor.inverse_matrix == RatMatrix.identity(2)
        assert factor.maurer_cartan().coefficient(0) == rational_matrix([["0", "1/2"], ["0", "0"]])

    def test_z_independence(self, exp_loop):
        assert LoopProduct.of(DiagonalHom([1, 0])).is_z_independent()
        assert not exp_loop.is_z_independent()
