import pytest
from conftest import rational_matrix

from canonical.bounds import uniton_bound
from canonical.frames import cpn_frame, s1_invariance_check
from canonical.potential import CanonicalPotential, big_cell_loop, build_H, solve_canonical, to_big_cell
from canonical.random_instances import random_b1
from canonical.uniton_type import UnitonType, enumerate_types
from exactalg.integration import IntegrationObstruction
from exactalg.text_format import parse_rational
from loopalg.factors import DiagonalHom, ExpNilpotent, LoopProduct
from loopalg.matrices import RatMatrix
from loopalg.operations import VerifyMode, verify_extended
from utils.exceptions import InvalidInputError

TYPE_210 = UnitonType([2, 1, 0])


def b1(a: str, b: str, c: str) -> RatMatrix:
    return rational_matrix([["0", a, b], ["0", "0", c], ["0", "0", "0"]])


class TestUnitonType:
    def test_parse(self):
        assert UnitonType.parse("(2,1,0)") == TYPE_210
        assert str(UnitonType.parse(" 1,1,0 ")) == "1,1,0"

    @pytest.mark.parametrize("text", ["2,0", "1,1", "0,1", "a,b", ""])
    def test_parse_rejects(self, text):
        with pytest.raises(InvalidInputError):
            UnitonType.parse(text)

    def test_multiplicities(self):
        t = UnitonType([2, 1, 1, 0])
        assert t.k == 2
        assert t.multiplicities == (1, 2, 1)
        assert t.eigenspace(1) == [1, 2]

    def test_profiles(self):
        assert list(TYPE_210.profile(0).allowed_entries()) == [(0, 1), (0, 2), (1, 2)]
        assert list(TYPE_210.profile(1).allowed_entries()) == [(0, 2)]
        assert list(TYPE_210.profile(2).allowed_entries()) == []

    def test_filtration_dimension(self):
        assert TYPE_210.filtration_dimension() == 3
        assert UnitonType([0, 0]).filtration_dimension() == 0

    def test_enumerate(self):
        assert [str(t) for t in enumerate_types(3)] == ["2,1,0", "1,1,0", "1,0,0", "0,0,0"]
        assert len(enumerate_types(4)) == 8
        with pytest.raises(InvalidInputError):
            enumerate_types(0)


class TestSolveCanonical:
    def test_quadrature(self):
        potential = solve_canonical(TYPE_210, b1("z", "0", "z^2"))
        assert isinstance(potential, CanonicalPotential)
        assert potential.level(2)[0][2] == parse_rational("z^3/6")

    def test_loop_coefficient(self):
        potential = solve_canonical(TYPE_210, b1("z", "0", "z^2"))
        h = build_H(potential).expand()
        assert h.coefficient(-2)[0][2] == parse_rational("2*z^3/3")

    def test_second_level_from_first(self):
        potential = solve_canonical(TYPE_210, b1("z", "z^2", "z^3"))
        assert potential.level(2)[0][2] == parse_rational("z^4/4")
        report = verify_extended(build_H(potential), VerifyMode.NORMALIZED)
        assert report.accepted

    def test_integration_constant(self):
        constant = rational_matrix([["0", "0", "5"], ["0", "0", "0"], ["0", "0", "0"]])
        potential = solve_canonical(TYPE_210, b1("z", "0", "z^2"), {2: constant})
        assert potential.level(2)[0][2] == parse_rational("z^3/6 + 5")
        assert verify_extended(build_H(potential), VerifyMode.NORMALIZED).accepted

    def test_integration_constants_dress_by_constant_loop(self):
        first = rational_matrix([["0", "i", "-2"], ["0", "0", "0"], ["0", "0", "0"]])
        second = rational_matrix([["0", "0", "3/2"], ["0", "0", "0"], ["0", "0", "0"]])
        plain = build_H(solve_canonical(TYPE_210, b1("z", "z^2", "z^3")))
        shifted = build_H(solve_canonical(TYPE_210, b1("z", "z^2", "z^3"), {1: first, 2: second}))
        quotient = (shifted * plain.inverse()).expand()
        assert quotient.is_z_independent()
        assert not quotient.is_identity()

    def test_obstruction(self):
        result = solve_canonical(TYPE_210, b1("1/z", "0", "z"))
        assert isinstance(result, IntegrationObstruction)
        assert result.level == 2
        assert result.entry == (0, 2)
        assert result.remainder == parse_rational("1/z")

    def test_b1_outside_profile(self):
        bad = rational_matrix([["0", "z", "0"], ["1", "0", "0"], ["0", "0", "0"]])
        with pytest.raises(InvalidInputError):
            solve_canonical(TYPE_210, bad)

    def test_constant_must_be_z_independent(self):
        constant = rational_matrix([["0", "0", "z"], ["0", "0", "0"], ["0", "0", "0"]])
        with pytest.raises(InvalidInputError):
            solve_canonical(TYPE_210, b1("z", "0", "z^2"), {2: constant})

    def test_random_instances_are_extended_solutions(self, rng):
        types = [t for n in (3, 4) for t in enumerate_types(n) if t.k > 0]
        for index in range(50):
            uniton_type = types[index % len(types)]
            potential = solve_canonical(uniton_type, random_b1(uniton_type, rng))
            assert isinstance(potential, CanonicalPotential), str(uniton_type)
            report = verify_extended(build_H(potential), VerifyMode.NORMALIZED)
            assert report.accepted, f"{uniton_type}: {report.offending_powers}"


class TestBigCell:
    def test_coefficients(self):
        potential = solve_canonical(TYPE_210, b1("z", "z^2", "z^3"))
        c, gamma = to_big_cell(potential)
        assert c.support() == [0, 1]
        assert c.coefficient(0) == b1("z", "z^4/4", "z^3")
        assert c.coefficient(1) == b1("0", "z^2", "0")
        assert gamma.exponents == (2, 1, 0)

    def test_conjugation_identity(self):
        potential = solve_canonical(TYPE_210, b1("z", "z^2", "z^3"))
        c, gamma = to_big_cell(potential)
        conjugated = LoopProduct(3, [gamma.inverse(), ExpNilpotent(c), gamma])
        assert conjugated.expand() == build_H(potential).expand()

    @pytest.mark.parametrize("b, invariant", [("0", True), ("z^2", False)])
    def test_circle_invariance(self, b, invariant):
        potential = solve_canonical(TYPE_210, b1("z", b, "z^2"))
        c, gamma = to_big_cell(potential)
        assert s1_invariance_check(big_cell_loop(c, TYPE_210), gamma) is invariant

    def test_big_cell_rejects_negative_powers(self):
        potential = solve_canonical(TYPE_210, b1("z", "0", "z^2"))
        with pytest.raises(InvalidInputError):
            big_cell_loop(potential.as_laurent(), TYPE_210)


class TestFrames:
    def test_cp1_frame(self):
        h = cpn_frame([parse_rational("z"), parse_rational("1")], 0)
        assert h.factors[-1].exponents == (2, 1)
        assert h.expand().coefficient(2) == rational_matrix([["1", "0"], ["0", "0"]])
        assert s1_invariance_check(h, DiagonalHom([2, 1]))

    def test_trailing_ones(self):
        f = [parse_rational(e) for e in ["1", "z", "z^2"]]
        assert cpn_frame(f, 2).factors[-1].exponents == (1, 0, 0)
        assert cpn_frame(f, 0).factors[-1].exponents == (2, 2, 1)

    def test_degenerate_vector(self):
        with pytest.raises(InvalidInputError):
            cpn_frame([parse_rational("z"), parse_rational("2*z")], 0)

    def test_index_range(self):
        with pytest.raises(InvalidInputError):
            cpn_frame([parse_rational("z"), parse_rational("1")], 2)


@pytest.mark.parametrize(
    "label, bound",
    [
        ("U_4", 3),
        ("SU_3", 2),
        ("Sp_2", 3),
        ("SO_7", 5),
        ("SO_{8}", 5),
        ("SO_3", 1),
        ("G2", 5),
        ("G_2", 5),
        ("F4", 11),
        ("E6", 11),
        ("E7", 17),
        ("E8", 29),
    ],
)
def test_uniton_bound(label, bound):
    assert uniton_bound(label) == bound


@pytest.mark.parametrize("label", ["Spin_7", "SO_2", "U_0", "E9"])
def test_uniton_bound_rejects(label):
    with pytest.raises(InvalidInputError):
        uniton_bound(label)
