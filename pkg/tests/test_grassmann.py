import pytest
from conftest import rational_matrix

from canonical.potential import solve_canonical, to_big_cell
from canonical.random_instances import random_b1, random_polynomial
from canonical.uniton_type import UnitonType
from deform.path import U3Data
from deform.verification import uniton_width
from exactalg.text_format import parse_rational
from grassmann.degree import (
    pluecker_degree,
    schubert_count,
    schubert_test_space,
    x0_ambient_columns,
    x0_degree_matches,
    x0_degrees,
)
from grassmann.extended import check_ces, echelon_split, generate_from_X
from grassmann.frenet import FRENET_ROWS, FrenetData, frenet, frenet_data_from_big_cell
from grassmann.loops import apply_loop, extract_X0, model_from_loop, plane_of_loop
from grassmann.model_space import ModelSpace, PlaneFamily
from loopalg.factors import ConstantInvertible, DiagonalHom, ExpNilpotent, LoopProduct
from loopalg.matrices import LaurentMatrix
from utils.exceptions import InvalidInputError

TYPE_210 = UnitonType([2, 1, 0])


def vector(*entries: str):
    return [parse_rational(e) for e in entries]


def frenet_vectors(n: int):
    if n == 3:
        return {"l": vector("z^2", "z", "1"), "m": vector("1", "0", "0"), "n": vector("0", "1", "0")}
    return {
        "l": vector("z^3", "z^2", "z", "1"),
        "m": vector("1", "0", "0", "0"),
        "n": vector("0", "0", "1", "0"),
    }


class TestModelSpace:
    def test_slot_indexing(self):
        space = ModelSpace(3, 2, low=-1)
        assert space.index(0, 2) == 5
        assert space.slot(5) == (0, 2)
        with pytest.raises(InvalidInputError):
            space.index(1, 0)

    def test_vector_below_window(self):
        space = ModelSpace(2, 1, low=0)
        with pytest.raises(InvalidInputError):
            space.vector_from_slots({-1: vector("1", "0")})

    def test_rewindow(self, cp1_plane):
        wide = cp1_plane.in_window(0, 2)
        assert wide.dim == 1
        assert wide == cp1_plane

    def test_cannot_truncate_below_plane(self, cp1_plane):
        with pytest.raises(InvalidInputError):
            cp1_plane.in_window(1, 0)


class TestLoops:
    def test_plane_of_cp1_frame(self, cp1_plane):
        space = cp1_plane.space
        assert (space.low, space.k) == (1, 1)
        assert cp1_plane == PlaneFamily(space, [vector("z", "1")])

    def test_plane_of_exp_loop(self, exp_loop):
        plane = plane_of_loop(exp_loop)
        assert (plane.space.low, plane.space.high) == (-1, 1)
        assert plane.dim == 2
        assert check_ces(plane).accepted
        assert pluecker_degree(plane) == 1

    def test_model_rows(self, u3_data):
        plane = model_from_loop(u3_data.loop(), TYPE_210)
        expected = PlaneFamily(
            ModelSpace(3, 2),
            [
                vector("z", "z", "1", "(z-1)*(z-2)", "0", "0"),
                vector("0", "0", "0", "1", "1", "0"),
                vector("0", "0", "0", "z", "z", "1"),
            ],
        )
        assert plane == expected

    def test_model_rejects_negative_powers(self):
        b = LaurentMatrix(2, {-1: rational_matrix([["0", "1"], ["0", "0"]])})
        with pytest.raises(InvalidInputError):
            model_from_loop(LoopProduct.of(ExpNilpotent(b)), UnitonType([1, 0]))

    def test_model_size_mismatch(self, exp_loop):
        with pytest.raises(InvalidInputError):
            model_from_loop(exp_loop, TYPE_210)

    def test_apply_loop_moves_window(self, cp1_plane):
        moved = apply_loop(cp1_plane, LoopProduct.of(DiagonalHom([-1, -1])))
        assert moved.space == ModelSpace(2, 1, 0)
        assert moved == PlaneFamily(ModelSpace(2, 1, 0), [vector("z", "1")])

    def test_apply_loop_needs_constant_loop(self, cp1_plane):
        gamma = LoopProduct.of(ConstantInvertible(rational_matrix([["1", "z"], ["0", "1"]])))
        with pytest.raises(InvalidInputError):
            apply_loop(cp1_plane, gamma)


class TestExtendedSolutionCheck:
    def test_rejects_missing_derivative(self):
        space = ModelSpace(2, 2)
        plane = PlaneFamily(space, [vector("z", "1", "0", "0"), vector("0", "0", "z", "1")])
        report = check_ces(plane)
        assert not report.accepted
        assert [(v.basis_index, v.test) for v in report.violations] == [(0, "N s'")]
        assert report.first_violation.basis_index == 0

    def test_generated_plane_accepted(self):
        space = ModelSpace(2, 2)
        plane = generate_from_X([vector("z", "1", "0", "0")], space)
        assert plane.dim == 3
        assert check_ces(plane).accepted
        assert plane.contains(vector("0", "0", "1", "0"))

    def test_canonical_plane_accepted(self, u3_data):
        assert check_ces(u3_data.plane()).accepted

    def test_echelon_split(self):
        groups = echelon_split([vector("z", "1", "0", "0"), vector("0", "0", "1", "0")], ModelSpace(2, 2))
        assert groups == {0: [vector("1", "1/z", "0", "0")], 1: [vector("1", "0", "0", "0")]}


class TestFrenet:
    @pytest.mark.parametrize("row", sorted(FRENET_ROWS), ids=lambda r: ",".join(map(str, r)))
    def test_every_row(self, row):
        plane = frenet(FrenetData(row, frenet_vectors(len(row))))
        assert check_ces(plane).accepted
        assert plane.dim == UnitonType(row).filtration_dimension()

    def test_row_210(self):
        plane = frenet(FrenetData((2, 1, 0), {"l": vector("z", "0", "1"), "m": vector("1", "0", "0")}))
        assert plane.dim == 3
        assert pluecker_degree(plane) == 1

    def test_missing_vector(self):
        with pytest.raises(InvalidInputError):
            FrenetData((2, 1, 0), {"l": vector("z", "0", "1")})

    def test_unknown_row(self):
        with pytest.raises(InvalidInputError):
            FrenetData((3, 2, 1, 0, 0), {"l": vector("z", "0", "1", "0", "0")})

    def test_big_cell_change_of_variables(self, u3_data):
        data = frenet_data_from_big_cell(TYPE_210, u3_data.big_cell())
        assert data.vectors["l"] == vector("z", "z", "1")
        assert frenet(data) == u3_data.plane()


class TestDegree:
    def test_cp1_line(self, cp1_plane):
        assert pluecker_degree(cp1_plane) == 1

    @pytest.mark.parametrize("coordinate, expected", [(0, 1), (1, 1)])
    def test_cp1_schubert_count(self, cp1_plane, coordinate, expected):
        space = cp1_plane.space
        test_space = PlaneFamily(space, [space.unit(1, coordinate)])
        assert schubert_count(cp1_plane, test_space) == expected

    def test_schubert_count_matches_degree(self, u3_data):
        plane = u3_data.plane()
        assert pluecker_degree(plane) == 2
        assert schubert_count(plane, schubert_test_space(TYPE_210)) == 2

    def test_schubert_count_needs_complement(self, cp1_plane):
        with pytest.raises(InvalidInputError):
            schubert_count(cp1_plane, PlaneFamily(cp1_plane.space))

    def test_test_space_for_210(self):
        z_space = schubert_test_space(TYPE_210)
        assert z_space.dim == 3
        assert z_space.contains_slot(0)

    def test_x0_ambient(self):
        assert x0_ambient_columns(TYPE_210) == [0, 1, 2, 3]

    def test_x0_degree(self, u3_data):
        assert x0_degrees(u3_data.loop(), TYPE_210) == (2, 2)
        assert x0_degree_matches(u3_data.loop(), TYPE_210)

    def test_x0_degree_second_instance(self):
        data = U3Data(parse_rational("z + 1"), parse_rational("z"), parse_rational("z^2 + 1"))
        assert x0_degree_matches(data.loop(), TYPE_210)

    def test_extract_x0(self, u3_data):
        x0 = extract_X0(u3_data.loop(), TYPE_210)
        assert x0.dim == 1
        assert pluecker_degree(x0) == 2

    def test_extract_x0_needs_big_cell_form(self):
        b = LaurentMatrix(3, {2: rational_matrix([["0", "0", "z"], ["0", "0", "0"], ["0", "0", "0"]])})
        with pytest.raises(InvalidInputError):
            extract_X0(LoopProduct(3, [ExpNilpotent(b)]), TYPE_210)


def random_vector(rng, n: int):
    return [random_polynomial(rng, 2) for _ in range(n)]


def big_cell_factor(uniton_type: UnitonType, rng) -> LoopProduct:
    c, _ = to_big_cell(solve_canonical(uniton_type, random_b1(uniton_type, rng, max_degree=2)))
    return LoopProduct(uniton_type.n, [ExpNilpotent(c)])


class TestRandomInstances:
    @pytest.mark.parametrize("row", sorted(FRENET_ROWS), ids=lambda r: ",".join(map(str, r)))
    def test_frenet_rows_accept(self, row, rng):
        names, _ = FRENET_ROWS[row]
        for _ in range(10):
            data = FrenetData(row, {name: random_vector(rng, len(row)) for name in names})
            plane = frenet(data)
            assert check_ces(plane).accepted
            assert uniton_width(plane) == row[0]
            assert plane.dim <= UnitonType(row).filtration_dimension()

    @pytest.mark.parametrize(
        "row", [r for r in sorted(FRENET_ROWS) if r[0] >= 2], ids=lambda r: ",".join(map(str, r))
    )
    def test_degenerate_frenet_data_is_narrower(self, row, rng):
        names, _ = FRENET_ROWS[row]
        vectors = {name: random_vector(rng, len(row)) for name in names}
        vectors["l"] = vector(*["0"] * len(row))
        plane = frenet(FrenetData(row, vectors))
        assert check_ces(plane).accepted
        assert uniton_width(plane) < row[0]

    @pytest.mark.parametrize("uniton_type", [TYPE_210, UnitonType([2, 1, 1, 0])], ids=str)
    def test_x0_degree_on_random_big_cell(self, uniton_type, rng):
        for _ in range(20):
            assert x0_degree_matches(big_cell_factor(uniton_type, rng), uniton_type)

    def test_schubert_count_on_random_data(self, rng):
        z = parse_rational("z")
        checked = 0
        while checked < 10:
            alpha = random_polynomial(rng, 0) * z + random_polynomial(rng, 0)
            beta = random_polynomial(rng, 0) * z ** int(rng.integers(1, 3)) + random_polynomial(rng, 0)
            plane = U3Data(alpha, beta, random_polynomial(rng, 2)).plane()
            degree = pluecker_degree(plane)
            if degree > 4:
                continue
            assert schubert_count(plane, schubert_test_space(TYPE_210)) == degree
            checked += 1
