import json
import subprocess
import sys
from pathlib import Path

import pytest

from cli.error_handler import (
    EXIT_INPUT,
    EXIT_INTERNAL,
    EXIT_NUMERIC,
    EXIT_OBSTRUCTION,
    EXIT_OK,
    EXIT_REJECTED,
    handle_command_errors,
)
from main import main

REPO_ROOT = Path(__file__).resolve().parent.parent


def write_json(path: Path, data) -> str:
    path.write_text(json.dumps(data))
    return str(path)


class TestGenerate:
    def test_canonical_from_flags(self, run_cli):
        code, out = run_cli("generate", "canonical", "--type", "2,1,0", "--a", "z", "--b", "0", "--c", "z^2")
        assert code == EXIT_OK
        assert out["type"] == "2,1,0"
        assert out["levels"][1][0][2] == "1/6*z^3"
        assert out["plane"]["k"] == 2

    def test_canonical_from_entries(self, run_cli):
        code, out = run_cli(
            "generate", "canonical", "--type", "2,1,0", "--entry", "1,2=z", "--entry", "2,3=z^2"
        )
        assert code == EXIT_OK
        assert out["levels"][1][0][2] == "1/6*z^3"

    def test_canonical_from_potential(self, run_cli, golden, tmp_path):
        target = tmp_path / "artifacts"
        code, out = run_cli(
            "generate", "canonical", "--potential", golden("potential_210.json"), "--out", target
        )
        assert code == EXIT_OK
        assert json.loads((target / "plane.json").read_text()) == out["plane"]
        assert (target / "loop.json").exists()

    def test_canonical_random(self, run_cli):
        code, out = run_cli("generate", "canonical", "--type", "2,1,1,0", "--random", "--seed", "3")
        assert code == EXIT_OK
        assert out["type"] == "2,1,1,0"

    def test_obstruction(self, run_cli):
        code, out = run_cli("generate", "canonical", "--type", "2,1,0", "--a", "1/z", "--c", "z")
        assert code == EXIT_OBSTRUCTION
        assert out["error"] == "obstruction"
        assert out["obstruction"]["level"] == 2
        assert out["obstruction"]["entry"] == [1, 3]
        assert len(out["obstruction"]["residues"]) == 1

    def test_canonical_needs_type(self, run_cli):
        code, out = run_cli("generate", "canonical", "--a", "z")
        assert code == EXIT_INPUT
        assert out["error"] == "input"

    def test_frenet_flags(self, run_cli):
        code, out = run_cli("generate", "frenet", "--row", "2,1,0", "--l", "(z,0,1)", "--m", "(1,0,0)")
        assert code == EXIT_OK
        assert out["degree"] == 1
        assert out["loop"] is None

    def test_frenet_file(self, run_cli, golden):
        code, out = run_cli("generate", "frenet", "--input", golden("frenet_2110.json"))
        assert code == EXIT_OK
        assert out["type"] == "2,1,1,0"
        assert len(out["plane"]["basis"]) == 4

    def test_cpn(self, run_cli):
        code, out = run_cli("generate", "cpn", "--f", "(z,1)")
        assert code == EXIT_OK
        assert out["type"] == "2,1"
        assert (out["degree"], out["width"]) == (1, 1)
        assert out["plane"]["low"] == 1


class TestVerify:
    def test_golden_loop(self, run_cli, golden):
        code, out = run_cli("verify", golden("canonical_loop_210.json"), "--mode", "normalized")
        assert code == EXIT_OK
        assert out["accepted"]
        assert out["a_coefficient"] == [["0", "1", "2*z"], ["0", "0", "3*z^2"], ["0", "0", "0"]]

    def test_perturbed_loop_rejected(self, run_cli, golden, tmp_path):
        data = json.loads(Path(golden("canonical_loop_210.json")).read_text())
        data["factors"][0]["coeffs"]["-2"][0][2] = "1/4*z^4 + z"
        code, out = run_cli("verify", write_json(tmp_path / "loop.json", data))
        assert code == EXIT_REJECTED
        assert out["offending_powers"] == [-2]

    def test_frenet_plane(self, run_cli, golden):
        code, out = run_cli("verify", golden("frenet_210.json"))
        assert code == EXIT_OK
        assert out == {"accepted": True, "violations": []}

    @pytest.mark.parametrize(
        "name",
        [
            "canonical_loop_210.json",
            "exp_loop.json",
            "frenet_210.json",
            "frenet_2110.json",
            "u3_data.json",
            "u3_data_second.json",
            "u3_appendix_c.json",
        ],
    )
    def test_every_golden_is_accepted(self, run_cli, golden, name):
        code, out = run_cli("verify", golden(name), "--mode", "normalized")
        assert code == EXIT_OK
        assert out["accepted"]

    def test_writes_report(self, run_cli, golden, tmp_path):
        target = tmp_path / "report.json"
        code, out = run_cli("verify", golden("exp_loop.json"), "--out", target)
        assert code == EXIT_OK
        assert json.loads(target.read_text()) == out


class TestDegree:
    def test_deformation_data(self, run_cli, golden):
        code, out = run_cli("degree", golden("u3_data.json"), "--schubert")
        assert code == EXIT_OK
        assert out == {
            "degree": 2,
            "dim": 3,
            "width": 2,
            "schubert_count": 2,
            "x0_degree": 2,
            "degree_matches": True,
        }

    def test_loop_needs_type_for_schubert(self, run_cli, golden):
        code, _ = run_cli("degree", golden("exp_loop.json"), "--schubert")
        assert code == EXIT_INPUT


class TestFactor:
    def test_cp1_plane(self, run_cli, tmp_path):
        code, _ = run_cli("generate", "cpn", "--f", "(z,1)", "--out", tmp_path)
        assert code == EXIT_OK
        csv = tmp_path / "phi.csv"
        code, out = run_cli(
            "factor", tmp_path / "plane.json", "--half-width", "0.1", "--h", "0.1", "--csv", csv
        )
        assert code == EXIT_OK
        assert out["factorization"]["uniton_number"] == 1
        assert out["factorization"]["shift"] == 1
        assert out["unitarity_error"] < 1e-9
        assert len(out["residuals"]) == 1
        assert csv.exists()

    def test_pole_at_centre(self, run_cli, tmp_path):
        plane = write_json(tmp_path / "plane.json", {"n": 2, "k": 1, "low": 0, "basis": [["1", "1/z"]]})
        code, out = run_cli("factor", plane, "--center", "0")
        assert code == EXIT_NUMERIC
        assert out["error"] == "numeric"

    def test_bad_centre(self, run_cli, tmp_path):
        plane = write_json(tmp_path / "plane.json", {"n": 2, "k": 1, "low": 0, "basis": [["1", "z"]]})
        code, _ = run_cli("factor", plane, "--center", "north")
        assert code == EXIT_INPUT


class TestDeform:
    def test_lowering(self, run_cli, golden):
        code, out = run_cli("deform", golden("u3_data.json"), "--m", "4")
        assert code == EXIT_OK
        assert out["accepted"]
        assert out["degree"] == [2] * 5
        assert out["endpoint"]["width"] == 1

    def test_witness(self, run_cli, golden):
        code, out = run_cli(
            "deform", golden("u3_data.json"), "--m", "4", "--witness", golden("u3_data_second.json")
        )
        assert code == EXIT_OK
        assert out["connected"]

    def test_quadratic_instance_reports_degree_drop(self, run_cli, golden):
        code, out = run_cli("deform", golden("u3_appendix_c.json"), "--m", "10")
        assert code == EXIT_REJECTED
        assert out["degree"] == [4] * 10 + [2]
        assert out["endpoint"]["width"] == 1
        assert out["endpoint"]["sandwich"] == [True, True]
        assert out["delta_carries_degree"] is False

    def test_needs_u3_data(self, run_cli, golden):
        code, _ = run_cli("deform", golden("exp_loop.json"))
        assert code == EXIT_INPUT


class TestInputErrors:
    def test_missing_file(self, run_cli, tmp_path):
        code, out = run_cli("verify", tmp_path / "absent.json")
        assert code == EXIT_INPUT
        assert out["error"] == "input"

    def test_bad_json(self, run_cli, tmp_path):
        target = tmp_path / "broken.json"
        target.write_text("{not json")
        code, _ = run_cli("verify", target)
        assert code == EXIT_INPUT

    def test_unknown_document(self, run_cli, tmp_path):
        code, _ = run_cli("verify", write_json(tmp_path / "other.json", {"foo": 1}))
        assert code == EXIT_INPUT

    @pytest.mark.parametrize(
        "argv",
        [
            ["generate", "canonical", "--type", "2,0"],
            ["types"],
            [],
        ],
    )
    def test_usage_errors(self, argv):
        with pytest.raises(SystemExit) as excinfo:
            main(argv)
        assert excinfo.value.code == EXIT_INPUT


def test_types(run_cli):
    code, out = run_cli("types", "--n", "3")
    assert code == EXIT_OK
    assert out["types"] == ["2,1,0", "1,1,0", "1,0,0", "0,0,0"]
    assert out["dimensions"]["2,1,0"] == 3


def test_bound(run_cli):
    code, out = run_cli("bound", "U_4", "G2", "SO_7")
    assert code == EXIT_OK
    assert out["bounds"] == {"U_4": 3, "G2": 5, "SO_7": 5}


def test_bound_unknown_group(run_cli):
    code, _ = run_cli("bound", "Spin_7")
    assert code == EXIT_INPUT


def test_entry_point():
    result = subprocess.run(
        [sys.executable, "main.py", "types", "--n", "2"],
        cwd=REPO_ROOT,
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["types"] == ["1,0", "0,0"]


def test_unexpected_error_has_its_own_code(capsys):
    @handle_command_errors
    def broken(_args):
        raise RuntimeError("boom")

    assert broken(None) == EXIT_INTERNAL
    assert json.loads(capsys.readouterr().out)["error"] == "internal"
