import json
from pathlib import Path

import numpy as np
import pytest

from canonical.frames import cpn_frame
from config import DEFAULT_SEED
from deform.path import U3Data
from exactalg.text_format import parse_rational
from grassmann.loops import plane_of_loop
from loopalg.factors import ExpNilpotent, LoopProduct
from loopalg.matrices import LaurentMatrix, RatMatrix
from main import main

GOLDEN_DIR = Path(__file__).parent / "golden"


def rational_matrix(rows) -> RatMatrix:
    return RatMatrix([[parse_rational(e) for e in row] for row in rows])


@pytest.fixture
def golden():
    def _path(name: str) -> str:
        return str(GOLDEN_DIR / name)

    return _path


@pytest.fixture
def run_cli(capsys):
    """Runs main(argv) in-process; returns (exit code, parsed stdout)"""

    def _run(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr().out
        return code, json.loads(out) if out.strip() else None

    return _run


@pytest.fixture
def rng():
    return np.random.default_rng(DEFAULT_SEED)


@pytest.fixture
def u3_data() -> U3Data:
    return U3Data(parse_rational("z"), parse_rational("z"), parse_rational("(z-1)*(z-2)"))


@pytest.fixture
def cp1_plane():
    return plane_of_loop(cpn_frame([parse_rational("z"), parse_rational("1")], 0))


@pytest.fixture
def exp_loop() -> LoopProduct:
    b = LaurentMatrix(2, {-1: rational_matrix([["0", "z"], ["0", "0"]])})
    return LoopProduct(2, [ExpNilpotent(b)])
