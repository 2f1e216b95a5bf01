import json
import os
from pathlib import Path

import numpy as np
import pytest
from blockrb.algebra import AlgebraParams
from blockrb.kernel import Window
from blockrb.operators import Constant, OperatorSpec, ProfileSpec


@pytest.fixture
def block_q():
    """B(q) with q left symbolic"""
    return AlgebraParams.symbolic_block()


@pytest.fixture
def general_params():
    return AlgebraParams.symbolic()


@pytest.fixture
def resonant_operator():
    # q = k' = 0 is supplied by the caller, this is the operator part
    return OperatorSpec(1, 0, ProfileSpec.single_line(-1, Constant(1)))


@pytest.fixture
def small_window():
    return Window.square(2)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def config_path(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"q": "1/3", "k": 2, "window": 3, "profile": "exp:2"}))
    return path


GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden():
    """Compare text with tests/golden/<name> byte for byte.

    A missing golden, or any golden while BLOCKRB_UPDATE_GOLDEN is set, is
    written from the text and the test is skipped.
    """

    def compare(name: str, text: str) -> None:
        path = GOLDEN_DIR / name
        if os.environ.get("BLOCKRB_UPDATE_GOLDEN") or not path.exists():
            path.write_text(text, encoding="utf-8")
            pytest.skip(f"wrote golden {name}")
        assert text == path.read_text(encoding="utf-8")

    return compare
