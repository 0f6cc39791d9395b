import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from surfbracket import one_holed_torus, pair_of_pants, validate_surface  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture
def torus():
    return one_holed_torus()


@pytest.fixture
def pants():
    return pair_of_pants()


@pytest.fixture
def torus2():
    """Genus one with two boundary components (rank 3)."""
    return validate_surface(3, "abAcBC")


@pytest.fixture
def data_dir():
    return DATA
