import sys
from pathlib import Path
from random import Random

import pytest

from matroid_ultrametric import fixtures

sys.path.insert(0, str(Path(__file__).parent))

ALL_FIXTURES = ["U12", "U23", "U24", "U35", "K3", "K4", "K5", "Fano"]
SMALL_FIXTURES = ["U12", "U23", "U24", "U35", "K3", "K4", "Fano"]


@pytest.fixture(scope="session")
def matroids():
    return {name: fixtures.named(name) for name in ALL_FIXTURES}


@pytest.fixture
def rng():
    return Random(20261015)
