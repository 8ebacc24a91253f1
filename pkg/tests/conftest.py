import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for genutil

from coevolve import fixtures

FIXTURE_ROOT = Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def all_scenarios():
    return fixtures.all_scenarios()


@pytest.fixture
def mind_map():
    return fixtures.scenario("mind-map")
