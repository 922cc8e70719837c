import json
from pathlib import Path

import pytest

from services.coloring_service import PartialColoring
from services.verify_service import canon
from utils.graph_io import graph_from_json
from utils.logger import ActionLogger
from utils.multigraph import MultiGraph

DATA = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def clear_action_log():
    ActionLogger.clear()
    yield
    ActionLogger.clear()


@pytest.fixture
def theta() -> MultiGraph:
    return canon("THETA").graph


@pytest.fixture
def k4() -> MultiGraph:
    return canon("K4").graph


@pytest.fixture
def k33() -> MultiGraph:
    return canon("K33").graph


@pytest.fixture
def petersen() -> MultiGraph:
    return canon("PETERSEN").graph


@pytest.fixture
def s6() -> MultiGraph:
    return canon("S6").graph


@pytest.fixture
def s6_witness() -> PartialColoring:
    """Hand-checked maximum 3-edge-coloring of S6 leaving y1z1 and y2z2 uncolored."""
    data = json.loads((DATA / "s6_witness.json").read_text())
    return PartialColoring.from_list(graph_from_json(data["graph"]), data["assignment"])
