from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rhfk.chain import complex_from_diagram  # noqa: E402
from rhfk.diagram import simple_knot_diagram, trefoil_diagram, unknot_diagram  # noqa: E402

DIAGRAMS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "diagrams")


@pytest.fixture(scope="session")
def unknot():
    return unknot_diagram()


@pytest.fixture(scope="session")
def simple412():
    return simple_knot_diagram(4, 1, 2)


@pytest.fixture(scope="session")
def trefoil():
    return trefoil_diagram()


@pytest.fixture(scope="session")
def mirror():
    return trefoil_diagram(mirror=True)


@pytest.fixture(scope="session")
def complexes(unknot, simple412, trefoil, mirror):
    return {d.name: complex_from_diagram(d) for d in (unknot, simple412, trefoil, mirror)}


@pytest.fixture
def diagram_file():
    return lambda name: os.path.join(DIAGRAMS, name)
