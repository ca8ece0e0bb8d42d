# tests/conftest.py — named digraphs shared by the test modules
import pytest

from chromapath.corpus import (build_elsahili_example, build_t5, directed_cycle, directed_path,
                               edgeless, transitive_tournament)
from chromapath.digraph import Digraph


@pytest.fixture
def c3():
    return directed_cycle(3)


@pytest.fixture
def c4():
    return directed_cycle(4)


@pytest.fixture
def c5():
    return directed_cycle(5)


@pytest.fixture
def c7():
    return directed_cycle(7)


@pytest.fixture
def t5():
    return build_t5()


@pytest.fixture
def elsahili():
    return build_elsahili_example()


@pytest.fixture
def tt():
    return transitive_tournament


@pytest.fixture
def path3():
    return directed_path(3)


@pytest.fixture
def empty7():
    return edgeless(7)


@pytest.fixture
def p4_digraph():
    # x, y, z, v, w = 0..4 with arcs (y,x), (y,z), (v,z), (v,w)
    return Digraph(5, frozenset({(1, 0), (1, 2), (3, 2), (3, 4)}))


@pytest.fixture
def arclist_file(tmp_path):
    def write(D, name="g.txt"):
        from chromapath.digraph import to_arclist
        path = tmp_path / name
        path.write_text(to_arclist(D), encoding="utf-8")
        return str(path)
    return write


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run acceptance-scale campaigns")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
