from pathlib import Path

import pytest

from spancomplex import build_multigraph
from spancomplex.randomgraphs import random_suite

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

SUITE_SEED = 42
SUITE_COUNT = 200
SUITE_MAX_EDGES = 12


def make_fig1():
    """Three parallel edges on {a,b}, a 3-cycle, and a double pendant class."""
    return build_multigraph(
        ["a", "b", "c", "d"],
        [
            ("e11", ("a", "b")),
            ("e12", ("a", "b")),
            ("e13", ("a", "b")),
            ("e21", ("b", "c")),
            ("e31", ("c", "a")),
            ("e41", ("c", "d")),
            ("e42", ("c", "d")),
        ],
    )


def make_triangle():
    return build_multigraph(
        ["a", "b", "c"],
        [("e1", ("a", "b")), ("e2", ("b", "c")), ("e3", ("c", "a"))],
    )


def make_c211():
    """Cycle with class sizes (2,1,1): four edges on three vertices."""
    return build_multigraph(
        ["a", "b", "c"],
        [
            ("e11", ("a", "b")),
            ("e12", ("a", "b")),
            ("e21", ("b", "c")),
            ("e31", ("c", "a")),
        ],
    )


def make_theta():
    """Two vertices joined by three internally disjoint length-2 paths."""
    return build_multigraph(
        ["u", "w", "p1", "p2", "p3"],
        [
            ("t1", ("u", "p1")),
            ("t2", ("p1", "w")),
            ("t3", ("u", "p2")),
            ("t4", ("p2", "w")),
            ("t5", ("u", "p3")),
            ("t6", ("p3", "w")),
        ],
    )


@pytest.fixture
def fig1():
    return make_fig1()


@pytest.fixture
def triangle():
    return make_triangle()


@pytest.fixture
def c211():
    return make_c211()


@pytest.fixture
def theta():
    return make_theta()


@pytest.fixture(scope="session")
def suite_graphs():
    return random_suite(SUITE_SEED, SUITE_COUNT, SUITE_MAX_EDGES)
