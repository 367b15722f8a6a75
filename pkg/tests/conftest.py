import os
import re
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from matchpow import Ambient, WeightedOrientedGraph, minimize_generators  # noqa: E402
from matchpow.graphs import SimpleGraph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# Filled in by the acceptance module, printed once at the end of the run.
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE


def _criterion_order(key):
    # "6a" sorts after "5" and before "7"
    m = re.match(r"(\d+)(.*)", key)
    return (int(m.group(1)), m.group(2))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=_criterion_order):
        status, title = ACCEPTANCE[key]
        terminalreporter.write_line(f"{status} criterion {key}: {title}")


@st.composite
def monomial_ideals(draw, max_n=5, max_gens=5, max_exp=3, min_gens=1):
    n = draw(st.integers(1, max_n))
    vec = st.lists(st.integers(0, max_exp), min_size=n, max_size=n).filter(any)
    gens = draw(st.lists(vec, min_size=min_gens, max_size=max_gens))
    return minimize_generators(Ambient.standard(n), gens)


@st.composite
def equigenerated_ideals(draw, max_n=5, max_gens=6, degree=None):
    n = draw(st.integers(1, max_n))
    d = degree or draw(st.integers(1, 3))

    def of_degree(parts):
        # stars and bars: n - 1 cut points in 0..d
        cuts = sorted(parts)
        bounds = [0] + cuts + [d]
        return [bounds[i + 1] - bounds[i] for i in range(n)]

    vec = st.lists(st.integers(0, d), min_size=n - 1, max_size=n - 1).map(of_degree)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return minimize_generators(Ambient.standard(n), gens)


@st.composite
def simple_graphs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=len(pairs), unique=True))
    return SimpleGraph.from_edges(edges)


@st.composite
def weighted_oriented_graphs(draw, max_n=6, max_weight=3):
    G = draw(simple_graphs(max_n))
    arcs = []
    for u, v in G.edge_list():
        arcs.append((u, v) if draw(st.booleans()) else (v, u))
    heads = {j for _, j in arcs}
    weights = {v: draw(st.integers(1, max_weight)) for v in sorted(heads)}
    return WeightedOrientedGraph(G.vertices, tuple(arcs), weights)
