from itertools import combinations

import pytest
from hypothesis import strategies as st

from treestars import kernels
from treestars.graph import Graph

BACKENDS = ["python"] + (["cython"] if kernels._ckernels is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run a test once per kernel backend."""
    if request.param == "python":
        monkeypatch.setattr(kernels, "_ckernels", None)
    return request.param


def independent_r_sets(g: Graph, r: int):
    """Oracle: every r-subset filtered for independence, no shared code paths."""
    for c in combinations(range(g.n), r):
        if all((u, v) not in g.edges for u, v in combinations(c, 2)):
            yield frozenset(c)


@st.composite
def forests(draw, min_n=1, max_n=14):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for v in range(1, n):
        # attach to an earlier vertex, or start a new component
        p = draw(st.one_of(st.none(), st.integers(0, v - 1)))
        if p is not None:
            edges.append((p, v))
    perm = draw(st.permutations(range(n)))
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def trees(draw, min_n=2, max_n=10):
    n = draw(st.integers(min_n, max_n))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    perm = draw(st.permutations(range(n)))
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])
