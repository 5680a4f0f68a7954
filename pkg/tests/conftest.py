import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from robust_coloring.graph import Graph, Instance, complement

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_nx(gx: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(gx.nodes()))}
    return Graph(len(index), [(index[u], index[v]) for u, v in gx.edges()])


def atlas(max_n: int, min_n: int = 1):
    """All graphs up to isomorphism with min_n..max_n vertices (networkx atlas, n <= 7)."""
    for gx in nx.graph_atlas_g():
        if min_n <= gx.number_of_nodes() <= max_n:
            yield from_nx(gx)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, b in zip(pairs, keep) if b])


@st.composite
def instances(draw, min_n=1, max_n=7, min_k=1, max_k=4):
    g = draw(graphs(min_n, max_n))
    gbar = complement(g).edges()
    keep = draw(st.lists(st.booleans(), min_size=len(gbar), max_size=len(gbar)))
    h = Graph(g.n, [e for e, b in zip(gbar, keep) if b])
    return Instance(g, h, draw(st.integers(min_k, max_k)))


def random_instance(rng: random.Random, n: int, k: int, pg: float = 0.3, ph: float = 0.5) -> Instance:
    g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < pg])
    h = Graph(n, [e for e in complement(g).edges() if rng.random() < ph])
    return Instance(g, h, k)


def diamond_instance() -> Instance:
    """K_4 minus the edge ac (a,b,c,d = 0,1,2,3) with H the single edge ac."""
    g = Graph(4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)])
    return Instance(g, Graph(4, [(0, 2)]), 3)


def path_h_edges(n: int):
    """Every H that is a vertex-disjoint union of paths avoiding the path 0-1-...-(n-1)."""
    cand = [(a, b) for a in range(n) for b in range(a + 2, n)]
    deg = [0] * n
    parent = list(range(n))
    cur = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i):
        if i == len(cand):
            yield list(cur)
            return
        yield from rec(i + 1)
        a, b = cand[i]
        if deg[a] < 2 and deg[b] < 2:
            ra, rb = find(a), find(b)
            if ra != rb:
                deg[a] += 1
                deg[b] += 1
                parent[ra] = rb
                cur.append((a, b))
                yield from rec(i + 1)
                cur.pop()
                parent[ra] = ra
                deg[a] -= 1
                deg[b] -= 1

    yield from rec(0)


@pytest.fixture
def rng():
    return random.Random(12345)
