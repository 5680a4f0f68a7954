"""Seeded instance generators for tests, experiments and the ``gen`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, complement, is_bipartite, two_coloring

KINDS = (
    "random",
    "path-path",
    "path-union",
    "tree",
    "sp",
    "bipartite-outerplanar",
    "ktree",
    "complete-bipartite",
    "wheel",
)


@dataclass(frozen=True)
class Generated:
    kind: str
    g: Graph
    h: Graph
    note: str = ""


def random_subgraph(g: Graph, rng: random.Random, density: float) -> Graph:
    return Graph(g.n, [e for e in g.edges() if rng.random() < density])


def random_graph(n: int, rng: random.Random, density: float = 0.3) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density])


def random_tree(n: int, rng: random.Random) -> Graph:
    labels = list(range(n))
    rng.shuffle(labels)
    return Graph(n, [(labels[i], labels[rng.randrange(i)]) for i in range(1, n)])


def random_series_parallel(n: int, rng: random.Random) -> Graph:
    """Starts from a triangle (so χ = 3) and grows by ear, subdivision and pendant steps.

    Every step keeps treewidth at most two, so the result is series-parallel.
    """
    if n < 3:
        raise InputError("a series-parallel graph with chromatic number 3 needs n >= 3")
    triangle = {(0, 1), (1, 2), (0, 2)}
    edges = set(triangle)
    for w in range(3, n):
        u, v = rng.choice(sorted(edges))
        roll = rng.random()
        if roll < 0.6:
            edges |= {(u, w), (v, w)}
        elif roll < 0.8 and (u, v) not in triangle:
            edges.discard((u, v))
            edges |= {(u, w), (v, w)}
        else:
            edges.add((u, w))
    return Graph(n, edges)


def random_bipartite_outerplanar(n: int, rng: random.Random) -> Graph:
    """A random tree plus random chords between opposite sides kept while outerplanar."""
    from .orientation import is_outerplanar

    t = random_tree(n, rng)
    side = two_coloring(t)
    edges = set(t.edges())
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if side[u] != side[v] and (u, v) not in edges]
    rng.shuffle(pairs)
    for e in pairs:
        trial = Graph(n, edges | {e})
        if is_outerplanar(trial):
            edges.add(e)
    return Graph(n, edges)


def random_ell_tree(n: int, ell: int, rng: random.Random) -> Graph:
    if n < ell + 1:
        raise InputError(f"an {ell}-tree needs at least {ell + 1} vertices")
    base = list(range(ell + 1))
    edges = {(u, v) for u in base for v in base if u < v}
    cliques = [tuple(c for c in base if c != x) for x in base]
    for w in range(ell + 1, n):
        cl = rng.choice(cliques)
        edges |= {(c, w) for c in cl}
        cliques += [tuple(sorted(set(cl) - {x} | {w})) for x in cl]
    return Graph(n, edges)


def random_spanning_path_h(g: Graph, rng: random.Random, tries: int = 10_000) -> Graph:
    """A Hamiltonian path avoiding the edges of g, by rejection sampling."""
    perm = list(range(g.n))
    for _ in range(tries):
        rng.shuffle(perm)
        if all(not g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
            return Graph(g.n, list(zip(perm, perm[1:])))
    raise InputError("no spanning path in the complement found")


def random_path_union_h(g: Graph, rng: random.Random, stop: float = 0.25) -> Graph:
    """Walk a random permutation and cut it into paths, also cutting at G-edges."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(a, b) for a, b in zip(perm, perm[1:]) if not g.has_edge(a, b) and rng.random() >= stop]
    return Graph(g.n, edges)


def generate(kind: str, n: int, seed: int = 0, *, m: int | None = None, ell: int = 2, density: float = 0.5) -> Generated:
    """Instance of the requested family; ``m`` is the second side for complete-bipartite.

    For the fixed graphs (complete-bipartite, wheel) H is the complement of G.
    Otherwise H keeps each edge of the complement with probability ``density``,
    except for the path kinds where H is a union of paths.
    """
    rng = random.Random(seed)
    if n < 1:
        raise InputError("n must be positive")
    if kind == "random":
        g = random_graph(n, rng)
        return Generated(kind, g, random_subgraph(complement(g), rng, density))
    if kind == "path-path":
        g = Graph.path(n)
        return Generated(kind, g, random_spanning_path_h(g, rng), "H is a single spanning path")
    if kind == "path-union":
        g = Graph.path(n)
        return Generated(kind, g, random_path_union_h(g, rng))
    if kind == "complete-bipartite":
        g = Graph.complete_bipartite(n, n if m is None else m)
        return Generated(kind, g, complement(g))
    if kind == "wheel":
        g = Graph.wheel(n)
        return Generated(kind, g, complement(g), f"hub 0 and a rim of {n - 1} vertices")
    builders = {
        "tree": lambda: random_tree(n, rng),
        "sp": lambda: random_series_parallel(n, rng),
        "bipartite-outerplanar": lambda: random_bipartite_outerplanar(n, rng),
        "ktree": lambda: random_ell_tree(n, ell, rng),
    }
    if kind not in builders:
        raise InputError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    g = builders[kind]()
    assert kind != "bipartite-outerplanar" or is_bipartite(g)
    return Generated(kind, g, random_subgraph(complement(g), rng, density))
