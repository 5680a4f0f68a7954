"""Vertex orderings, induced orientations and greedy-orientable constructions.

An ordering orients every edge from the earlier endpoint to the later one.
The constructions here produce orderings with small maximum in-degree for
trees, series-parallel graphs and l-trees; ``min_alpha_search`` finds the
best ordering exactly for small graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .coloring import Coloring
from .errors import NotATree, NotEllTree, NotSeriesParallel
from .graph import Graph, chromatic_number, connected_components, is_tree


@dataclass(frozen=True)
class VertexOrdering:
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("ordering must be a permutation of 0..n-1")

    @classmethod
    def of(cls, perm: Sequence[int]) -> VertexOrdering:
        return cls(tuple(int(v) for v in perm))

    @classmethod
    def identity(cls, n: int) -> VertexOrdering:
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def positions(self) -> list[int]:
        pos = [0] * len(self.perm)
        for i, v in enumerate(self.perm):
            pos[v] = i
        return pos

    def in_degrees(self, g: Graph) -> list[int]:
        """In-degree of every vertex: the number of its neighbors placed earlier."""
        pos = self.positions()
        return [sum(1 for w in g.adj[v] if pos[w] < pos[v]) for v in range(g.n)]

    def oriented_edges(self, g: Graph) -> list[tuple[int, int]]:
        pos = self.positions()
        return [(u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges()]


def as_ordering(order: VertexOrdering | Sequence[int]) -> VertexOrdering:
    return order if isinstance(order, VertexOrdering) else VertexOrdering.of(order)


def max_in_degree(g: Graph, o: VertexOrdering | Sequence[int]) -> int:
    o = as_ordering(o)
    if len(o) != g.n:
        raise ValueError("ordering length does not match the graph")
    return max(o.in_degrees(g), default=0)


def alpha_of(g: Graph, o: VertexOrdering | Sequence[int], chi: int | None = None) -> int:
    """Max in-degree minus (χ(g) - 1)."""
    if chi is None:
        chi = chromatic_number(g)
    return max_in_degree(g, o) - chi + 1


def greedy_coloring(g: Graph, o: VertexOrdering | Sequence[int]) -> Coloring:
    """First-fit coloring along the ordering."""
    color: list[int | None] = [None] * g.n
    for v in as_ordering(o):
        taken = {color[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return Coloring.of(color)


def tree_ordering(t: Graph, root: int = 0) -> VertexOrdering:
    """Breadth-first order from ``root``: every edge points away from the root."""
    if not is_tree(t):
        raise NotATree("graph is not a tree")
    if not 0 <= root < t.n:
        raise ValueError(f"root {root} outside 0..{t.n - 1}")
    seen = {root}
    order = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in sorted(t.adj[u]):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return VertexOrdering.of(order)


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "series", "pendant"
    vertex: int
    into: int  # neighbor the vertex is identified with (or attached to)
    other: int | None  # second neighbor for a series step
    parallel_deleted: bool  # the series step created a parallel edge that was dropped


def series_parallel_reduction(g: Graph) -> tuple[list[list[int]], list[ReductionStep]]:
    """Reduce every component to K_2 (or K_1).

    Each step takes the lowest-index vertex of degree at most two. A degree-2
    vertex is identified with its lower-index neighbor; a parallel edge created
    this way is deleted. Degree-1 vertices are removed outright so that graphs
    that are not 2-connected reduce as well.

    Returns the surviving vertices of each component and the step sequence.
    Raises NotSeriesParallel when some component stalls.
    """
    work = [set(s) for s in g.adj]
    alive = [True] * g.n
    steps: list[ReductionStep] = []
    survivors = []
    for comp in sorted(connected_components(g), key=min):
        members = sorted(comp)
        remaining = len(members)
        while remaining > 2:
            v = next((x for x in members if alive[x] and len(work[x]) <= 2), None)
            if v is None:
                raise NotSeriesParallel(
                    f"reduction stalls with {remaining} vertices left (every vertex has degree >= 3)"
                )
            nbrs = sorted(work[v])
            for w in nbrs:
                work[w].discard(v)
            work[v].clear()
            alive[v] = False
            remaining -= 1
            if len(nbrs) == 2:
                a, b = nbrs
                parallel = b in work[a]
                work[a].add(b)
                work[b].add(a)
                steps.append(ReductionStep("series", v, a, b, parallel))
            else:
                steps.append(ReductionStep("pendant", v, nbrs[0], None, False))
        survivors.append([x for x in members if alive[x]])
    return survivors, steps


def is_series_parallel(g: Graph) -> bool:
    try:
        series_parallel_reduction(g)
    except NotSeriesParallel:
        return False
    return True


def series_parallel_ordering(g: Graph) -> VertexOrdering:
    """Reverse reduction order, component by component; max in-degree <= 2."""
    survivors, steps = series_parallel_reduction(g)
    comp_of = {}
    for i, comp in enumerate(sorted(connected_components(g), key=min)):
        for v in comp:
            comp_of[v] = i
    order: list[int] = []
    for i, base in enumerate(survivors):
        order += base
        order += [st.vertex for st in reversed(steps) if comp_of[st.vertex] == i]
    return VertexOrdering.of(order)


def ell_tree_ordering(g: Graph, ell: int) -> VertexOrdering:
    """Base clique first, then peeled simplicial vertices in reverse; in-degree ell."""
    if ell < 1:
        raise NotEllTree("ell must be at least 1")
    n = g.n
    expected = ell * (ell + 1) // 2 + (n - ell - 1) * ell
    if n < ell + 1 or g.num_edges != expected:
        raise NotEllTree(f"an {ell}-tree on {n} vertices has {expected} edges, got {g.num_edges}")
    work = [set(s) for s in g.adj]
    alive = set(range(n))
    peeled = []
    while len(alive) > ell + 1:
        for v in sorted(alive):
            nb = work[v]
            if len(nb) == ell and all(b in work[a] for a in nb for b in nb if a < b):
                break
        else:
            raise NotEllTree(f"no simplicial vertex of degree {ell} among {len(alive)} vertices")
        for w in nb:
            work[w].discard(v)
        alive.discard(v)
        peeled.append(v)
    base = sorted(alive)
    if any(b not in work[a] for a in base for b in base if a < b):
        raise NotEllTree(f"remaining {ell + 1} vertices do not form a clique")
    return VertexOrdering.of(base + peeled[::-1])


def is_ell_tree(g: Graph, ell: int) -> bool:
    try:
        ell_tree_ordering(g, ell)
    except NotEllTree:
        return False
    return True


def min_in_degree_ordering(g: Graph) -> VertexOrdering:
    """An ordering of minimum possible max in-degree (exact subset DP, n <= ~18).

    best[S] is the smallest max in-degree over orderings of S; the last vertex
    of S contributes |N(v) ∩ S|. Ties go to the smallest last vertex.
    """
    n = g.n
    if n > 20:
        raise ValueError("exact ordering search is limited to 20 vertices")
    full = (1 << n) - 1
    best = [0] * (1 << n)
    last = [-1] * (1 << n)
    masks = g.masks
    for s in range(1, full + 1):
        value, choice = n + 1, -1
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            prev = s ^ low
            cost = max(best[prev], bin(masks[v] & prev).count("1"))
            if cost < value:
                value, choice = cost, v
        best[s], last[s] = value, choice
    order = []
    s = full
    while s:
        v = last[s]
        order.append(v)
        s ^= 1 << v
    return VertexOrdering.of(order[::-1])


def min_alpha_search(g: Graph) -> tuple[VertexOrdering, int]:
    o = min_in_degree_ordering(g)
    return o, alpha_of(g, o)


def is_outerplanar(g: Graph) -> bool:
    """Planarity of g plus an apex adjacent to every vertex."""
    import networkx as nx

    apex = g.n
    gx = nx.Graph()
    gx.add_nodes_from(range(g.n + 1))
    gx.add_edges_from(g.edges())
    gx.add_edges_from((apex, v) for v in range(g.n))
    planar, _ = nx.check_planarity(gx)
    return planar
