"""Simple undirected graphs on dense vertex indices, plus instance validation.

Vertices are ``0..n-1``. Adjacency is kept both as frozensets (for readable
set algebra) and as integer bitmasks (for the enumeration-heavy solvers).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import OverlapError, ParseError, SizeMismatch

Edge = tuple[int, int]


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "adj", "masks", "_m")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self.masks: tuple[int, ...] = tuple(sum(1 << w for w in s) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls(a + b, ((u, a + v) for u in range(a) for v in range(b)))

    @classmethod
    def wheel(cls, n: int) -> Graph:
        """Hub 0 joined to a cycle on ``1..n-1`` (so ``wheel(8)`` is W_{1,7})."""
        if n < 4:
            raise ValueError("a wheel needs at least 4 vertices")
        rim = n - 1
        edges = [(0, i) for i in range(1, n)]
        edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
        return cls(n, edges)

    @property
    def num_edges(self) -> int:
        return self._m

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def union(self, other: Graph) -> Graph:
        if other.n != self.n:
            raise SizeMismatch(f"vertex counts differ: {self.n} vs {other.n}")
        return Graph(self.n, self.edges() + other.edges())

    def restricted_to(self, subset: Iterable[int]) -> Graph:
        """Edges with both endpoints in ``subset``, on the same vertex set."""
        keep = set(subset)
        return Graph(self.n, [(u, v) for u, v in self.edges() if u in keep and v in keep])

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph relabelled to ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        gone = {(min(e), max(e)) for e in removed}
        return Graph(self.n, [e for e in self.edges() if e not in gone])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Instance:
    """A robust coloring instance (G, H, k) with H inside the complement of G."""

    g: Graph
    h: Graph
    k: int

    def __post_init__(self) -> None:
        if self.g.n != self.h.n:
            raise SizeMismatch(f"G has {self.g.n} vertices but H has {self.h.n}")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        shared = [e for e in self.h.edges() if self.g.has_edge(*e)]
        if shared:
            raise OverlapError(f"H shares {len(shared)} edge(s) with G, e.g. {shared[0]}")

    @property
    def n(self) -> int:
        return self.g.n


def validate_instance(g: Graph, h: Graph, k: int) -> Instance:
    return Instance(g, h, k)


def complement(g: Graph) -> Graph:
    n = g.n
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if v not in g.adj[u]))


def connected_components(g: Graph) -> list[set[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = {s}, [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring (0/1, smallest vertex of each component gets 0), or None."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(connected_components(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges == g.n - 1 and len(connected_components(g)) == 1


def bridges(g: Graph) -> set[Edge]:
    """Bridges via iterative low-link DFS; edges returned as (min, max)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: set[Edge] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, neighbor iterator)
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(g.adj[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] > disc[parent]:
                    out.add((min(u, parent), max(u, parent)))
    return out


def bridges_of_union_in_g(g: Graph, h: Graph) -> set[Edge]:
    """Edges of G whose deletion disconnects G ∪ H."""
    return {e for e in bridges(g.union(h)) if g.has_edge(*e)}


# -- exact coloring ---------------------------------------------------------


def find_coloring(g: Graph, k: int) -> list[int] | None:
    """A proper coloring with at most ``k`` colors, or None.

    DSATUR-ordered backtracking with color-symmetry breaking: a vertex may
    open at most one new color beyond those already in use.
    """
    n = g.n
    if n == 0:
        return []
    if k <= 0:
        return None
    masks = g.masks
    degree = [len(s) for s in g.adj]
    color = [-1] * n
    classes = [0] * k

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = sum(1 for c in range(k) if classes[c] & masks[v])
            if (sat, degree[v]) > key:
                best, key = v, (sat, degree[v])
        return best

    def extend(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        for c in range(min(k, used + 1)):
            if classes[c] & masks[v]:
                continue
            color[v] = c
            classes[c] |= 1 << v
            if extend(done + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            color[v] = -1
        return False

    return list(color) if extend(0, 0) else None


def optimal_coloring(g: Graph) -> tuple[int, list[int]]:
    """(χ(g), a proper χ(g)-coloring), by iterative deepening on k."""
    if g.n == 0:
        return 0, []
    k = 1 if g.num_edges == 0 else 2
    while True:
        found = find_coloring(g, k)
        if found is not None:
            return k, found
        k += 1


def chromatic_number(g: Graph) -> int:
    return optimal_coloring(g)[0]


def greedy_color_count(g: Graph, order: Sequence[int] | None = None) -> int:
    """Colors used by first-fit greedy along ``order`` (identity by default)."""
    color = [-1] * g.n
    for v in order if order is not None else range(g.n):
        taken = {color[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return max(color, default=-1) + 1


def clique_lower_bound(g: Graph) -> int:
    """Size of a maximum clique (exact; exponential, for small graphs)."""
    best = 0 if g.n == 0 else 1

    def grow(size: int, candidates: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + bin(candidates).count("1") <= best:
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            grow(size + 1, candidates & g.masks[v])

    grow(0, (1 << g.n) - 1)
    return best


# -- DIMACS-like text format --------------------------------------------------


def parse_dimacs(text: str, return_labels: bool = False):
    """Parse ``p edge n m`` / ``e u v`` text (1-indexed vertices).

    Non-integer vertex tokens are accepted as names and mapped to indices in
    order of first appearance; pass ``return_labels=True`` to get that mapping
    back as a list (index -> original token).
    """
    n = None
    raw_edges: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 3:
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: vertex count is not an integer") from None
        elif parts[0] == "e":
            if len(parts) < 3:
                raise ParseError(f"line {lineno}: malformed edge line {line!r}")
            raw_edges.append((parts[1], parts[2]))
        else:
            raise ParseError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise ParseError("missing 'p edge n m' header")

    tokens = {t for e in raw_edges for t in e}
    numeric = all(t.lstrip("-").isdigit() for t in tokens)
    labels: list[str]
    if numeric:
        labels = [str(i + 1) for i in range(n)]
        index = {str(i + 1): i for i in range(n)}
        for t in tokens:
            if t not in index:
                raise ParseError(f"vertex {t} outside 1..{n}")
    else:
        labels = []
        index = {}
        for e in raw_edges:
            for t in e:
                if t not in index:
                    index[t] = len(labels)
                    labels.append(t)
        if len(labels) > n:
            raise ParseError(f"{len(labels)} distinct vertex names but header says n={n}")
        labels += [f"#{i + 1}" for i in range(len(labels), n)]
    edges = []
    for a, b in raw_edges:
        u, v = index[a], index[b]
        if u == v:
            raise ParseError(f"self-loop on vertex {a}")
        edges.append((u, v))
    g = Graph(n, edges)
    return (g, labels) if return_labels else g


def format_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {g.n} {g.num_edges}")
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_dimacs(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def write_dimacs(g: Graph, path: str, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_dimacs(g, comment))
