"""3-coloring a path G against a vertex-disjoint union of paths H.

The procedure guarantees at most floor((|E(H)| + 1 + s) / 4) monochromatic
H-edges, where s counts the G-edges that are bridges of G ∪ H.

Everything runs on positions 0..n-1 along G, so every subproblem is an
interval [lo, hi] with the H-edges inside it. The steps, in order:

* bridge split: a cut of the path crossed by no H-edge;
* single-edge split: a cut crossed by exactly one H-edge (the right half is
  recolored by a permutation so that both the G-edge and that H-edge are
  bichromatic);
* last-vertex strip: the right end has H-degree two; the prefix up to the
  second-to-last right endpoint is solved recursively and the tail is
  extended optimally, accepting at most one extra monochromatic edge;
* left-to-right scan: color greedily without monochromatic edges; at a
  saturated vertex (two colored H-neighbors plus a colored G-neighbor using
  all three colors) it is left blank, the block up to the conditioned
  vertices is colored so every semi-colored edge is bichromatic, and the
  saturated vertex is filled in last with exactly one monochromatic edge.

The two splits and the strip are applied only when the bounds of the
subproblems add up to at most the bound of the whole, which makes them safe
by induction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bounds import path_bound
from .coloring import Coloring, is_proper, mono_count
from .errors import NotAPath, NotUnionOfPaths, OverlapError, RobustColoringError
from .graph import Graph, Instance, bridges_of_union_in_g, connected_components

BLOCK_SEARCH_LIMIT = 50_000
MEMO_MAX_LENGTH = 9  # intervals shorter than this are shared across calls in bulk mode


class PathBoundViolation(RobustColoringError):
    """The constructed coloring exceeds the guaranteed bound (internal error)."""


@dataclass(frozen=True)
class PathInstance:
    """G a path listed by ``order`` (u_1..u_n), H a union of paths in its complement."""

    g: Graph
    h: Graph
    order: tuple[int, ...]

    @classmethod
    def from_graphs(cls, g: Graph, h: Graph) -> PathInstance:
        if g.n != h.n:
            raise NotAPath(f"G has {g.n} vertices but H has {h.n}")
        order = path_order(g)
        if not is_disjoint_union_of_paths(h):
            raise NotUnionOfPaths("H is not a vertex-disjoint union of paths")
        shared = [e for e in h.edges() if g.has_edge(*e)]
        if shared:
            raise OverlapError(f"H shares edge {shared[0]} with G")
        return cls(g, h, tuple(order))

    @classmethod
    def from_positions(cls, n: int, h_edges) -> PathInstance:
        """G = 0-1-...-(n-1) and H given by its edge list."""
        return cls.from_graphs(Graph.path(n), Graph(n, h_edges))

    @property
    def n(self) -> int:
        return self.g.n

    def position_edges(self) -> list[tuple[int, int]]:
        pos = {v: i for i, v in enumerate(self.order)}
        return sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in self.h.edges())

    def bridge_count(self) -> int:
        return len(bridges_of_union_in_g(self.g, self.h))

    def bound(self) -> int:
        return path_bound(self.h.num_edges, self.bridge_count())

    def as_instance(self, k: int = 3) -> Instance:
        return Instance(self.g, self.h, k)


def path_order(g: Graph) -> list[int]:
    """Vertices of the path from its lower-index endpoint; NotAPath otherwise."""
    n = g.n
    if n == 0:
        return []
    if n == 1:
        return [0]
    degrees = [len(s) for s in g.adj]
    ends = [v for v in range(n) if degrees[v] == 1]
    if g.num_edges != n - 1 or len(ends) != 2 or max(degrees) > 2:
        raise NotAPath("G is not a simple path")
    order, prev, cur = [ends[0]], -1, ends[0]
    while len(order) < n:
        nxt = next(w for w in g.adj[cur] if w != prev)
        prev, cur = cur, nxt
        order.append(cur)
    return order


def is_disjoint_union_of_paths(h: Graph) -> bool:
    if h.max_degree() > 2:
        return False
    return h.num_edges == h.n - len(connected_components(h))


@dataclass
class TraceEvent:
    kind: str  # bridge, single_edge, strip, strip_declined, saturated, forced
    position: int
    detail: dict = field(default_factory=dict)


_PERMS = list(itertools.permutations(range(3)))
_INF = 1 << 30


class _Colorer:
    def __init__(self, n: int, edges, memo: dict | None = None):
        self.n = n
        self.memo = memo
        self.edges = sorted((min(a, b), max(a, b)) for a, b in edges)
        self.nbrs: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.edges:
            self.nbrs[a].append(b)
            self.nbrs[b].append(a)
        for lst in self.nbrs:
            lst.sort()
        self.c = [-1] * n
        self.trace: list[TraceEvent] = []
        self._cross: dict[tuple[int, int], tuple[list[int], int]] = {}

    # -- interval bookkeeping --------------------------------------------------

    def crossings(self, lo: int, hi: int) -> tuple[list[int], int]:
        """H-edges crossing each cut (t | t+1) for t in lo..hi-1, and the edge count."""
        key = (lo, hi)
        hit = self._cross.get(key)
        if hit is not None:
            return hit
        diff = [0] * (hi - lo + 1)
        e = 0
        for a, b in self.edges:
            if a >= lo and b <= hi:
                diff[a - lo] += 1
                diff[b - lo] -= 1
                e += 1
        out = list(itertools.accumulate(diff[:-1]))
        self._cross[key] = (out, e)
        return out, e

    def bound(self, lo: int, hi: int) -> int:
        cross, e = self.crossings(lo, hi)
        return path_bound(e, cross.count(0))

    # -- recursion -------------------------------------------------------------

    def solve(self, lo: int, hi: int) -> None:
        if self.memo is None or hi - lo >= MEMO_MAX_LENGTH:
            self._solve(lo, hi)
            return
        key = (hi - lo, *((a - lo, b - lo) for a, b in self.edges if a >= lo and b <= hi))
        hit = self.memo.get(key)
        if hit is None:
            self._solve(lo, hi)
            self.memo[key] = tuple(self.c[lo : hi + 1])
        else:
            self.c[lo : hi + 1] = hit

    def _solve(self, lo: int, hi: int) -> None:
        c = self.c
        cross, e = self.crossings(lo, hi)
        if e == 0:
            for t in range(lo, hi + 1):
                c[t] = (t - lo) % 2
            return
        if hi - lo == 2:
            c[lo], c[lo + 1], c[hi] = 0, 1, 2
            return
        whole = path_bound(e, cross.count(0))
        if 0 in cross:
            cut = lo + cross.index(0)
            self.trace.append(TraceEvent("bridge", cut))
            self.solve(lo, cut)
            self.solve(cut + 1, hi)
            self.glue(lo, cut, hi)
            return
        for t, x in enumerate(cross):
            if x == 1:
                cut = lo + t
                if self.bound(lo, cut) + self.bound(cut + 1, hi) > whole:
                    continue
                self.trace.append(TraceEvent("single_edge", cut))
                self.solve(lo, cut)
                self.solve(cut + 1, hi)
                self.glue(lo, cut, hi)
                return
        if self.strip_last(lo, hi, whole):
            return
        self.scan(lo, hi)

    def glue(self, lo: int, cut: int, hi: int) -> None:
        """Permute colors of (cut, hi] so the G-edge and crossing H-edges are bichromatic."""
        c = self.c
        need = [(c[cut], c[cut + 1])]
        need += [(c[a], c[b]) for a, b in self.edges if lo <= a <= cut < b <= hi]
        for perm in _PERMS:
            if all(perm[y] != x for x, y in need):
                for t in range(cut + 1, hi + 1):
                    c[t] = perm[c[t]]
                return
        raise AssertionError(f"no color permutation satisfies the cut at {cut}")

    def strip_last(self, lo: int, hi: int, whole: int) -> bool:
        """Solve the prefix up to the second right endpoint, then extend the tail.

        Inside the tail only the last vertex and u_k (the first right
        endpoint) have H-edges, so fixing their two colors leaves a path
        problem with unary costs, solved exactly by dynamic programming.
        """
        nbrs = self.nbrs
        rights = []
        for b in range(hi - 1, lo - 1, -1):
            rights += [b for a in nbrs[b] if lo <= a < b]
            if len(rights) >= 2:
                break
        if len(rights) < 2:
            return False
        k, j = rights[0], rights[1]
        if self.bound(lo, j) + 1 > whole:
            self.trace.append(TraceEvent("strip_declined", hi, {"j": j, "k": k}))
            return False
        self.solve(lo, j)
        c = self.c
        specials = sorted({k, hi} - {j})
        tail = range(j + 1, hi + 1)
        base, links = [], []
        for m in tail:
            row, linked = [0, 0, 0], []
            for w in nbrs[m]:
                if lo <= w <= j:
                    row[c[w]] += 1
                elif j < w <= hi:
                    if w in specials and (m not in specials or w < m):
                        linked.append(w)
                    elif w not in specials and m not in specials:
                        raise AssertionError("tail edge between two non-endpoint vertices")
            base.append(row)
            links.append(linked)
        best = None
        for combo in itertools.product(range(3), repeat=len(specials)):
            fixed = dict(zip(specials, combo))
            cost = [_INF] * 3
            back = []
            prev = c[j]
            for idx, m in enumerate(tail):
                row = list(base[idx])
                for w in links[idx]:
                    row[fixed[w]] += 1
                allowed = (fixed[m],) if m in fixed else (0, 1, 2)
                nxt, arg = [_INF] * 3, [-1] * 3
                for x in allowed:
                    if idx == 0:
                        if x != prev:
                            nxt[x] = row[x]
                        continue
                    for y in range(3):
                        if y != x and cost[y] + row[x] < nxt[x]:
                            nxt[x], arg[x] = cost[y] + row[x], y
                cost = nxt
                back.append(arg)
            total = min(cost)
            if total >= _INF or (best is not None and total >= best[0]):
                continue
            x = cost.index(total)
            colors = []
            for arg in reversed(back):
                colors.append(x)
                x = arg[x]
            best = (total, colors[::-1])
        if best is None or best[0] > 1:
            self.trace.append(
                TraceEvent("strip_declined", hi, {"j": j, "k": k, "tail_mono": None if best is None else best[0]})
            )
            return False
        for m, x in zip(tail, best[1]):
            c[m] = x
        self.trace.append(TraceEvent("strip", hi, {"j": j, "k": k, "tail_mono": best[0]}))
        return True

    def scan(self, lo: int, hi: int) -> None:
        c, nbrs = self.c, self.nbrs
        for t in range(lo, hi + 1):
            c[t] = -1
        pending: list[int] = []
        events: list[TraceEvent] = []
        v, free_left = lo, True
        while v <= hi:
            best, best_cost = -1, 3
            for x in range(3):
                if not free_left and c[v - 1] == x:
                    continue
                cost = sum(1 for w in nbrs[v] if lo <= w < v and c[w] == x)
                if cost < best_cost:
                    best, best_cost = x, cost
            if best_cost == 0 or v == hi:
                c[v] = best
                if best_cost:
                    events.append(TraceEvent("saturated", v, {"end": True, "local": [(w, v) for w in nbrs[v] if lo <= w < v]}))
                v, free_left = v + 1, False
                continue
            i = v
            conditioned = [
                (u, [w for w in nbrs[u] if lo <= w < i]) for u in range(i + 1, hi + 1)
            ]
            conditioned = [(u, semi) for u, semi in conditioned if semi]
            if not conditioned:
                raise AssertionError(f"saturated position {i} has no conditioned vertex")
            j, semi_j = conditioned[0]
            kk = None
            if len(semi_j) == 1 and len(conditioned) > 1:
                kk = conditioned[1][0]
            r = j if kk is None else kk
            if self.color_block(lo, i, r):
                local = [(w, i) for w in nbrs[i] if lo <= w < i]
                local += [(w, j) for w in semi_j]
                if kk is not None:
                    local += [(w, kk) for w in conditioned[1][1]]
                events.append(TraceEvent("saturated", i, {"j": j, "k": kk, "local": local}))
                pending.append(i)
                v, free_left = r + 1, False
            else:
                c[i] = best
                events.append(TraceEvent("forced", i, {"j": j, "k": kk}))
                v, free_left = i + 1, False
        for i in pending:
            opts = []
            for x in range(3):
                if x == c[i - 1] or (i < hi and x == c[i + 1]):
                    continue
                opts.append((sum(1 for w in nbrs[i] if lo <= w < i and c[w] == x), x))
            c[i] = min(opts)[1]
        for ev in events:
            local = ev.detail.get("local", [])
            ev.detail["bichromatic"] = sum(1 for a, b in local if c[a] != c[b])
            ev.detail["monochromatic"] = len(local) - ev.detail["bichromatic"]
        self.trace += events

    def color_block(self, lo: int, i: int, r: int) -> bool:
        """Color (i, r] so every H-edge to an already colored vertex other than i is bichromatic."""
        c, nbrs = self.c, self.nbrs
        budget = [BLOCK_SEARCH_LIMIT]

        def place(m: int) -> bool:
            if m > r:
                return True
            budget[0] -= 1
            if budget[0] < 0:
                return False
            for x in range(3):
                if m > i + 1 and c[m - 1] == x:
                    continue
                if any(c[w] == x for w in nbrs[m] if lo <= w < m and w != i):
                    continue
                c[m] = x
                if place(m + 1):
                    return True
                c[m] = -1
            return False

        if place(i + 1):
            return True
        for m in range(i + 1, r + 1):
            c[m] = -1
        return False


def color_positions(n: int, edges, memo: dict | None = None) -> tuple[list[int], list[TraceEvent]]:
    """Core routine on positions: G = 0-1-...-(n-1), H given by ``edges``.

    ``memo`` (any dict, reused across calls) caches the colorings of short
    subintervals, which speeds up bulk runs over many related instances.
    The trace then omits steps taken inside cached subintervals.
    """
    if n == 0:
        return [], []
    col = _Colorer(n, edges, memo)
    col.solve(0, n - 1)
    return col.c, col.trace


def three_color_with_trace(inst: PathInstance) -> tuple[Coloring, list[TraceEvent]]:
    colors, trace = color_positions(inst.n, inst.position_edges())
    out: list[int | None] = [None] * inst.n
    for p, v in enumerate(inst.order):
        out[v] = colors[p]
    coloring = Coloring(tuple(out), 3)
    mono, limit = mono_count(inst.h, coloring), inst.bound()
    if mono > limit:
        raise PathBoundViolation(f"{mono} monochromatic edges exceed the bound {limit}")
    return coloring, trace


def three_color(inst: PathInstance) -> Coloring:
    return three_color_with_trace(inst)[0]


def split_at_cut(inst: PathInstance, t: int) -> tuple[PathInstance, PathInstance]:
    """Sub-instances left and right of the G-edge between positions t and t+1."""
    if not 0 <= t < inst.n - 1:
        raise ValueError(f"cut {t} outside 0..{inst.n - 2}")
    edges = inst.position_edges()
    left = PathInstance.from_positions(t + 1, [(a, b) for a, b in edges if b <= t])
    right = PathInstance.from_positions(
        inst.n - t - 1, [(a - t - 1, b - t - 1) for a, b in edges if a > t]
    )
    return left, right


@dataclass(frozen=True)
class OracleReport:
    mono: int
    optimum: int
    bound: int
    bridges: int
    proper: bool

    @property
    def holds(self) -> bool:
        return self.proper and self.optimum <= self.mono <= self.bound


def verify_against_oracle(inst: PathInstance) -> OracleReport:
    from .exact import solve_exact

    coloring = three_color(inst)
    opt = solve_exact(inst.as_instance(3)).optimum
    return OracleReport(
        mono=mono_count(inst.h, coloring),
        optimum=opt,
        bound=inst.bound(),
        bridges=inst.bridge_count(),
        proper=is_proper(inst.g, coloring),
    )
