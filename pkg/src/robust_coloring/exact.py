"""Exact robust coloring: branch and bound, the k=2 component enumeration,
and a brute-force enumerator used as an independent oracle."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .coloring import Coloring, PartitionProfile, mono_count
from .errors import InfeasibleK, Stuck
from .graph import Graph, Instance, connected_components, two_coloring
from .greedy import robust_greedy
from .orientation import VertexOrdering


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: Coloring
    explored: int


def _branch_order(inst: Instance) -> list[int]:
    union_deg = [len(inst.g.adj[v] | inst.h.adj[v]) for v in range(inst.n)]
    return sorted(range(inst.n), key=lambda v: (-union_deg[v], v))


def _to_coloring(classes: Iterable[int], n: int, k: int) -> Coloring:
    color: list[int | None] = [None] * n
    for c, mask in enumerate(classes):
        for v in range(n):
            if mask >> v & 1:
                color[v] = c
    return Coloring(tuple(color), k)


def solve_exact(
    inst: Instance,
    symmetry_breaking: bool = True,
    deterministic: bool = False,
) -> SolveResult:
    """m(G, H, k) with an optimal coloring.

    Depth-first over vertices by decreasing degree in G ∪ H. A branch is cut as
    soon as its monochromatic count reaches the incumbent, which starts from a
    robust-greedy run on the identity ordering. With ``symmetry_breaking`` a
    vertex may open at most one color beyond those already in use.

    ``deterministic=True`` returns the lexicographically smallest optimal
    color vector (a second pass in vertex-index order).
    """
    n, k = inst.n, inst.k
    gm, hm = inst.g.masks, inst.h.masks
    order = _branch_order(inst)

    best = math.inf
    best_classes: list[int] | None = None
    try:
        seed = robust_greedy(inst, VertexOrdering.identity(n))
        best = mono_count(inst.h, seed)
        best_classes = [0] * k
        for v, c in enumerate(seed.assignment):
            best_classes[c] |= 1 << v
    except Stuck:
        pass

    classes = [0] * k
    explored = 0

    def dfs(depth: int, used: int, cost: int) -> None:
        nonlocal best, best_classes, explored
        explored += 1
        if depth == n:
            best, best_classes = cost, list(classes)
            return
        v = order[depth]
        limit = min(k, used + 1) if symmetry_breaking else k
        for c in range(limit):
            if classes[c] & gm[v]:
                continue
            nc = cost + (classes[c] & hm[v]).bit_count()
            if nc >= best:
                continue
            classes[c] |= 1 << v
            dfs(depth + 1, max(used, c + 1), nc)
            classes[c] &= ~(1 << v)
            if best == 0:
                return

    if n == 0:
        return SolveResult(0, Coloring((), k), 1)
    dfs(0, 0, 0)
    if best_classes is None:
        raise InfeasibleK(f"G has no proper {k}-coloring")
    witness = _to_coloring(best_classes, n, k)
    if deterministic:
        witness = _lexmin_optimal(inst, int(best))
    return SolveResult(int(best), witness, explored)


def _lexmin_optimal(inst: Instance, optimum: int) -> Coloring:
    """Lexicographically smallest color vector of cost ``optimum``.

    Index order with first-occurrence symmetry breaking: the lexicographic
    minimum always lists colors in order of first appearance.
    """
    n, k = inst.n, inst.k
    gm, hm = inst.g.masks, inst.h.masks
    classes = [0] * k
    color = [0] * n

    def dfs(v: int, used: int, cost: int) -> bool:
        if v == n:
            return True
        for c in range(min(k, used + 1)):
            if classes[c] & gm[v]:
                continue
            nc = cost + (classes[c] & hm[v]).bit_count()
            if nc > optimum:
                continue
            classes[c] |= 1 << v
            color[v] = c
            if dfs(v + 1, max(used, c + 1), nc):
                return True
            classes[c] &= ~(1 << v)
        return False

    if not dfs(0, 0, 0):
        raise AssertionError("no coloring attains the computed optimum")
    return Coloring(tuple(color), k)


def optimal_colorings(inst: Instance) -> tuple[int, list[Coloring]]:
    """The optimum and every optimal coloring, one per color permutation class."""
    n, k = inst.n, inst.k
    gm, hm = inst.g.masks, inst.h.masks
    order = _branch_order(inst)
    best = math.inf
    found: list[list[int]] = []
    classes = [0] * k

    def dfs(depth: int, used: int, cost: int) -> None:
        nonlocal best, found
        if depth == n:
            if cost < best:
                best, found = cost, []
            found.append(list(classes))
            return
        v = order[depth]
        for c in range(min(k, used + 1)):
            if classes[c] & gm[v]:
                continue
            nc = cost + (classes[c] & hm[v]).bit_count()
            if nc > best:
                continue
            classes[c] |= 1 << v
            dfs(depth + 1, max(used, c + 1), nc)
            classes[c] &= ~(1 << v)

    dfs(0, 0, 0)
    if not found:
        raise InfeasibleK(f"G has no proper {k}-coloring")
    return int(best), [_to_coloring(cl, n, k) for cl in found]


def optimal_profiles(inst: Instance, subset: Iterable[int] | None = None) -> set[PartitionProfile]:
    """Sorted partition profiles (over ``subset``, default all vertices) of all optimal colorings."""
    vertices = list(range(inst.n)) if subset is None else list(subset)
    _, sols = optimal_colorings(inst)
    out = set()
    for c in sols:
        counts = [0] * inst.k
        for v in vertices:
            counts[c[v]] += 1
        out.add(PartitionProfile(tuple(sorted(counts))))
    return out


def solve_k2(inst: Instance) -> SolveResult:
    """Exact k=2 solver: each component of G has one 2-coloring up to a swap,
    so enumerate the swap choices of all components but the first."""
    if inst.k != 2:
        raise ValueError("solve_k2 requires k = 2")
    base = two_coloring(inst.g)
    if base is None:
        raise InfeasibleK("G has an odd cycle, so no proper 2-coloring exists")
    comps = sorted(connected_components(inst.g), key=min)
    comp_of = [0] * inst.n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    # an H-edge is monochromatic iff base parity and swap parity agree
    terms = [(comp_of[u], comp_of[v], base[u] ^ base[v]) for u, v in inst.h.edges()]
    best, best_flip, explored = math.inf, None, 0
    for tail in itertools.product((0, 1), repeat=max(len(comps) - 1, 0)):
        flip = (0,) + tail
        explored += 1
        cost = sum(1 for a, b, d in terms if d ^ flip[a] ^ flip[b] == 0)
        if cost < best:
            best, best_flip = cost, flip
            if cost == 0:
                break
    color = tuple(base[v] ^ best_flip[comp_of[v]] for v in range(inst.n))
    return SolveResult(int(best), Coloring(color, 2), explored)


def max_cut_brute_force(h: Graph) -> int:
    """Largest number of edges crossing a bipartition of V(h)."""
    edges = h.edges()
    if not edges:
        return 0
    best = 0
    for bits in range(1 << max(h.n - 1, 0)):
        cut = sum(1 for u, v in edges if (bits >> u & 1) != (bits >> v & 1))
        best = max(best, cut)
    return best


# -- brute-force oracle --------------------------------------------------------


def all_proper_colorings(g: Graph, k: int) -> np.ndarray:
    """Every proper coloring with colors 0..k-1 as rows of an int8 array (k^n rows before filtering)."""
    n = g.n
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    grid = np.indices((k,) * n, dtype=np.int8).reshape(n, -1).T
    ok = np.ones(len(grid), dtype=bool)
    for u, v in g.edges():
        ok &= grid[:, u] != grid[:, v]
    return grid[ok]


def solve_naive(inst: Instance) -> int:
    """Minimum monochromatic count over all k^n assignments, no pruning or symmetry."""
    rows = all_proper_colorings(inst.g, inst.k)
    if len(rows) == 0:
        raise InfeasibleK(f"G has no proper {inst.k}-coloring")
    cost = np.zeros(len(rows), dtype=np.int32)
    for u, v in inst.h.edges():
        cost += rows[:, u] == rows[:, v]
    return int(cost.min())
