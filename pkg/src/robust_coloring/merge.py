"""Color merging and the per-class construction behind the general upper bound."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coloring import Coloring, is_proper
from .errors import BadTarget, SRangeError
from .graph import Graph, Instance, optimal_coloring


@dataclass(frozen=True)
class MergeStep:
    colors_before: int  # t at the time of the step
    pair: tuple[int, int]  # identified colors (labels before the step)
    new_mono: int  # edges of the chosen pair class
    bichromatic_before: int


def merge_colors_with_steps(
    g: Graph, c: Coloring, t_target: int
) -> tuple[Coloring, list[MergeStep]]:
    """Identify color pairs until ``t_target`` colors remain.

    Every step picks the unordered color pair carrying the fewest bichromatic
    edges (lexicographically smallest pair on ties) and merges the higher
    label into the lower one; labels above it shift down by one.
    """
    t = c.k
    if not 1 <= t_target <= t:
        raise BadTarget(f"target {t_target} outside 1..{t}")
    c.require_total()
    color = list(c.assignment)
    edges = g.edges()
    steps = []
    while t > t_target:
        counts = {(i, j): 0 for i in range(t) for j in range(i + 1, t)}
        for u, v in edges:
            a, b = color[u], color[v]
            if a != b:
                counts[(min(a, b), max(a, b))] += 1
        pair = min(counts, key=lambda p: (counts[p], p))
        i, j = pair
        steps.append(MergeStep(t, pair, counts[pair], sum(counts.values())))
        color = [i if x == j else (x - 1 if x > j else x) for x in color]
        t -= 1
    return Coloring(tuple(color), t_target), steps


def merge_colors(g: Graph, c: Coloring, t_target: int) -> Coloring:
    return merge_colors_with_steps(g, c, t_target)[0]


def merge_bound(edges: int, t: int, t_target: int) -> Fraction:
    """|E| * 2(t - t') / (t t')."""
    return Fraction(2 * edges * (t - t_target), t * t_target)


def compose_bound_coloring(inst: Instance, p_coloring: Coloring) -> Coloring:
    """A proper k-coloring of G certifying the general upper bound.

    Inside every class C_i of ``p_coloring`` the H-edges form a graph H_i.
    Classes are sorted by their H-edge count; the first p - r receive s
    colors and the last r receive s + 1 (s = k // p, r = k - p s). Each H_i is
    colored exactly and then merged down to its share, and every class gets
    its own contiguous block of color indices, so the union is proper on G.
    """
    if not is_proper(inst.g, p_coloring):
        raise ValueError("p_coloring is not a proper coloring of G")
    p = p_coloring.k
    k = inst.k
    s, r = divmod(k, p)
    if s == 0:
        raise SRangeError(f"s = floor(k/p) = 0 for k={k}, p={p}")
    classes = p_coloring.classes()
    inside = []
    for members in classes:
        ms = set(members)
        inside.append([(u, v) for u, v in inst.h.edges() if u in ms and v in ms])
    ranked = sorted(range(p), key=lambda i: (len(inside[i]), i))
    color: list[int | None] = [None] * inst.n
    offset = 0
    for rank, i in enumerate(ranked):
        share = s if rank < p - r else s + 1
        members = classes[i]
        if members:
            index = {v: x for x, v in enumerate(members)}
            hi = Graph(len(members), [(index[u], index[v]) for u, v in inside[i]])
            t, local = optimal_coloring(hi)
            local_c = Coloring(tuple(local), max(t, 1))
            if local_c.k > share:
                local_c = merge_colors(hi, local_c, share)
            for v in members:
                color[v] = offset + local_c[index[v]]
        offset += share
    return Coloring(tuple(color), k)

