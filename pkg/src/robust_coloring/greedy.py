"""The robust-greedy coloring rule and ordering search utilities."""

from __future__ import annotations

import math
from typing import Sequence

from .coloring import Coloring
from .errors import PartialColoring, Stuck
from .graph import Instance
from .orientation import VertexOrdering, as_ordering


def robust_greedy(inst: Instance, order: VertexOrdering | Sequence[int]) -> Coloring:
    """Color vertices along ``order``.

    Each vertex takes, among the colors not used by its already-colored
    G-neighbors, the one creating the fewest monochromatic H-edges with
    already-colored H-neighbors; ties go to the smallest color index.
    """
    order = as_ordering(order)
    if len(order) != inst.n:
        raise ValueError(f"ordering has {len(order)} vertices, instance has {inst.n}")
    gm, hm, k = inst.g.masks, inst.h.masks, inst.k
    classes = [0] * k
    color: list[int | None] = [None] * inst.n
    for pos, v in enumerate(order):
        best, best_cost = -1, math.inf
        for c in range(k):
            if classes[c] & gm[v]:
                continue
            cost = (classes[c] & hm[v]).bit_count()
            if cost < best_cost:
                best, best_cost = c, cost
        if best < 0:
            raise Stuck(v, pos)
        classes[best] |= 1 << v
        color[v] = best
    return Coloring(tuple(color), k)


def best_ordering_search(
    inst: Instance, target: int = 0
) -> tuple[VertexOrdering, Coloring]:
    """Exhaustive search for the ordering whose robust-greedy run is cheapest.

    Orderings are explored depth-first (vertices in index order at every
    level). Two prefixes that leave the same partial coloring have identical
    continuations, so partial colorings already expanded are skipped; a
    prefix whose monochromatic count already reaches the incumbent is cut.
    The search stops early once a run costs ``target`` or less.

    Raises Stuck when every ordering gets stuck.
    """
    n, k = inst.n, inst.k
    gm, hm = inst.g.masks, inst.h.masks
    full = (1 << n) - 1
    best_cost = math.inf
    best_order: list[int] | None = None
    best_classes: list[int] | None = None
    seen: set[tuple[int, ...]] = set()
    prefix: list[int] = []
    classes = [0] * k

    def expand(colored: int, cost: int) -> bool:
        nonlocal best_cost, best_order, best_classes
        if colored == full:
            if cost < best_cost:
                best_cost, best_order, best_classes = cost, list(prefix), list(classes)
            return best_cost <= target
        key = tuple(classes)
        if key in seen:
            return False
        seen.add(key)
        for v in range(n):
            if colored >> v & 1:
                continue
            pick, pick_cost = -1, math.inf
            for c in range(k):
                if classes[c] & gm[v]:
                    continue
                cc = (classes[c] & hm[v]).bit_count()
                if cc < pick_cost:
                    pick, pick_cost = c, cc
            if pick < 0 or cost + pick_cost >= best_cost:
                continue
            classes[pick] |= 1 << v
            prefix.append(v)
            done = expand(colored | 1 << v, cost + pick_cost)
            prefix.pop()
            classes[pick] &= ~(1 << v)
            if done:
                return True
        return False

    expand(0, 0)
    if best_order is None:
        raise Stuck(-1, -1)
    color: list[int | None] = [None] * n
    for c, mask in enumerate(best_classes):
        for v in range(n):
            if mask >> v & 1:
                color[v] = c
    return VertexOrdering.of(best_order), Coloring(tuple(color), k)


def cyclic_class_ordering(c: Coloring) -> VertexOrdering:
    """Take one vertex from each class in turn, smallest classes first.

    Classes are sorted by size (then color index); inside a class vertices
    are taken in increasing index order.
    """
    if not c.is_total():
        raise PartialColoring("cyclic ordering needs a total coloring")
    classes = sorted((cls for cls in c.classes() if cls), key=len)
    order = []
    for i in range(max((len(cls) for cls in classes), default=0)):
        order += [cls[i] for cls in classes if i < len(cls)]
    return VertexOrdering.of(order)
