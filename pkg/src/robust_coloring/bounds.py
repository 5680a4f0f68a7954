"""Closed-form bounds on m(G, H, k), all as exact integers or fractions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import DomainError, RobustColoringError, SRangeError
from .graph import Graph, Instance, chromatic_number, complement, is_bipartite, is_tree


def lower_bound_equitable(subset_size: int, k: int) -> int:
    """Monochromatic pairs of an equitable k-partition of a set of the given size."""
    if k < 1:
        raise ValueError("k must be at least 1")
    s, r = divmod(subset_size, k)
    return (k - r) * comb(s, 2) + r * comb(s + 1, 2)


def upper_bound_general(p: int, q: int, edges_h: int, k: int) -> Fraction:
    """Bound from splitting k colors over the p classes of G and merging an exact
    q-coloring of H inside each class."""
    if min(p, q) < 1 or k < max(p, q):
        raise SRangeError(f"need k >= max(p, q) >= 1, got p={p}, q={q}, k={k}")
    s, r = divmod(k, p)
    if s == 0:
        raise SRangeError(f"s = floor(k/p) = 0 for k={k}, p={p}")
    if s > q or (s == q and r > 0):
        raise SRangeError(f"merge target s={s} (or s+1) exceeds q={q}")
    inner = Fraction((p - r) * (q - s), s) + Fraction(r * (q - s - 1), s + 1)
    return Fraction(2 * edges_h, p * q) * inner


def upper_bound_s1(p: int, q: int, edges_h: int, r: int) -> Fraction:
    """Bound for k < 2p: (|E(H)|/p)(p - 2r/q).

    Classes kept at one color cost exactly their edge count, which is never
    more than the merge estimate 2(q-1)/q. So this is at most
    upper_bound_general with s = 1, and equal to it exactly when q = 2.
    """
    if not 0 <= r < p:
        raise ValueError(f"r={r} outside 0..{p - 1}")
    return Fraction(edges_h, p) * (p - Fraction(2 * r, q))


def upper_bound_alpha(edges_h: int, chi_g: int, alpha: int, k: int) -> Fraction:
    """|E(H)| / (k - χ(G) + 1 - α) for an α-greedy-orientable G."""
    denom = k - chi_g + 1 - alpha
    if denom <= 0:
        raise DomainError(f"k - chi + 1 - alpha = {denom} is not positive")
    return Fraction(edges_h, denom)


def path_bound(edges_h: int, s_bridges: int) -> int:
    if edges_h < 0 or s_bridges < 0:
        raise ValueError("counts must be non-negative")
    return (edges_h + 1 + s_bridges) // 4


# -- family detection and reporting --------------------------------------------


@dataclass(frozen=True)
class FamilyCertificate:
    family: str
    ordering: tuple[int, ...]
    chi: int
    max_in_degree: int

    @property
    def alpha(self) -> int:
        return self.max_in_degree - self.chi + 1


def family_certificates(g: Graph) -> list[FamilyCertificate]:
    """Orderings certified by the structural constructions that apply to g."""
    from .orientation import (
        ell_tree_ordering,
        is_outerplanar,
        max_in_degree,
        series_parallel_ordering,
        tree_ordering,
    )
    from .errors import NotEllTree, NotSeriesParallel

    out = []
    if g.n == 0:
        return out
    chi = chromatic_number(g)

    def add(name, order):
        out.append(FamilyCertificate(name, tuple(order), chi, max_in_degree(g, order)))

    if is_tree(g):
        add("tree", tree_ordering(g))
    try:
        sp = series_parallel_ordering(g)
    except NotSeriesParallel:
        sp = None
    if sp is not None and chi == 3:
        add("series-parallel, chi=3", sp)
    if sp is not None and chi <= 2 and is_bipartite(g) and is_outerplanar(g) and not is_tree(g):
        add("bipartite outerplanar", sp)
    for ell in range(2, g.n):
        try:
            add(f"{ell}-tree", ell_tree_ordering(g, ell))
        except NotEllTree:
            continue
    return out


def equitable_subset(inst: Instance) -> list[int] | None:
    """A vertex set S with H equal to the complement of G restricted to S, if one exists.

    Starts from the non-isolated vertices of H and adds isolated vertices in
    index order whenever that keeps H = complement(G)[S].
    """
    h, gbar = inst.h, complement(inst.g)
    s = [v for v in range(inst.n) if h.adj[v]]
    members = set(s)
    for u in s:
        if gbar.adj[u] & members != h.adj[u]:
            return None
    for v in range(inst.n):
        if v not in members and not (gbar.adj[v] & members):
            members.add(v)
    return sorted(members)


@dataclass
class BoundReport:
    name: str
    kind: str  # "lower" or "upper"
    value: Fraction | int | None
    params: dict = field(default_factory=dict)
    note: str = ""

    @property
    def applicable(self) -> bool:
        return self.value is not None


def all_bounds(inst: Instance, alpha_search_limit: int = 14) -> list[BoundReport]:
    """Every bound that applies to the instance, with the parameters used.

    Domain problems are reported as inapplicable entries, never raised.
    """
    from .graph import bridges_of_union_in_g
    from .orientation import min_alpha_search
    from .paths import PathInstance

    g, h, k = inst.g, inst.h, inst.k
    e = h.num_edges
    reports: list[BoundReport] = []

    subset = equitable_subset(inst)
    if subset is None:
        reports.append(BoundReport("equitable lower bound", "lower", None, note="H is not complement(G)[S] for any S"))
    else:
        reports.append(
            BoundReport("equitable lower bound", "lower", lower_bound_equitable(len(subset), k), {"|S|": len(subset), "k": k})
        )

    p, q = chromatic_number(g), chromatic_number(h)
    params = {"p": p, "q": q, "|E(H)|": e, "k": k}
    try:
        reports.append(BoundReport("class-merge bound", "upper", upper_bound_general(p, q, e, k), params))
    except RobustColoringError as exc:
        reports.append(BoundReport("class-merge bound", "upper", None, params, f"not applicable: {exc}"))
    if p <= k < 2 * p and q >= 1:
        reports.append(
            BoundReport("class-merge bound, s=1 form", "upper", upper_bound_s1(p, q, e, k - p), {**params, "r": k - p})
        )

    def alpha_entry(name, alpha, extra):
        try:
            value = upper_bound_alpha(e, p, alpha, k)
            reports.append(BoundReport(name, "upper", value, {"chi": p, "alpha": alpha, "k": k, **extra}))
        except DomainError as exc:
            reports.append(BoundReport(name, "upper", None, {"chi": p, "alpha": alpha, "k": k, **extra}, f"not applicable: {exc}"))

    if 0 < g.n <= alpha_search_limit:
        _, alpha = min_alpha_search(g)
        alpha_entry("orientation bound (exact alpha)", alpha, {})
    for cert in family_certificates(g):
        alpha_entry(f"orientation bound ({cert.family})", cert.alpha, {"max in-degree": cert.max_in_degree})

    if k == 3:
        try:
            PathInstance.from_graphs(g, h)
        except RobustColoringError:
            pass
        else:
            s = len(bridges_of_union_in_g(g, h))
            reports.append(BoundReport("path bound", "upper", path_bound(e, s), {"|E(H)|": e, "s": s}))
    return reports
