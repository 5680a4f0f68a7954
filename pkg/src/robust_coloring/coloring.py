"""Colorings, monochromatic counts and partition profiles."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, PartialColoring
from .graph import Edge, Graph


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color in ``0..k-1``; ``None`` marks an uncolored vertex."""

    assignment: tuple[int | None, ...]
    k: int

    def __post_init__(self) -> None:
        for v, c in enumerate(self.assignment):
            if c is not None and not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has color {c} outside 0..{self.k - 1}")

    @classmethod
    def of(cls, colors: Sequence[int | None], k: int | None = None) -> Coloring:
        """Build from a list; ``k`` defaults to one more than the largest color."""
        colors = tuple(None if c is None else int(c) for c in colors)
        if k is None:
            k = max((c for c in colors if c is not None), default=-1) + 1
        return cls(colors, k)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int | None:
        return self.assignment[v]

    def __len__(self) -> int:
        return len(self.assignment)

    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def require_total(self, vertices: Iterable[int] | None = None) -> None:
        vs = range(self.n) if vertices is None else vertices
        missing = [v for v in vs if self.assignment[v] is None]
        if missing:
            raise PartialColoring(f"vertices without a color: {missing[:8]}")

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            if c is not None:
                out[c].append(v)
        return out

    def colors_used(self) -> int:
        return len({c for c in self.assignment if c is not None})

    def as_list(self) -> list[int | None]:
        return list(self.assignment)


@dataclass(frozen=True)
class PartitionProfile:
    """Color-class sizes (n_1, ..., n_k) restricted to a vertex subset."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError("profile counts must be non-negative")

    @property
    def k(self) -> int:
        return len(self.counts)

    @property
    def subset_size(self) -> int:
        return sum(self.counts)

    def sorted(self) -> PartitionProfile:
        return PartitionProfile(tuple(sorted(self.counts)))

    def spread(self) -> int:
        return max(self.counts) - min(self.counts) if self.counts else 0


def is_proper(g: Graph, c: Coloring) -> bool:
    c.require_total()
    a = c.assignment
    return all(a[u] != a[v] for u, v in g.edges())


def mono_edges(h: Graph, c: Coloring) -> list[Edge]:
    c.require_total()
    a = c.assignment
    return [(u, v) for u, v in h.edges() if a[u] == a[v]]


def mono_count(h: Graph, c: Coloring) -> int:
    return len(mono_edges(h, c))


def profile(c: Coloring, s: Iterable[int] | None = None) -> PartitionProfile:
    vertices = range(c.n) if s is None else list(s)
    c.require_total(vertices)
    counts = [0] * c.k
    for v in vertices:
        counts[c.assignment[v]] += 1
    return PartitionProfile(tuple(counts))


def mono_from_profile(p: PartitionProfile) -> int:
    """Number of monochromatic pairs, sum of C(n_i, 2)."""
    return sum(x * (x - 1) // 2 for x in p.counts)


def distance_to_half_point(p: PartitionProfile) -> float:
    """Euclidean distance from the profile to (1/2, ..., 1/2)."""
    return math.sqrt(sum((x - 0.5) ** 2 for x in p.counts))


def distance_to_ideal(p: PartitionProfile) -> float:
    """Euclidean distance from the profile to the uniform point (|S|/k, ..., |S|/k)."""
    if p.k == 0:
        return 0.0
    mean = p.subset_size / p.k
    return math.sqrt(sum((x - mean) ** 2 for x in p.counts))


def squared_distance_to_half_point(p: PartitionProfile) -> Fraction:
    return sum(((Fraction(x) - Fraction(1, 2)) ** 2 for x in p.counts), Fraction(0))


def squared_distance_to_ideal(p: PartitionProfile) -> Fraction:
    """Exact square of distance_to_ideal, for tie-sensitive comparisons."""
    if p.k == 0:
        return Fraction(0)
    mean = Fraction(p.subset_size, p.k)
    return sum(((x - mean) ** 2 for x in p.counts), Fraction(0))


def is_equitable_over(c: Coloring, s: Iterable[int] | None = None) -> bool:
    return profile(c, s).spread() <= 1


# -- text format ---------------------------------------------------------------


def format_coloring(c: Coloring) -> str:
    """One ``v <vertex> <color>`` line per colored vertex (vertices 1-indexed)."""
    return "".join(f"v {v + 1} {col}\n" for v, col in enumerate(c.assignment) if col is not None)


def parse_coloring(text: str, n: int, k: int | None = None) -> Coloring:
    colors: list[int | None] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] != "v" or len(parts) != 3:
            raise ParseError(f"line {lineno}: expected 'v <vertex> <color>', got {line!r}")
        try:
            v, col = int(parts[1]) - 1, int(parts[2])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field") from None
        if not 0 <= v < n:
            raise ParseError(f"line {lineno}: vertex {v + 1} outside 1..{n}")
        if col < 0:
            raise ParseError(f"line {lineno}: negative color")
        colors[v] = col
    return Coloring.of(colors, k)
