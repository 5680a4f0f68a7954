"""Robust coloring: minimize monochromatic H-edges over proper k-colorings of G."""

from .bounds import (
    all_bounds,
    lower_bound_equitable,
    path_bound,
    upper_bound_alpha,
    upper_bound_general,
    upper_bound_s1,
)
from .coloring import Coloring, PartitionProfile, is_proper, mono_count, mono_edges, profile
from .errors import RobustColoringError
from .exact import solve_exact, solve_k2, solve_naive
from .graph import Graph, Instance, complement, parse_dimacs, validate_instance
from .greedy import best_ordering_search, cyclic_class_ordering, robust_greedy
from .merge import compose_bound_coloring, merge_bound, merge_colors
from .orientation import VertexOrdering, min_alpha_search
from .paths import PathInstance, three_color

__version__ = "0.1.0"
