import itertools

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs, to_nx
from robust_coloring.errors import OverlapError, ParseError, SizeMismatch
from robust_coloring.graph import (
    Graph,
    bridges,
    bridges_of_union_in_g,
    chromatic_number,
    clique_lower_bound,
    complement,
    connected_components,
    find_coloring,
    format_dimacs,
    greedy_color_count,
    is_bipartite,
    is_tree,
    optimal_coloring,
    parse_dimacs,
    validate_instance,
)


def brute_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges()):
                return k
    return 0


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(Graph.complete(3)) == Graph.empty(3)

    def test_path_of_three(self):
        assert complement(Graph.path(3)).edges() == [(0, 2)]

    @given(graphs(max_n=8))
    def test_involution(self, g):
        assert complement(complement(g)) == g

    @given(graphs(max_n=8))
    def test_matches_networkx(self, g):
        assert sorted(map(tuple, map(sorted, nx.complement(to_nx(g)).edges()))) == complement(g).edges()


class TestValidate:
    def test_k33_with_complement(self):
        g = Graph.complete_bipartite(3, 3)
        inst = validate_instance(g, complement(g), 3)
        assert inst.n == 6 and inst.h.num_edges == 6

    def test_shared_edge(self):
        e = Graph(2, [(0, 1)])
        with pytest.raises(OverlapError):
            validate_instance(e, e, 2)

    def test_empty_g_accepts_any_h(self):
        validate_instance(Graph.empty(4), Graph.complete(4), 2)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            validate_instance(Graph.empty(3), Graph.empty(4), 2)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            validate_instance(Graph.empty(3), Graph.empty(3), 0)


class TestChromatic:
    @pytest.mark.parametrize(
        "g, chi",
        [
            (Graph.complete_bipartite(3, 3), 2),
            (Graph.cycle(5), 3),
            (Graph.wheel(8), 4),
            (Graph.empty(4), 1),
            (Graph.complete(5), 5),
            (Graph.empty(0), 0),
        ],
    )
    def test_known_values(self, g, chi):
        assert chromatic_number(g) == chi

    def test_wheel_has_no_three_coloring(self):
        assert find_coloring(Graph.wheel(8), 3) is None
        assert find_coloring(Graph.wheel(8), 4) is not None

    @given(graphs(max_n=7))
    def test_matches_brute_force(self, g):
        chi = chromatic_number(g)
        assert chi == brute_chromatic(g)
        assert clique_lower_bound(g) <= chi <= greedy_color_count(g) <= g.max_degree() + 1

    @given(graphs(max_n=8))
    def test_witness_is_proper(self, g):
        chi, colors = optimal_coloring(g)
        assert all(colors[u] != colors[v] for u, v in g.edges())
        assert len(set(colors)) == chi


class TestStructure:
    def test_path_bridges(self):
        assert bridges(Graph.path(5)) == {(0, 1), (1, 2), (2, 3), (3, 4)}

    def test_two_edge_connected_union(self):
        g = Graph.path(4)
        h = Graph(4, [(0, 2), (1, 3)])
        assert bridges_of_union_in_g(g, h) == set()

    @given(graphs(max_n=9))
    def test_bridges_match_networkx(self, g):
        expected = {tuple(sorted(e)) for e in nx.bridges(to_nx(g))}
        assert bridges(g) == expected

    def test_components(self):
        assert sorted(map(sorted, connected_components(Graph.empty(3)))) == [[0], [1], [2]]
        assert len(connected_components(Graph.path(5))) == 1
        comps = connected_components(Graph(4, [(0, 1), (2, 3)]))
        assert sorted(len(c) for c in comps) == [2, 2]

    @given(graphs(max_n=9))
    def test_components_match_networkx(self, g):
        ours = sorted(sorted(c) for c in connected_components(g))
        theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(g)))
        assert ours == theirs

    @given(graphs(max_n=9))
    def test_tree_and_bipartite_match_networkx(self, g):
        gx = to_nx(g)
        assert is_tree(g) == (g.n > 0 and nx.is_tree(gx))
        assert is_bipartite(g) == nx.is_bipartite(gx)


class TestDimacs:
    @given(graphs(min_n=1, max_n=9))
    def test_round_trip(self, g):
        assert parse_dimacs(format_dimacs(g, "comment")) == g

    def test_named_vertices(self):
        g, labels = parse_dimacs("p edge 3 2\ne a b\ne b c\n", return_labels=True)
        assert labels == ["a", "b", "c"] and g.edges() == [(0, 1), (1, 2)]

    @pytest.mark.parametrize(
        "text",
        ["e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 1\nx 1 2\n", "p edge 2 1\ne 1 1\n", "p edge x 1\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_dimacs(text)
