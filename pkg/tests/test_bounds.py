import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import diamond_instance, instances
from robust_coloring.bounds import (
    all_bounds,
    equitable_subset,
    family_certificates,
    lower_bound_equitable,
    path_bound,
    upper_bound_alpha,
    upper_bound_general,
    upper_bound_s1,
)
from robust_coloring.coloring import PartitionProfile, mono_from_profile
from robust_coloring.errors import DomainError, InfeasibleK, SRangeError
from robust_coloring.exact import solve_exact
from robust_coloring.generators import random_tree
from robust_coloring.graph import Graph, Instance, complement


class TestEquitableLowerBound:
    @pytest.mark.parametrize("size, k, value", [(6, 3, 3), (7, 3, 5), (4, 4, 0), (0, 2, 0)])
    def test_values(self, size, k, value):
        assert lower_bound_equitable(size, k) == value

    @given(st.integers(0, 12), st.integers(1, 5))
    def test_is_minimum_over_profiles(self, size, k):
        best = min(
            mono_from_profile(PartitionProfile(c))
            for c in itertools.product(range(size + 1), repeat=k)
            if sum(c) == size
        )
        assert lower_bound_equitable(size, k) == best

    def test_bad_k(self):
        with pytest.raises(ValueError):
            lower_bound_equitable(3, 0)


class TestGeneral:
    def test_s1_form_example(self):
        assert upper_bound_general(2, 2, 10, 3) == 5 == upper_bound_s1(2, 2, 10, 1)

    @pytest.mark.parametrize("e", [0, 3, 12])
    def test_r_zero(self, e):
        assert upper_bound_general(2, 3, e, 4) == Fraction(e, 3)

    def test_s_equals_q(self):
        assert upper_bound_general(2, 2, 9, 4) == 0

    @pytest.mark.parametrize("p, q, k", [(3, 2, 2), (2, 2, 5), (2, 1, 3), (1, 2, 3)])
    def test_domain(self, p, q, k):
        with pytest.raises(SRangeError):
            upper_bound_general(p, q, 5, k)

    def test_diamond_is_one(self):
        assert upper_bound_general(3, 2, 1, 3) == 1 == solve_exact(diamond_instance()).optimum

    def test_exact_rational(self):
        assert isinstance(upper_bound_general(3, 3, 7, 4), Fraction)


class TestS1Form:
    def test_r_zero(self):
        assert upper_bound_s1(3, 4, 17, 0) == 17

    def test_relation_to_general(self):
        for p in range(1, 6):
            for q in range(2, 6):
                for k in range(max(p, q), 2 * p):
                    for e in range(0, 51, 7):
                        general = upper_bound_general(p, q, e, k)
                        short = upper_bound_s1(p, q, e, k - p)
                        assert short <= general
                        assert (short == general) == (q == 2 or e == 0)

    def test_bad_r(self):
        with pytest.raises(ValueError):
            upper_bound_s1(2, 2, 4, 2)


class TestAlpha:
    def test_tree(self):
        assert upper_bound_alpha(8, 2, 0, 3) == 4

    def test_series_parallel(self):
        assert upper_bound_alpha(9, 3, 0, 4) == Fraction(9, 2)

    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_ell_tree(self, ell):
        assert upper_bound_alpha(12, ell + 1, 0, ell + 3) == Fraction(12, 3)

    def test_domain(self):
        with pytest.raises(DomainError):
            upper_bound_alpha(5, 3, 1, 3)


class TestPathBound:
    @pytest.mark.parametrize("e, s, value", [(3, 0, 1), (0, 0, 0), (0, 2, 0), (7, 0, 2), (8, 3, 3)])
    def test_values(self, e, s, value):
        assert path_bound(e, s) == value

    @pytest.mark.parametrize("n", range(2, 30))
    def test_spanning_path_value(self, n):
        assert path_bound(n, 0) == (n + 1) // 4


class TestSandwich:
    @given(instances(max_n=7, max_k=4))
    def test_lower_and_upper(self, inst):
        try:
            opt = solve_exact(inst).optimum
        except InfeasibleK:
            return
        for report in all_bounds(inst):
            if not report.applicable:
                continue
            if report.kind == "lower":
                assert report.value <= opt, report
            else:
                assert opt <= report.value, report

    def test_equitable_subset(self):
        g = Graph.path(4)
        inst = Instance(g, complement(g), 2)
        assert equitable_subset(inst) == [0, 1, 2, 3]
        partial = Instance(g, Graph(4, [(0, 2)]), 2)
        # 1 is adjacent to 0 and 2 in G so it may join; 3 is not adjacent to 0
        assert equitable_subset(partial) == [0, 1, 2]
        assert equitable_subset(Instance(g, Graph(4, [(0, 2), (1, 3)]), 2)) is None


class TestReport:
    def test_tree_reports_k_minus_one(self):
        t = random_tree(8, random.Random(1))
        h = complement(t)
        reports = {r.name: r for r in all_bounds(Instance(t, h, 3))}
        assert reports["orientation bound (tree)"].value == Fraction(h.num_edges, 2)

    def test_path_instance_has_path_bound(self):
        g = Graph.path(6)
        h = Graph(6, [(0, 2), (2, 4), (1, 3), (3, 5)])
        reports = {r.name: r for r in all_bounds(Instance(g, h, 3))}
        assert reports["path bound"].value == path_bound(4, 0)

    def test_inapplicable_is_reported(self):
        g = Graph.complete(4)
        reports = {r.name: r for r in all_bounds(Instance(g, Graph.empty(4), 3))}
        assert not reports["class-merge bound"].applicable
        assert "not applicable" in reports["class-merge bound"].note

    def test_family_certificates(self):
        names = {c.family for c in family_certificates(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))}
        assert "series-parallel, chi=3" in names
        assert {c.family for c in family_certificates(Graph.cycle(6))} == {"bipartite outerplanar"}
