import pytest

from robust_coloring.errors import InputError
from robust_coloring.generators import KINDS, generate
from robust_coloring.graph import Graph, Instance, chromatic_number, complement, is_bipartite, is_tree
from robust_coloring.orientation import is_ell_tree, is_outerplanar, is_series_parallel
from robust_coloring.paths import PathInstance


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("seed", range(5))
def test_valid_and_deterministic(kind, seed):
    a = generate(kind, 9, seed)
    b = generate(kind, 9, seed)
    assert a.g == b.g and a.h == b.h
    Instance(a.g, a.h, 3)


@pytest.mark.parametrize("seed", range(10))
def test_family_membership(seed):
    assert is_tree(generate("tree", 10, seed).g)
    sp = generate("sp", 10, seed).g
    assert is_series_parallel(sp) and chromatic_number(sp) == 3
    bo = generate("bipartite-outerplanar", 10, seed).g
    assert is_bipartite(bo) and is_outerplanar(bo)
    assert is_ell_tree(generate("ktree", 10, seed, ell=3).g, 3)
    PathInstance.from_graphs(generate("path-union", 10, seed).g, generate("path-union", 10, seed).h)
    pp = generate("path-path", 10, seed)
    assert pp.h.num_edges == 9
    PathInstance.from_graphs(pp.g, pp.h)


def test_fixed_graphs():
    w = generate("wheel", 8)
    assert w.g == Graph.wheel(8) and w.h == complement(w.g) and w.g.num_edges == 14
    k = generate("complete-bipartite", 3, m=3)
    assert k.g == Graph.complete_bipartite(3, 3)


def test_unknown_kind():
    with pytest.raises(InputError):
        generate("petersen", 10)
