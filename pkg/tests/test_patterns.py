from itertools import combinations, permutations, product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recolor.constructions import build_gtk, build_mk, k3c5_witnesses
from recolor.errors import EmptyGraph, InvalidK, InvalidSize
from recolor.graph import Graph, complete_graph, cycle_graph, empty_graph, labeled_graph_from_mask, path_graph
from recolor.patterns import (
    chromatic_number,
    clique_number,
    complete_pattern,
    contains_induced,
    cycle_pattern,
    find_induced,
    find_induced_path,
    gem_pattern,
    greedy_coloring,
    is_k_colorable,
    is_pl_free,
    max_clique,
    optimal_coloring,
    p5_complement_pattern,
    path_pattern,
)

from strategies import graphs


def brute_contains(g, p):
    for image in permutations(range(g.n), p.n):
        if all(g.adj(image[a], image[b]) == p.adj(a, b) for a, b in combinations(range(p.n), 2)):
            return True
    return False


def valid_embedding(g, p, m):
    if sorted(m) != list(range(p.n)) or len(set(m.values())) != p.n:
        return False
    return all(g.adj(m[a], m[b]) == p.adj(a, b) for a, b in combinations(range(p.n), 2))


def brute_chi(g):
    for k in range(g.n + 1):
        for assign in product(range(k), repeat=g.n):
            if all(assign[u] != assign[v] for u, v in g.edges()):
                return k
    raise AssertionError


# -- named patterns ------------------------------------------------------------------------

def test_gem():
    gem = gem_pattern()
    assert (gem.n, gem.edge_count()) == (5, 7)
    assert sorted(gem.degrees()).count(4) == 1
    hub = gem.degrees().index(4)
    rest = [v for v in range(5) if v != hub]
    assert find_induced_path(gem.induced(rest), 4) is not None


def test_small_patterns():
    assert path_pattern(1) == complete_graph(1)
    assert p5_complement_pattern().edge_count() == 6
    assert complete_pattern(4) == complete_graph(4)
    assert cycle_pattern(5) == cycle_graph(5)


@pytest.mark.parametrize("ctor,arg", [(path_pattern, 0), (cycle_pattern, 2), (complete_pattern, 0)])
def test_pattern_sizes(ctor, arg):
    with pytest.raises(InvalidSize):
        ctor(arg)


# -- induced search ---------------------------------------------------------------------------

def test_path_examples():
    assert find_induced(path_graph(5), path_pattern(5)) == {i: i for i in range(5)}
    assert find_induced(cycle_graph(5), path_pattern(5)) is None
    assert find_induced(cycle_graph(6), path_pattern(5)) is not None
    assert find_induced(cycle_graph(6), path_pattern(6)) is None
    assert not is_pl_free(path_graph(5), 5)


PATTERNS = {
    "p4": path_pattern(4),
    "p5": path_pattern(5),
    "c5": cycle_pattern(5),
    "gem": gem_pattern(),
}


@pytest.mark.parametrize("name", sorted(PATTERNS))
@pytest.mark.parametrize("n", range(1, 6))
def test_find_induced_exhaustive(name, n):
    p = PATTERNS[name]
    for mask in range(1 << (n * (n - 1) // 2)):
        g = labeled_graph_from_mask(n, mask)
        m = find_induced(g, p)
        assert (m is not None) == brute_contains(g, p)
        if m is not None:
            assert valid_embedding(g, p, m)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=6, max_n=6), st.sampled_from(sorted(PATTERNS)))
def test_find_induced_order_six(g, name):
    p = PATTERNS[name]
    m = find_induced(g, p)
    assert (m is not None) == brute_contains(g, p)
    if m is not None:
        assert valid_embedding(g, p, m)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.integers(1, 7))
def test_pl_free_upward_closed(g, length):
    if is_pl_free(g, length):
        for longer in range(length, 9):
            assert is_pl_free(g, longer)
    path = find_induced_path(g, length)
    if path is not None:
        assert valid_embedding(g, path_graph(length), dict(enumerate(path)))


def test_generic_search_agrees_with_path_dfs():
    # a path pattern with permuted labels goes through the generic search
    p = Graph(5, path_graph(5).rows).induced([2, 0, 4, 1, 3])
    assert p != path_graph(5)
    for n in (5, 6):
        for mask in range(0, 1 << (n * (n - 1) // 2), 37):
            g = labeled_graph_from_mask(n, mask)
            assert (find_induced(g, p) is None) == is_pl_free(g, 5)


@pytest.mark.parametrize("k", [3, 4, 5])
def test_mk_is_p6_free(k):
    g, _ = build_mk(k)
    assert is_pl_free(g, 6)


def test_gtk45_is_p5_free():
    g, _ = build_gtk(4, 5)
    assert is_pl_free(g, 5)


# -- cliques and coloring -----------------------------------------------------------------

def test_clique_examples():
    assert clique_number(complete_graph(4)) == 4
    assert clique_number(cycle_graph(5)) == 2
    g, _ = build_gtk(4, 5)
    assert clique_number(g) == 4
    assert max_clique(g) == [0, 2, 4, 6]
    with pytest.raises(EmptyGraph):
        clique_number(empty_graph(0))


def test_chromatic_examples():
    assert chromatic_number(cycle_graph(5)) == 3
    for t, k in [(4, 5), (4, 6), (5, 6)]:
        assert chromatic_number(build_gtk(t, k)[0]) == t
    for w in k3c5_witnesses():
        assert chromatic_number(w) >= 4
    with pytest.raises(EmptyGraph):
        chromatic_number(empty_graph(0))


def test_colorable_edge_cases():
    assert is_k_colorable(empty_graph(0), 0).assign == ()
    assert is_k_colorable(complete_graph(1), 0) is None
    assert is_k_colorable(complete_graph(3), 2) is None
    with pytest.raises(InvalidK):
        is_k_colorable(complete_graph(1), -1)


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_coloring_against_brute_force(g):
    chi = chromatic_number(g)
    assert chi == brute_chi(g)
    omega = clique_number(g)
    assert omega <= chi
    clique = max_clique(g)
    assert all(g.adj(u, v) for u, v in combinations(clique, 2))
    witness = optimal_coloring(g)
    assert witness.is_proper_for(g) and witness.k == chi
    assert max(greedy_coloring(g)) >= chi
    assert is_k_colorable(g, chi - 1) is None


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=9), st.integers(0, 5))
def test_colorability_monotone(g, k):
    w = is_k_colorable(g, k)
    if w is not None:
        assert w.is_proper_for(g) and w.k == k
        assert is_k_colorable(g, k + 1) is not None


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=11))
def test_clique_matches_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    best = max(len(c) for c in nx.find_cliques(ref))
    assert clique_number(g) == best


def test_contains_induced_k3c5():
    adj, nonadj = k3c5_witnesses()
    assert contains_induced(adj, complete_pattern(4))
    assert not contains_induced(nonadj, complete_pattern(4))
