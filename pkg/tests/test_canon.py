from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from graphdeck.canon import (
    CanonicalForm,
    are_isomorphic,
    automorphism_generators,
    automorphism_orbits,
    brute_force_certificate,
    canonical_form,
    canonical_relabel,
    is_vertex_transitive,
    refined_certificate,
)
from graphdeck.generate import all_graphs
from graphdeck.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    path_graph,
    relabel,
)
from oracles import labeled_graphs, min_adjacency_string, permutation_isomorphic


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def shuffled(rng: random.Random, g):
    order = list(range(g.n))
    rng.shuffle(order)
    return relabel(g, order)


def test_relabelled_path_has_same_form():
    p3 = graph_from_edges(3, [(0, 1), (1, 2)])
    assert canonical_form(p3) == canonical_form(graph_from_edges(3, [(2, 0), (0, 1)]))
    assert canonical_form(p3) != canonical_form(complete_graph(3))


def test_four_vertex_classes_match_brute_force_grouping():
    groups: dict = {}
    for g in labeled_graphs(4):
        groups.setdefault(min_adjacency_string(g), []).append(canonical_form(g))
    assert len(groups) == 11
    reps = set()
    for forms in groups.values():
        assert len(set(forms)) == 1
        reps.add(forms[0])
    assert len(reps) == 11


def test_isomorphism_examples():
    p4 = path_graph(4)
    assert are_isomorphic(p4, relabel(p4, [2, 0, 3, 1]))
    assert not are_isomorphic(cycle_graph(4), p4)
    k3k1 = disjoint_union(complete_graph(3), empty_graph(1))
    paw_minus = [graph_from_edges(4, e) for e in ([(0, 1), (1, 2), (2, 0)], [(0, 1), (1, 2), (2, 3)],
                                                   [(0, 1), (0, 2), (0, 3)])]
    for h in paw_minus:
        assert are_isomorphic(k3k1, h) == permutation_isomorphic(k3k1, h)


@pytest.mark.parametrize("n", range(0, 9))
def test_relabelling_invariance(n):
    rng = random.Random(1000 + n)
    for _ in range(1000):
        g = random_graph(rng, n, rng.random())
        assert canonical_form(g) == canonical_form(shuffled(rng, g))


def test_are_isomorphic_against_permutation_oracle_up_to_six():
    for n in range(1, 7):
        graphs = list(all_graphs(n))
        for g in graphs:
            assert are_isomorphic(g, shuffled(random.Random(n), g))
        for g, h in itertools.combinations(graphs, 2):
            assert are_isomorphic(g, h) is False
            if g.edge_count == h.edge_count and sorted(g.degrees()) == sorted(h.degrees()):
                assert not permutation_isomorphic(g, h)


def test_against_networkx_on_random_pairs():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(5, 9)
        g = random_graph(rng, n)
        h = shuffled(rng, g) if rng.random() < 0.5 else random_graph(rng, n)
        gx = nx.Graph(g.edges())
        gx.add_nodes_from(range(n))
        hx = nx.Graph(h.edges())
        hx.add_nodes_from(range(n))
        assert are_isomorphic(g, h) == nx.is_isomorphic(gx, hx)


def test_refined_and_brute_force_agree_as_partitions_on_six():
    refined: dict = {}
    brute: dict = {}
    for g in labeled_graphs(6):
        r, b = refined_certificate(g), brute_force_certificate(g)
        assert refined.setdefault(r, b) == b
        assert brute.setdefault(b, r) == r
    assert len(refined) == 156


def test_canonical_relabel_is_idempotent_representative():
    rng = random.Random(3)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9))
        assert canonical_relabel(g) == canonical_relabel(shuffled(rng, g))


def test_strongly_regular_and_regular_graphs():
    # Petersen graph vs its relabelling, and two non-isomorphic 3-regular graphs on 8 vertices
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    pet = graph_from_edges(10, outer + inner + spokes)
    assert canonical_form(pet) == canonical_form(shuffled(random.Random(0), pet))
    assert is_vertex_transitive(pet)
    cube = graph_from_edges(8, [(i, j) for i in range(8) for j in range(i + 1, 8) if bin(i ^ j).count("1") == 1])
    mobius = graph_from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not are_isomorphic(cube, mobius)


def test_automorphism_orbits_match_brute_force():
    for n in range(1, 7):
        for g in all_graphs(n):
            gx = nx.Graph(g.edges())
            gx.add_nodes_from(range(n))
            orbit_of = {v: {v} for v in range(n)}
            for m in nx.algorithms.isomorphism.GraphMatcher(gx, gx).isomorphisms_iter():
                for v, w in m.items():
                    orbit_of[v].add(w)
            expected = sorted(sorted(o) for o in {frozenset(o) for o in orbit_of.values()})
            assert automorphism_orbits(g) == expected


def test_generators_are_automorphisms():
    rng = random.Random(5)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 10))
        edges = set(g.edges())
        for gen in automorphism_generators(g):
            assert {tuple(sorted((gen[u], gen[v]))) for u, v in edges} == edges


def test_forms_are_ordered_and_sized():
    a, b = canonical_form(path_graph(3)), canonical_form(complete_graph(3))
    assert isinstance(a, CanonicalForm) and a.n == 3
    assert (a < b) != (b < a)


def test_order_cap():
    with pytest.raises(GraphError):
        canonical_form(empty_graph(257))
