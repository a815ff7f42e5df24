from __future__ import annotations

import pytest

from graphdeck.canon import brute_force_certificate, canonical_form
from graphdeck.generate import CapExceeded, enumerate_class, labeled_graphs
from graphdeck.graph import GraphClass, complete_graph, cycle_graph, graph_from_edges
from oracles import prufer_trees

# OEIS A000088 (graphs), A000055 (trees), A001429 (connected unicyclic)
ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551, 13: 1301}
CONNECTED_UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89, 9: 240, 10: 657}


@pytest.fixture(scope="module")
def brute_classes():
    """Isomorphism classes of all labelled graphs on up to 6 vertices, by brute force."""
    out = {}
    for n in range(1, 7):
        reps = {}
        for g in labeled_graphs(n):
            reps.setdefault(brute_force_certificate(g), g)
        out[n] = list(reps.values())
    return out


def test_spec_examples():
    assert len(enumerate_class(4, GraphClass.ALL)) == 11
    assert len(enumerate_class(7, GraphClass.TREE)) == 11
    cu = enumerate_class(4, GraphClass.CONNECTED_UNICYCLIC)
    paw = graph_from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert {canonical_form(g) for g in cu} == {canonical_form(cycle_graph(4)), canonical_form(paw)}


@pytest.mark.parametrize("cls", list(GraphClass))
def test_every_class_matches_brute_force_up_to_six(cls, brute_classes):
    for n in range(1, 7):
        expected = {canonical_form(g) for g in brute_classes[n] if cls.contains(g)}
        got = enumerate_class(n, cls)
        assert len(got) == len(expected)
        assert {canonical_form(g) for g in got} == expected
        assert all(cls.contains(g) for g in got)


def test_trees_match_pruefer_enumeration():
    for n in range(1, 8):
        oracle = {brute_force_certificate(t) for t in prufer_trees(n)}
        assert len(enumerate_class(n, GraphClass.TREE)) == len(oracle)


def test_known_counts():
    for n, c in ALL_COUNTS.items():
        assert len(enumerate_class(n, GraphClass.ALL)) == c
    for n, c in TREE_COUNTS.items():
        assert len(enumerate_class(n, GraphClass.TREE)) == c
    for n, c in CONNECTED_UNICYCLIC_COUNTS.items():
        assert len(enumerate_class(n, GraphClass.CONNECTED_UNICYCLIC)) == c


def euler_transform(a: dict[int, int], top: int) -> list[int]:
    """Multisets of components: b(n) = (1/n) sum_k c(k) b(n-k), c(k) = sum_{d|k} d a(d)."""
    c = [0] + [sum(d * a.get(d, 0) for d in range(1, k + 1) if k % d == 0) for k in range(1, top + 1)]
    b = [1]
    for n in range(1, top + 1):
        b.append(sum(c[k] * b[n - k] for k in range(1, n + 1)) // n)
    return b


def test_forest_and_unicyclic_counts_from_components():
    forest = euler_transform(TREE_COUNTS, 13)
    for n in range(1, 14):
        assert len(enumerate_class(n, GraphClass.FOREST)) == forest[n]
    for n in range(3, 11):
        expected = sum(CONNECTED_UNICYCLIC_COUNTS[m] * forest[n - m] for m in range(3, n + 1))
        assert len(enumerate_class(n, GraphClass.UNICYCLIC)) == expected


def test_streams_are_sorted_and_duplicate_free():
    for cls in (GraphClass.ALL, GraphClass.UNICYCLIC, GraphClass.FOREST):
        forms = [canonical_form(g) for g in enumerate_class(6, cls)]
        assert forms == sorted(forms)
        assert len(set(forms)) == len(forms)


def test_caps():
    with pytest.raises(CapExceeded):
        enumerate_class(9, GraphClass.ALL)
    with pytest.raises(CapExceeded):
        enumerate_class(14, GraphClass.TREE)


def test_complete_graph_is_last_of_its_edge_count():
    assert any(canonical_form(g) == canonical_form(complete_graph(5)) for g in enumerate_class(5, GraphClass.ALL))
