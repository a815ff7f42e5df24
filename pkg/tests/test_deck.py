from __future__ import annotations

import io
import random
from collections import Counter

import networkx as nx
import pytest

from graphdeck.canon import canonical_form
from graphdeck.deck import (
    Deck,
    DeckError,
    Subdeck,
    cards_with_component,
    cards_with_component_order,
    common_card_breakdown,
    common_card_count,
    deck_contains,
    edge_count_from_deck,
    format_deck,
    full_deck,
    parse_deck,
    read_deck,
)
from graphdeck.families import family, sharp_component_example
from graphdeck.generate import all_graphs
from graphdeck.graph import (
    GraphError,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    is_connected,
    path_graph,
)
from oracles import common_cards_by_matching


def cf(g):
    return canonical_form(g)



def test_small_decks():
    assert full_deck(complete_graph(3)).cards == Counter({cf(complete_graph(2)): 3})
    assert full_deck(path_graph(3)).cards == Counter({cf(complete_graph(2)): 2, cf(empty_graph(2)): 1})


def test_cycle_with_isolated_vertices_repeats_one_card():
    deck = full_deck(disjoint_union(cycle_graph(6), empty_graph(5)))
    assert deck.cards[cf(disjoint_union(path_graph(5), empty_graph(5)))] == 6


def test_common_card_examples():
    assert common_card_count(path_graph(3), complete_graph(3)) == 2
    g = cycle_graph(7)
    assert common_card_count(g, g) == 7
    inst = family(1, 5)
    assert common_card_count(inst.forest, inst.unicyclic) == 6


def test_common_cards_against_matching_oracle():
    rng = random.Random(11)
    graphs = list(all_graphs(5))
    for _ in range(150):
        g, h = rng.choice(graphs), rng.choice(graphs)
        c = common_card_count(g, h)
        assert c == common_cards_by_matching(g, h)
        assert c == common_card_count(h, g)
        assert 0 <= c <= 5


def test_breakdown_sums_to_count():
    a, b = family(2, 3).forest, family(2, 3).unicyclic
    rows = common_card_breakdown(a, b)
    assert sum(min(x, y) for _, x, y in rows) == common_card_count(a, b) == 6


def test_deck_contains_examples():
    p3 = full_deck(path_graph(3))
    k2 = complete_graph(2)
    assert deck_contains(p3, Subdeck.from_cards(3, [k2, k2]))
    assert not deck_contains(p3, Subdeck.from_cards(3, [k2, k2, k2]))
    assert not deck_contains(full_deck(complete_graph(3)), Subdeck.from_cards(3, [empty_graph(2)]))


def test_edge_count_examples():
    assert edge_count_from_deck(full_deck(complete_graph(3))) == 3
    assert edge_count_from_deck(full_deck(cycle_graph(5))) == 5
    assert edge_count_from_deck(full_deck(path_graph(4))) == 3


def test_edge_count_rejects_partial_and_tiny_decks():
    with pytest.raises(DeckError):
        edge_count_from_deck(full_deck(path_graph(2)))
    with pytest.raises(DeckError):
        Deck(4, Subdeck.from_cards(4, [path_graph(3)]).cards)


def test_subdeck_invariants():
    with pytest.raises(DeckError):
        Subdeck.from_cards(4, [path_graph(2)])
    with pytest.raises(DeckError):
        Subdeck.from_cards(2, [empty_graph(1)] * 3)


def _component_count_oracle(g, h) -> int:
    gx = nx.Graph(g.edges())
    gx.add_nodes_from(range(g.n))
    hx = nx.Graph(h.edges())
    hx.add_nodes_from(range(h.n))
    count = 0
    for v in range(g.n):
        card = gx.copy()
        card.remove_node(v)
        if any(nx.is_isomorphic(card.subgraph(c), hx) for c in nx.connected_components(card)):
            count += 1
    return count


def test_cards_with_component_examples():
    pendant_c6 = graph_from_edges(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)])
    k1 = empty_graph(1)
    assert cards_with_component(pendant_c6, k1) == _component_count_oracle(pendant_c6, k1) == 1
    assert cards_with_component(sharp_component_example(k1, 8), k1) == 4
    assert cards_with_component(path_graph(5), complete_graph(2)) == 1


def test_cards_with_component_matches_networkx():
    rng = random.Random(2)
    connected = [g for g in all_graphs(7) if g.edge_count >= 6 and is_connected(g)]
    for g in rng.sample(connected, 60):
        for h in (empty_graph(1), complete_graph(2), path_graph(3), complete_graph(3)):
            assert cards_with_component(g, h) == _component_count_oracle(g, h)


def test_cards_with_component_preconditions():
    with pytest.raises(GraphError, match="G must be connected"):
        cards_with_component(empty_graph(5), empty_graph(1))
    with pytest.raises(GraphError, match="H must be connected"):
        cards_with_component(path_graph(5), empty_graph(2))
    with pytest.raises(GraphError, match="v\\(H\\) < v\\(G\\)/2"):
        cards_with_component(path_graph(4), complete_graph(2))
    with pytest.raises(GraphError):
        cards_with_component_order(path_graph(4), 2)


def test_component_order_count():
    # deleting vertex 1 or 3 of P5 leaves a singleton
    assert cards_with_component_order(path_graph(5), 1) == 2


def test_deck_file_round_trip():
    g = family(3, 4).unicyclic
    deck = full_deck(g)
    text = format_deck(deck)
    assert text.startswith(f"n={g.n}\n")
    assert len(text.strip().splitlines()) == g.n + 1
    back = parse_deck(text)
    assert isinstance(back, Deck) and back == deck
    assert read_deck(io.StringIO(text)) == deck
    assert format_deck(back) == text


def test_partial_deck_file():
    back = parse_deck("n=4\nBw\nBW\n")
    assert not isinstance(back, Deck)
    assert back.size == 2


@pytest.mark.parametrize("text", ["", "4\nBw\n", "n=x\nBw\n", "n=4\n", "n=4\nA_\n", "n=4\nBw!\n"])
def test_bad_deck_files(text):
    with pytest.raises(DeckError):
        parse_deck(text)
