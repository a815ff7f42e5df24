"""Deciding graph properties from a partial deck.

Sound direct rules run first. When none fires, the preimage oracle lists
every order-n graph whose deck contains the subdeck and the property is
evaluated on all of them: agreement gives a decision, disagreement gives an
``ambiguous`` verdict carrying the disagreeing preimages.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import CanonicalForm, automorphism_generators, canonical_form
from .deck import Subdeck, deck_contains, full_deck
from .graph import (
    INFINITY,
    Graph,
    add_vertex,
    girth,
    is_bipartite,
    is_connected,
    is_forest,
    is_tree,
    longest_path_order,
)
from .graph6 import encode_graph6

DEFAULT_ORACLE_CAP = 11
WITNESS_LIMIT = 50

PROPERTIES = {
    "tree": is_tree,
    "forest": is_forest,
    "connected": is_connected,
    "bipartite": is_bipartite,
    "girth": girth,
}


class RecognitionError(ValueError):
    pass


class UndecidableAtScale(RecognitionError):
    pass


def girth_threshold(n: int) -> int:
    """Smallest integer subdeck size meeting the 2n/3 + 1 hypothesis."""
    return -(-2 * n // 3) + 1


def bipartite_threshold(n: int) -> int:
    return -(-5 * n // 6) + 2


def tree_threshold(n: int) -> int:
    return n // 2 + 2


@dataclass
class Verdict:
    property: str
    decision: str  # holds | fails | value | ambiguous
    method: str  # direct-rule | preimage-oracle
    n: int
    subdeck_size: int
    value: int | float | None = None
    rule: str | None = None
    witnesses: list[Graph] = field(default_factory=list)
    witness_count: int | None = None

    def to_json(self) -> dict:
        out = {
            "property": self.property,
            "decision": self.decision,
            "method": self.method,
            "n": self.n,
            "subdeck_size": self.subdeck_size,
            "witness_count": self.witness_count,
            "witnesses": [encode_graph6(g) for g in self.witnesses[:WITNESS_LIMIT]],
        }
        if self.property == "girth" and self.decision == "value":
            out["value"] = "infinity" if self.value == INFINITY else self.value
        if self.rule:
            out["rule"] = self.rule
        return out


def _subset_orbit_representatives(card: Graph) -> list[int]:
    """One neighbourhood bitmask per orbit of Aut(card) acting on vertex subsets."""
    size = 1 << card.n
    gens = automorphism_generators(card)
    if not gens:
        return list(range(size))
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in gens:
        for s in range(size):
            img = 0
            t = s
            while t:
                low = t & -t
                img |= 1 << gen[low.bit_length() - 1]
                t ^= low
            a, b = find(s), find(img)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [s for s in range(size) if find(s) == s]


def preimage_search(sub: Subdeck, n: int | None = None, cap: int = DEFAULT_ORACLE_CAP) -> dict[CanonicalForm, Graph]:
    """All order-n graphs, up to isomorphism, whose full deck contains ``sub``.

    Every preimage G has some vertex v with G - v isomorphic to the smallest
    card C of the subdeck, so G is C plus one vertex joined to some subset of
    V(C); subsets in the same Aut(C)-orbit give isomorphic graphs.
    """
    n = sub.n if n is None else n
    if n != sub.n:
        raise RecognitionError(f"subdeck is for n={sub.n}, asked about n={n}")
    if sub.size == 0:
        raise RecognitionError("empty subdeck")
    if n > cap:
        raise UndecidableAtScale(f"preimage search capped at n={cap}, got n={n}")
    card_cf = sub.smallest_card()
    card = sub.reps.get(card_cf)
    if card is None:
        raise RecognitionError("subdeck has no labelled representative for its cards")
    found: dict[CanonicalForm, Graph] = {}
    for nbhd in _subset_orbit_representatives(card):
        g = add_vertex(card, nbhd)
        cf = canonical_form(g)
        if cf not in found:
            found[cf] = g
    out = {}
    for cf in sorted(found):
        g = found[cf]
        if deck_contains(full_deck(g), sub):
            out[cf] = g
    return out


def girth_direct(sub: Subdeck, n: int | None = None, cycle_certified: bool = False) -> tuple[int, bool]:
    """Hidden-cycle candidate 1 + min longest-path order over forest cards.

    Returns (candidate, valid); ``valid`` only when the caller certifies that
    the parent graph has a cycle.
    """
    n = sub.n if n is None else n
    if sub.size < girth_threshold(n):
        raise RecognitionError(f"need at least {girth_threshold(n)} cards, got {sub.size}")
    cards = [sub.reps[cf] for cf in sub.cards]
    if not all(is_forest(c) for c in cards):
        raise RecognitionError("hidden-cycle rule applies only when every card is a forest")
    return hidden_cycle_candidate(cards), cycle_certified


def hidden_cycle_candidate(cards: list[Graph]) -> int:
    """1 + the smallest longest-path order (in vertices) among the cards."""
    return 1 + min(longest_path_order(c) for c in cards)


def _direct_rule(sub: Subdeck, n: int, prop: str) -> Verdict | None:
    cards = [sub.reps[cf] for cf in sub.cards]
    size = sub.size
    if prop in ("tree", "forest") and any(not is_forest(c) for c in cards):
        return Verdict(prop, "fails", "direct-rule", n, size, rule="card-with-cycle")
    if prop == "bipartite" and any(not is_bipartite(c) for c in cards):
        return Verdict(prop, "fails", "direct-rule", n, size, rule="card-with-odd-cycle")
    if prop == "girth":
        # A cycle on L vertices misses at most L of the cards, so with more
        # than L cards some card shows it; a card cycle of length <= size-1
        # therefore bounds the girth and is itself the shortest cycle.
        g = min(girth(c) for c in cards)
        if g != INFINITY and g <= size - 1:
            return Verdict(prop, "value", "direct-rule", n, size, value=g, rule="visible-short-cycle")
    return None


def recognize(sub: Subdeck, n: int | None, prop: str, oracle_cap: int = DEFAULT_ORACLE_CAP) -> Verdict:
    n = sub.n if n is None else n
    if prop not in PROPERTIES:
        raise RecognitionError(f"unsupported property {prop!r}; choose from {', '.join(PROPERTIES)}")
    if n != sub.n:
        raise RecognitionError(f"subdeck is for n={sub.n}, asked about n={n}")
    verdict = _direct_rule(sub, n, prop)
    if verdict is not None:
        return verdict
    if n > oracle_cap:
        raise UndecidableAtScale(f"no direct rule fired and n={n} exceeds the oracle cap {oracle_cap}")
    pre = list(preimage_search(sub, n, oracle_cap).values())
    if not pre:
        raise RecognitionError("no graph has a deck containing these cards")
    evaluate = PROPERTIES[prop]
    values = [evaluate(g) for g in pre]
    size = sub.size
    if len(set(values)) > 1:
        return Verdict(prop, "ambiguous", "preimage-oracle", n, size, witnesses=pre, witness_count=len(pre))
    val = values[0]
    if prop == "girth":
        rule = None
        method = "preimage-oracle"
        cards = [sub.reps[cf] for cf in sub.cards]
        if val != INFINITY and size >= girth_threshold(n) and all(is_forest(c) for c in cards):
            candidate, _ = girth_direct(sub, n, cycle_certified=True)
            if candidate == val:
                method, rule = "direct-rule", "hidden-cycle (cycle certified by preimage oracle)"
            else:
                rule = f"hidden-cycle candidate {candidate} contradicted by preimages"
        return Verdict(prop, "value", method, n, size, value=val, rule=rule, witnesses=pre, witness_count=len(pre))
    return Verdict(prop, "holds" if val else "fails", "preimage-oracle", n, size,
                   witnesses=pre, witness_count=len(pre))
