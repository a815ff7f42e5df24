"""Decks, subdecks, and common-card counting."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .canon import CanonicalForm, canonical_form
from .graph import Graph, GraphError, components, delete_vertex, induced_subgraph, is_connected
from .graph6 import Graph6Error, decode_graph6, encode_graph6


class DeckError(ValueError):
    pass


@dataclass(eq=False)
class Subdeck:
    """Multiset of unlabelled cards from a graph of known order ``n``.

    ``reps`` keeps one labelled card per class; it is only used to print the
    deck and to count edges, and takes no part in comparisons.
    """

    n: int
    cards: Counter = field(default_factory=Counter)
    reps: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        for cf in self.cards:
            if cf.n != self.n - 1:
                raise DeckError(f"card of order {cf.n} in a deck for n={self.n}")
        if self.size > self.n:
            raise DeckError(f"{self.size} cards exceed parent order {self.n}")

    @property
    def size(self) -> int:
        return sum(self.cards.values())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subdeck) and self.n == other.n and self.cards == other.cards

    def __len__(self) -> int:
        return self.size

    def expanded(self) -> list[CanonicalForm]:
        """Cards as a sorted list with repetitions."""
        return [cf for cf in sorted(self.cards) for _ in range(self.cards[cf])]

    def smallest_card(self) -> CanonicalForm:
        return min(self.cards)

    @classmethod
    def from_cards(cls, n: int, cards: Iterable[Graph]) -> Subdeck:
        counts: Counter = Counter()
        reps: dict = {}
        for c in cards:
            cf = canonical_form(c)
            counts[cf] += 1
            reps.setdefault(cf, c)
        return cls(n, counts, reps)


class Deck(Subdeck):
    def __post_init__(self) -> None:
        super().__post_init__()
        if self.size != self.n:
            raise DeckError(f"a full deck has {self.n} cards, got {self.size}")


def full_deck(g: Graph) -> Deck:
    if g.n < 1:
        raise GraphError("the deck needs at least one vertex")
    counts: Counter = Counter()
    reps: dict = {}
    for v in range(g.n):
        card = delete_vertex(g, v)
        cf = canonical_form(card)
        counts[cf] += 1
        reps.setdefault(cf, card)
    return Deck(g.n, counts, reps)


def deck_counts(g: Graph) -> Counter:
    """Card multiplicities only; the hot path of exhaustive searches."""
    return Counter(canonical_form(delete_vertex(g, v)) for v in range(g.n))


def common_cards(a: Subdeck, b: Subdeck) -> int:
    if a.n != b.n:
        raise DeckError(f"order mismatch: {a.n} vs {b.n}")
    small, big = (a.cards, b.cards) if len(a.cards) <= len(b.cards) else (b.cards, a.cards)
    return sum(min(m, big[cf]) for cf, m in small.items() if cf in big)


def common_card_count(g: Graph, h: Graph) -> int:
    """Largest number of cards the decks of ``g`` and ``h`` share."""
    if g.n != h.n:
        raise DeckError(f"order mismatch: {g.n} vs {h.n}")
    return common_cards(full_deck(g), full_deck(h))


def common_card_breakdown(g: Graph, h: Graph) -> list[tuple[Graph, int, int]]:
    """Per shared card class: a representative and its multiplicity in each deck."""
    da, db = full_deck(g), full_deck(h)
    if da.n != db.n:
        raise DeckError(f"order mismatch: {da.n} vs {db.n}")
    return [(da.reps[cf], da.cards[cf], db.cards[cf]) for cf in sorted(da.cards) if cf in db.cards]


def deck_contains(full: Subdeck, sub: Subdeck) -> bool:
    if full.n != sub.n:
        raise DeckError(f"card order mismatch: decks for n={full.n} and n={sub.n}")
    return all(full.cards.get(cf, 0) >= m for cf, m in sub.cards.items())


def edge_count_from_deck(deck: Deck) -> int:
    """e(G) = (sum of card edge counts) / (n - 2): each edge misses exactly two cards."""
    n = deck.n
    if n < 3:
        raise DeckError("edge count from the deck needs n >= 3")
    if deck.size != n:
        raise DeckError("edge count needs the complete deck")
    total = sum(deck.reps[cf].edge_count * m for cf, m in deck.cards.items())
    e, rem = divmod(total, n - 2)
    if rem:
        raise DeckError(f"inconsistent deck: card edge total {total} not divisible by {n - 2}")
    return e


def cards_with_component(g: Graph, h: Graph) -> int:
    """Number of vertices v such that G - v has a connected component isomorphic to H."""
    if not is_connected(g) or g.n == 0:
        raise GraphError("G must be connected")
    if not is_connected(h) or h.n == 0:
        raise GraphError("H must be connected")
    if not 2 * h.n < g.n:
        raise GraphError(f"need v(H) < v(G)/2, got v(H)={h.n}, v(G)={g.n}")
    target = canonical_form(h)
    count = 0
    for v in range(g.n):
        card = delete_vertex(g, v)
        for comp in components(card):
            if len(comp) == h.n and canonical_form(induced_subgraph(card, comp)) == target:
                count += 1
                break
    return count


def cards_with_component_order(g: Graph, k: int) -> int:
    """Number of vertices v such that G - v has a component on exactly k vertices."""
    if not is_connected(g) or g.n == 0:
        raise GraphError("G must be connected")
    if not 1 <= k < g.n / 2:
        raise GraphError(f"need 1 <= k < v(G)/2, got k={k}, v(G)={g.n}")
    count = 0
    for v in range(g.n):
        if any(len(c) == k for c in components(delete_vertex(g, v))):
            count += 1
    return count


# --------------------------------------------------------------------------
# deck files: "n=<order>" then one graph6 card per line, repeated for multiplicity


def format_deck(deck: Subdeck) -> str:
    lines = [f"n={deck.n}"]
    for cf in sorted(deck.cards):
        line = encode_graph6(deck.reps[cf])
        lines.extend([line] * deck.cards[cf])
    return "\n".join(lines) + "\n"


def parse_deck(text: str) -> Subdeck:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("n="):
        raise DeckError("deck file must start with a line 'n=<order>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise DeckError(f"bad order line {lines[0]!r}") from None
    cards = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            card = decode_graph6(line)
        except Graph6Error as exc:
            raise DeckError(f"line {lineno}: {exc}") from exc
        if card.n != n - 1:
            raise DeckError(f"line {lineno}: card has {card.n} vertices, expected {n - 1}")
        cards.append(card)
    if not cards:
        raise DeckError("deck file has no cards")
    sub = Subdeck.from_cards(n, cards)
    if sub.size == n:
        return Deck(sub.n, sub.cards, sub.reps)
    return sub


def read_deck(fh: TextIO) -> Subdeck:
    return parse_deck(fh.read())
