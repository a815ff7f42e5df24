"""Exhaustive maximisation of common cards over pairs of graph classes.

Each graph's deck is computed once. An inverted index from card certificate
to (graph, multiplicity) lets a graph accumulate its intersection with every
partner that shares at least one card, so pairs with nothing in common are
never touched.
"""

from __future__ import annotations

import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .canon import canonical_form
from .deck import deck_counts
from .generate import class_cap, enumerate_class
from .graph import Graph, GraphClass, girth
from .graph6 import encode_graph6

WITNESS_LIMIT = 50


_DECKS: dict[Graph, Counter] = {}


def cached_deck(g: Graph) -> Counter:
    d = _DECKS.get(g)
    if d is None:
        d = _DECKS[g] = deck_counts(g)
    return d


def precompute_decks(graphs: Sequence[Graph], workers: int = 1) -> None:
    """Fill the deck cache, optionally across worker processes.

    Results are keyed by graph, so the merge does not depend on scheduling.
    """
    todo = [g for g in graphs if g not in _DECKS]
    if workers <= 1 or len(todo) < 256:
        for g in todo:
            cached_deck(g)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for g, d in zip(todo, pool.map(deck_counts, todo, chunksize=64)):
            _DECKS[g] = d


@dataclass
class ExtremalRecord:
    n: int
    label_a: str
    label_b: str
    max_common: int | None
    witnesses: list[tuple[Graph, Graph]] = field(default_factory=list)
    witness_total: int = 0
    pairs_examined: int = 0
    pairs_total: int = 0
    elapsed: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "classes": [self.label_a, self.label_b],
            "max": self.max_common,
            "witnesses": [[encode_graph6(a), encode_graph6(b)] for a, b in self.witnesses],
            "witness_count": self.witness_total,
            "pairs_examined": self.pairs_examined,
            "pairs_total": self.pairs_total,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000, 1)
        return out


def _index(graphs: Sequence[Graph]) -> dict:
    idx: dict = defaultdict(list)
    for j, g in enumerate(graphs):
        for cf, m in cached_deck(g).items():
            idx[cf].append((j, m))
    return idx


def _best_pairs(
    left: Sequence[Graph],
    right: Sequence[Graph],
    admissible: Callable[[int, int], bool] | None = None,
) -> tuple[int | None, list[tuple[int, int]], int, int]:
    """Maximum intersection over admissible (i, j) pairs (all pairs when
    ``admissible`` is None), every maximising pair, the number of pairs that
    share a card, and the number of admissible pairs."""
    idx = _index(right)
    best: int | None = None
    winners: list[tuple[int, int]] = []
    touched = 0
    total = 0
    has_zero: list[int] = []
    for i, g in enumerate(left):
        acc: dict[int, int] = defaultdict(int)
        for cf, m in cached_deck(g).items():
            for j, mb in idx.get(cf, ()):
                acc[j] += m if m < mb else mb
        if admissible is None:
            n_adm = len(right)
            hits = acc.items()
        else:
            n_adm = sum(1 for j in range(len(right)) if admissible(i, j))
            hits = [(j, c) for j, c in acc.items() if admissible(i, j)]
        total += n_adm
        n_hits = 0
        for j, c in hits:
            n_hits += 1
            if best is None or c > best:
                best, winners = c, [(i, j)]
            elif c == best:
                winners.append((i, j))
        touched += n_hits
        if n_hits < n_adm:
            has_zero.append(i)
            if best is None:
                best, winners = 0, []
    if best == 0:
        # zero-intersection pairs are only materialised when they are the maximum
        winners = [(i, j) for i in has_zero for j in range(len(right))
                   if (admissible is None or admissible(i, j)) and (i, j) not in set(winners)]
    return best, winners, touched, total


def _record(n, label_a, label_b, left, right, best, winners, touched, total, t0) -> ExtremalRecord:
    pairs = sorted(
        ((left[i], right[j]) for i, j in winners),
        key=lambda p: (canonical_form(p[0]), canonical_form(p[1])),
    )
    return ExtremalRecord(
        n=n,
        label_a=label_a,
        label_b=label_b,
        max_common=best,
        witnesses=pairs[:WITNESS_LIMIT],
        witness_total=len(pairs),
        pairs_examined=touched,
        pairs_total=total,
        elapsed=time.perf_counter() - t0,
    )


def max_common_cards(n: int, class_a: GraphClass, class_b: GraphClass, workers: int = 1) -> ExtremalRecord:
    """Exact maximum number of common cards between a graph in ``class_a``
    and a graph in ``class_b``, both on n vertices."""
    t0 = time.perf_counter()
    class_a, class_b = GraphClass(class_a), GraphClass(class_b)
    left = enumerate_class(n, class_a)
    right = enumerate_class(n, class_b)
    precompute_decks(left + right, workers)
    best, winners, touched, total = _best_pairs(left, right)
    return _record(n, class_a.value, class_b.value, left, right, best, winners, touched, total, t0)


def max_common_by_key(n: int, key: Callable[[Graph], Hashable], label: str,
                      population: GraphClass = GraphClass.ALL, workers: int = 1) -> ExtremalRecord:
    """Maximum common cards over unordered pairs whose ``key`` values differ."""
    t0 = time.perf_counter()
    graphs = enumerate_class(n, population)
    precompute_decks(graphs, workers)
    keys = [key(g) for g in graphs]
    best, winners, touched, total = _best_pairs(
        graphs, graphs, lambda i, j: i < j and keys[i] != keys[j]
    )
    return _record(n, label, label, graphs, graphs, best, winners, touched, total, t0)


# --------------------------------------------------------------------------
# bounds


def _girth_key(g: Graph) -> float:
    return girth(g)


@dataclass(frozen=True)
class BoundSpec:
    """A claimed ceiling on common cards between two kinds of graph.

    ``kind`` is "theorem" (asserted at every n), "asymptotic" (proved only for
    large n, reported) or "conjecture" (reported).
    """

    name: str
    bound: Callable[[int], int]
    kind: str
    source: str
    class_a: GraphClass | None = None
    class_b: GraphClass | None = None
    key: Callable[[Graph], Hashable] | None = None
    key_label: str = ""

    def cap(self) -> int:
        if self.key is not None:
            return class_cap(GraphClass.ALL)
        return min(class_cap(self.class_a), class_cap(self.class_b))

    def describe(self) -> list[str]:
        if self.key is not None:
            return [self.key_label, self.key_label]
        return [self.class_a.value, self.class_b.value]

    def search(self, n: int, workers: int = 1) -> ExtremalRecord:
        if self.key is not None:
            return max_common_by_key(n, self.key, self.key_label, workers=workers)
        return max_common_cards(n, self.class_a, self.class_b, workers=workers)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


BOUNDS: dict[str, BoundSpec] = {
    b.name: b
    for b in [
        BoundSpec("multicyclic-vs-forest", lambda n: 2, "theorem",
                  "two or more cycles vs forest: at most 2",
                  GraphClass.MULTICYCLIC, GraphClass.FOREST),
        BoundSpec("forest-vs-nonforest-2n3", lambda n: 2 * n // 3, "theorem",
                  "forest vs non-forest: at most floor(2n/3)",
                  GraphClass.FOREST, GraphClass.NONFOREST),
        BoundSpec("girth", lambda n: _ceil_div(2 * n, 3), "theorem",
                  "different girth: at most ceil(2n/3)",
                  key=_girth_key, key_label="girth-differs"),
        BoundSpec("bipartite", lambda n: 5 * n // 6 + 1, "theorem",
                  "bipartite vs non-bipartite: at most floor(5n/6)+1",
                  GraphClass.BIPARTITE, GraphClass.NONBIPARTITE),
        BoundSpec("tree-vs-nontree", lambda n: n // 2 + 1, "asymptotic",
                  "tree vs non-tree: at most floor(n/2)+1 for n >= 5000",
                  GraphClass.TREE, GraphClass.NONTREE),
        BoundSpec("forest-vs-nonforest", lambda n: n // 2 + 1, "asymptotic",
                  "forest vs non-forest: at most floor(n/2)+1 for n >= 5000",
                  GraphClass.FOREST, GraphClass.NONFOREST),
        BoundSpec("girth-half", lambda n: n // 2 + 1, "conjecture",
                  "different girth: at most floor(n/2)+1 for large n",
                  key=_girth_key, key_label="girth-differs"),
        BoundSpec("bipartite-half", lambda n: n // 2 + 1, "conjecture",
                  "bipartite vs non-bipartite: at most floor(n/2)+1 for large n",
                  GraphClass.BIPARTITE, GraphClass.NONBIPARTITE),
    ]
}

# citation-style names accepted on the command line
BOUND_ALIASES = {
    "lemma3.1": "multicyclic-vs-forest",
    "lemma5.2": "forest-vs-nonforest-2n3",
    "theorem1.6": "girth",
    "theorem1.7": "bipartite",
    "theorem1.4": "tree-vs-nontree",
    "theorem1.5": "forest-vs-nonforest",
    "conjecture6.1": "girth-half",
    "conjecture6.2": "bipartite-half",
}


def resolve_bound(name: str) -> BoundSpec:
    try:
        return BOUNDS[BOUND_ALIASES.get(name, name)]
    except KeyError:
        raise ValueError(f"unknown bound {name!r}; known: {', '.join(BOUNDS)}") from None


@dataclass
class BoundRow:
    spec: BoundSpec
    record: ExtremalRecord
    bound_value: int

    @property
    def holds(self) -> bool:
        return self.record.max_common is None or self.record.max_common <= self.bound_value

    @property
    def tight(self) -> bool:
        return self.record.max_common == self.bound_value

    @property
    def asserted(self) -> bool:
        return self.spec.kind == "theorem"

    def to_json(self, timing: bool = False) -> dict:
        rec = self.record.to_json(timing)
        out = {
            "bound_name": self.spec.name,
            "kind": self.spec.kind,
            "n": rec.pop("n"),
            "classes": self.spec.describe(),
            "bound": self.bound_value,
        }
        rec.pop("classes")
        out["max"] = rec.pop("max")
        out["pass"] = self.holds
        out["tight"] = self.tight
        out.update(rec)
        return out


def verify_bound(spec: BoundSpec | str, n_range: range, workers: int = 1) -> list[BoundRow]:
    if isinstance(spec, str):
        spec = resolve_bound(spec)
    rows = []
    for n in n_range:
        if n > spec.cap():
            raise ValueError(f"bound {spec.name} can be checked only up to n={spec.cap()}")
        rows.append(BoundRow(spec, spec.search(n, workers), spec.bound(n)))
    return rows

