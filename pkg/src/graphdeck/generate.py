"""Exhaustive generation of non-isomorphic graphs, one representative per class.

General graphs grow one vertex at a time over every neighbourhood of the new
vertex; trees grow one leaf at a time; connected unicyclic graphs are trees
plus one edge; forests and unicyclic graphs are assembled from components.
Children are deduplicated by certificate and streams are sorted by it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import CanonicalForm, canonical_form
from .graph import Graph, GraphClass, add_vertex, disjoint_union, empty_graph, iter_bits

ALL_GRAPHS_CAP = 8
SPARSE_CAP = 13

SPARSE_CLASSES = {
    GraphClass.TREE,
    GraphClass.FOREST,
    GraphClass.UNICYCLIC,
    GraphClass.CONNECTED_UNICYCLIC,
}


class CapExceeded(ValueError):
    pass


def class_cap(cls: GraphClass) -> int:
    return SPARSE_CAP if cls in SPARSE_CLASSES else ALL_GRAPHS_CAP


def _sorted(found: dict[CanonicalForm, Graph]) -> tuple[Graph, ...]:
    return tuple(found[cf] for cf in sorted(found))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    if n > ALL_GRAPHS_CAP:
        raise CapExceeded(f"all graphs are enumerated only up to n={ALL_GRAPHS_CAP}")
    if n <= 1:
        return (empty_graph(n),)
    found: dict[CanonicalForm, Graph] = {}
    for parent in all_graphs(n - 1):
        for nbhd in range(1 << (n - 1)):
            child = add_vertex(parent, nbhd)
            found.setdefault(canonical_form(child), child)
    return _sorted(found)


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    if n > SPARSE_CAP:
        raise CapExceeded(f"trees are enumerated only up to n={SPARSE_CAP}")
    if n <= 0:
        return ()
    if n == 1:
        return (empty_graph(1),)
    found: dict[CanonicalForm, Graph] = {}
    for parent in trees(n - 1):
        for v in range(n - 1):
            child = add_vertex(parent, 1 << v)
            found.setdefault(canonical_form(child), child)
    return _sorted(found)


@lru_cache(maxsize=None)
def connected_unicyclic(n: int) -> tuple[Graph, ...]:
    if n > SPARSE_CAP:
        raise CapExceeded(f"unicyclic graphs are enumerated only up to n={SPARSE_CAP}")
    if n < 3:
        return ()
    found: dict[CanonicalForm, Graph] = {}
    for t in trees(n):
        for u in range(n):
            for v in iter_bits(~t.adj[u] & ((1 << n) - 1) & ~((1 << (u + 1)) - 1)):
                adj = list(t.adj)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                child = Graph(n, tuple(adj))
                found.setdefault(canonical_form(child), child)
    return _sorted(found)


def _multisets(n: int, max_part: tuple[int, int]) -> Iterator[list[Graph]]:
    """Multisets of trees with n vertices total, parts taken in non-increasing
    (order, index) so each multiset appears once."""
    if n == 0:
        yield []
        return
    top_size, top_idx = max_part
    for size in range(min(n, top_size), 0, -1):
        pool = trees(size)
        limit = top_idx if size == top_size else len(pool) - 1
        for idx in range(limit, -1, -1):
            for rest in _multisets(n - size, (size, idx)):
                yield [pool[idx], *rest]


@lru_cache(maxsize=None)
def forests(n: int) -> tuple[Graph, ...]:
    if n > SPARSE_CAP:
        raise CapExceeded(f"forests are enumerated only up to n={SPARSE_CAP}")
    if n == 0:
        return (empty_graph(0),)
    found: dict[CanonicalForm, Graph] = {}
    for parts in _multisets(n, (n, len(trees(n)) - 1)):
        g = disjoint_union(*parts)
        found.setdefault(canonical_form(g), g)
    return _sorted(found)


@lru_cache(maxsize=None)
def unicyclic(n: int) -> tuple[Graph, ...]:
    """Graphs with exactly one cycle: one connected unicyclic component plus a forest."""
    if n > SPARSE_CAP:
        raise CapExceeded(f"unicyclic graphs are enumerated only up to n={SPARSE_CAP}")
    found: dict[CanonicalForm, Graph] = {}
    for m in range(3, n + 1):
        for core in connected_unicyclic(m):
            for rest in forests(n - m):
                g = disjoint_union(core, rest)
                found.setdefault(canonical_form(g), g)
    return _sorted(found)


def enumerate_class(n: int, cls: GraphClass) -> tuple[Graph, ...]:
    """Every isomorphism class of order n in ``cls``, sorted by certificate."""
    cls = GraphClass(cls)
    cap = class_cap(cls)
    if n > cap:
        raise CapExceeded(f"class {cls.value} is enumerated only up to n={cap}, got n={n}")
    if n < 0:
        raise ValueError(f"negative order {n}")
    if cls is GraphClass.TREE:
        return trees(n)
    if cls is GraphClass.FOREST:
        return forests(n)
    if cls is GraphClass.CONNECTED_UNICYCLIC:
        return connected_unicyclic(n)
    if cls is GraphClass.UNICYCLIC:
        return unicyclic(n)
    return tuple(g for g in all_graphs(n) if cls.contains(g))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labelled graphs on n vertices."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))
