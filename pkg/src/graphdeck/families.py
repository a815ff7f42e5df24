"""Forest/unicyclic pairs with floor(n/2)+1 common cards, and the sharp
examples for the component-count bound on cards of connected graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .canon import is_vertex_transitive
from .graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    graph_from_edges,
    path_graph,
)

FAMILY_IDS = (1, 2, 3)
MIN_K = 2
FAMILY_MAX_ORDER = 201


def star(g: Graph) -> Graph:
    """Attach one new leaf to every vertex; leaf of vertex i is vertex n + i."""
    n = g.n
    edges = g.edges() + [(i, n + i) for i in range(n)]
    return graph_from_edges(2 * n, edges)


def star_minus_leaf(g: Graph) -> Graph:
    """``star(g)`` with one leaf removed; only well defined for vertex-transitive g."""
    if not is_vertex_transitive(g):
        raise GraphError("star minus a leaf is not well-defined: graph is not vertex-transitive")
    return delete_vertex(star(g), g.n)


@dataclass(frozen=True)
class FamilyInstance:
    family_id: int
    k: int
    n: int
    forest: Graph
    unicyclic: Graph

    @property
    def expected_common(self) -> int:
        return self.n // 2 + 1


def family_order(family_id: int, k: int) -> int:
    if family_id == 2:
        return 4 * k - 1
    if family_id in (1, 3):
        return 2 * k + 1
    raise ValueError(f"unknown family id {family_id}")


def family(family_id: int, k: int) -> FamilyInstance:
    """Pair (forest, unicyclic graph) of the given family and parameter.

    1: P_k + (k+1)K1 vs C_{k+1} + kK1            (n = 2k+1)
    2: P_{2k-1} + kK2 vs C_{2k} + (k-1)K2 + K1   (n = 4k-1)
    3: star(P_k) + K1 vs star(C_{k+1}) minus a leaf   (n = 2k+1)
    """
    if family_id not in FAMILY_IDS:
        raise ValueError(f"unknown family id {family_id}")
    if k < MIN_K:
        raise ValueError(f"family {family_id} needs k >= {MIN_K}, got {k}")
    k2 = complete_graph(2)
    if family_id == 1:
        forest = disjoint_union(path_graph(k), empty_graph(k + 1))
        uni = disjoint_union(cycle_graph(k + 1), empty_graph(k))
    elif family_id == 2:
        forest = disjoint_union(path_graph(2 * k - 1), *[k2] * k)
        uni = disjoint_union(cycle_graph(2 * k), *[k2] * (k - 1), empty_graph(1))
    else:
        forest = disjoint_union(star(path_graph(k)), empty_graph(1))
        uni = star_minus_leaf(cycle_graph(k + 1))
    n = family_order(family_id, k)
    assert forest.n == uni.n == n
    return FamilyInstance(family_id, k, n, forest, uni)


def family_parameters(family_id: int, max_order: int = FAMILY_MAX_ORDER) -> range:
    """All k >= MIN_K whose instance has order at most ``max_order``."""
    k = MIN_K
    while family_order(family_id, k + 1) <= max_order:
        k += 1
    return range(MIN_K, k + 1) if family_order(family_id, MIN_K) <= max_order else range(0)


def sharp_component_example(h: Graph, target_n: int) -> Graph:
    """Connected graph on ``target_n`` vertices with the most cards having H as a component.

    A cycle on target_n - v(H)*q vertices, q = target_n // (v(H)+1), gets q
    copies of H, each joined by one edge from its vertex 0 to its own cycle
    vertex. Deleting such a cycle vertex leaves that copy as a component.
    """
    k = h.n
    if k < 1 or not 2 * k < target_n:
        raise GraphError(f"need 1 <= v(H) < target_n/2, got v(H)={k}, n={target_n}")
    copies = target_n // (k + 1)
    cyc = target_n - k * copies
    if cyc < 3 or cyc < copies:
        raise GraphError(f"a cycle on {cyc} vertices cannot host {copies} copies of H")
    edges = [(i, (i + 1) % cyc) for i in range(cyc)]
    for c in range(copies):
        base = cyc + c * k
        edges.extend((base + u, base + v) for u, v in h.edges())
        edges.append((c, base))
    return graph_from_edges(target_n, edges)
