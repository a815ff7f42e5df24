"""Simple undirected graphs on vertices 0..n-1 and their structural predicates.

Adjacency is stored as one Python int bitmask per vertex, so vertex sets are
arbitrary width. Paths are measured in vertices throughout this package; cycle
lengths count vertices (equivalently edges).
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INFINITY = math.inf

# Exact longest-path DP is exponential in n; forests bypass it.
LONGEST_PATH_CAP = 24


class GraphError(ValueError):
    """Invalid graph construction or argument."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative order {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def graph_from_adjacency(adj: Sequence[int]) -> Graph:
    """Build from bitmask rows, validating symmetry and the absence of loops."""
    n = len(adj)
    full = (1 << n) - 1
    for u, row in enumerate(adj):
        if row & ~full or row >> u & 1:
            raise GraphError(f"row {u} has a loop or out-of-range bit")
        for v in iter_bits(row):
            if not adj[v] >> u & 1:
                raise GraphError(f"asymmetric edge {(u, v)}")
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex i is vertex order[i] of g."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * g.n
    for i, v in enumerate(order):
        row = 0
        for w in iter_bits(g.adj[v]):
            row |= 1 << pos[w]
        adj[i] = row
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in the given order."""
    pos = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        row = 0
        for w in iter_bits(g.adj[v]):
            i = pos.get(w)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return Graph(len(vertices), tuple(adj))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range 0..{g.n - 1}")
    low = (1 << v) - 1
    adj = []
    for u, row in enumerate(g.adj):
        if u != v:
            adj.append((row & low) | (row >> (v + 1) << v))
    return Graph(g.n - 1, tuple(adj))


def add_vertex(g: Graph, neighbourhood: int) -> Graph:
    """Append vertex n adjacent to the vertices in the bitmask ``neighbourhood``."""
    n = g.n
    bit = 1 << n
    adj = [row | bit if neighbourhood >> u & 1 else row for u, row in enumerate(g.adj)]
    adj.append(neighbourhood)
    return Graph(n + 1, tuple(adj))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def cyclomatic_number(g: Graph) -> int:
    """Independent cycle count e - n + components."""
    return g.edge_count - g.n + len(components(g))


def is_forest(g: Graph) -> bool:
    return cyclomatic_number(g) == 0


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def cycle_count_category(g: Graph) -> int:
    """0, 1 or 2, the last meaning two or more cycles.

    A graph has exactly one cycle iff its cyclomatic number is 1, since two
    independent cycles always generate a third.
    """
    return min(cyclomatic_number(g), 2)


def is_unicyclic(g: Graph) -> bool:
    return cyclomatic_number(g) == 1


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.adj[v]):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INFINITY`` for forests.

    BFS from every vertex; a non-tree edge (v, w) met at depths d(v), d(w)
    closes a walk of length d(v) + d(w) + 1, and the minimum over all roots is
    attained by a genuine shortest cycle.
    """
    best = INFINITY
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in iter_bits(g.adj[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best if best == INFINITY else int(best)


def bipartition(g: Graph) -> list[int] | None:
    """A proper 2-colouring as a list of 0/1, or None if an odd cycle exists."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adj[v]):
                if colour[w] < 0:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return colour


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def diameter(g: Graph) -> float:
    """Largest shortest-path distance in edges; ``INFINITY`` if disconnected."""
    if g.n == 0:
        return 0
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            return INFINITY
        best = max(best, max(dist))
    return best


def _forest_longest_path(g: Graph) -> int:
    best = 1 if g.n else 0
    for comp in components(g):
        dist = bfs_distances(g, comp[0])
        far = max(comp, key=lambda v: dist[v])
        dist = bfs_distances(g, far)
        best = max(best, max(dist[v] for v in comp) + 1)
    return best


def longest_path_order(g: Graph) -> int:
    """Number of vertices on a longest simple path.

    Forests use a double BFS sweep per component. Other graphs run the exact
    subset DP ``reach[S]`` = set of endpoints of a Hamiltonian path of S, which
    is limited to ``LONGEST_PATH_CAP`` vertices.
    """
    if g.n == 0:
        return 0
    if is_forest(g):
        return _forest_longest_path(g)
    best = 1
    for comp in components(g):
        if len(comp) <= best:
            continue
        sub = induced_subgraph(g, comp) if len(comp) < g.n else g
        if is_forest(sub):
            best = max(best, _forest_longest_path(sub))
        else:
            best = max(best, _subset_longest_path(sub))
    return best


def _subset_longest_path(g: Graph) -> int:
    n = g.n
    if n > LONGEST_PATH_CAP:
        raise GraphError(f"longest path needs n <= {LONGEST_PATH_CAP} for graphs with cycles, got {n}")
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    best = 1
    adj = g.adj
    for s in range(1, 1 << n):
        ends = reach[s]
        if not ends:
            continue
        size = s.bit_count()
        if size > best:
            best = size
            if best == n:
                return n
        grow = 0
        for v in iter_bits(ends):
            grow |= adj[v]
        grow &= ~s
        for w in iter_bits(grow):
            if adj[w] & ends:
                reach[s | 1 << w] |= 1 << w
    return best


class GraphClass(str, enum.Enum):
    ALL = "all"
    TREE = "tree"
    NONTREE = "nontree"
    FOREST = "forest"
    UNICYCLIC = "unicyclic"
    CONNECTED_UNICYCLIC = "connected-unicyclic"
    MULTICYCLIC = "multicyclic"
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"
    BIPARTITE = "bipartite"
    NONBIPARTITE = "nonbipartite"
    NONFOREST = "nonforest"

    def contains(self, g: Graph) -> bool:
        return _CLASS_TESTS[self](g)


_CLASS_TESTS = {
    GraphClass.ALL: lambda g: True,
    GraphClass.TREE: is_tree,
    GraphClass.NONTREE: lambda g: not is_tree(g),
    GraphClass.FOREST: is_forest,
    GraphClass.UNICYCLIC: is_unicyclic,
    GraphClass.CONNECTED_UNICYCLIC: lambda g: is_unicyclic(g) and is_connected(g),
    GraphClass.MULTICYCLIC: lambda g: cyclomatic_number(g) >= 2,
    GraphClass.CONNECTED: is_connected,
    GraphClass.DISCONNECTED: lambda g: not is_connected(g),
    GraphClass.BIPARTITE: is_bipartite,
    GraphClass.NONBIPARTITE: lambda g: not is_bipartite(g),
    GraphClass.NONFOREST: lambda g: not is_forest(g),
}


@dataclass(frozen=True)
class Classification:
    connected: bool
    forest: bool
    tree: bool
    unicyclic: bool
    bipartite: bool
    cycle_category: int
    components: int

    def classes(self) -> frozenset[GraphClass]:
        out = {GraphClass.ALL}
        out.add(GraphClass.CONNECTED if self.connected else GraphClass.DISCONNECTED)
        out.add(GraphClass.FOREST if self.forest else GraphClass.NONFOREST)
        out.add(GraphClass.BIPARTITE if self.bipartite else GraphClass.NONBIPARTITE)
        out.add(GraphClass.TREE if self.tree else GraphClass.NONTREE)
        if self.unicyclic:
            out.add(GraphClass.UNICYCLIC)
            if self.connected:
                out.add(GraphClass.CONNECTED_UNICYCLIC)
        if self.cycle_category >= 2:
            out.add(GraphClass.MULTICYCLIC)
        return frozenset(out)


def classify(g: Graph) -> Classification:
    kappa = len(components(g))
    connected = kappa <= 1
    cyc = g.edge_count - g.n + kappa
    return Classification(
        connected=connected,
        forest=cyc == 0,
        tree=cyc == 0 and connected and g.n >= 1,
        unicyclic=cyc == 1,
        bipartite=is_bipartite(g),
        cycle_category=min(cyc, 2),
        components=kappa,
    )


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))
