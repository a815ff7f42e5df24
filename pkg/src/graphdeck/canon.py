"""Canonical certificates: equal certificates iff isomorphic graphs.

The certificate of a graph is the sorted multiset of its component
certificates. Trees get a centre-rooted nested-parenthesis code, unicyclic
components get the least rotation/reflection of the cycle's sequence of
hanging-tree codes, and every other component goes through
individualization-refinement with automorphism pruning
(``refined_labeling``). ``brute_force_certificate`` is the independent
all-permutations reference used in the tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, total_ordering

import numpy as np

from .graph import Graph, GraphError, components, induced_subgraph, iter_bits, relabel

MAX_ORDER = 256
BRUTE_FORCE_CAP = 9


@total_ordering
@dataclass(frozen=True)
class CanonicalForm:
    n: int
    data: bytes

    def __lt__(self, other: CanonicalForm) -> bool:
        return (self.n, self.data) < (other.n, other.data)

    def __str__(self) -> str:
        return self.data.decode("ascii")


# --------------------------------------------------------------------------
# individualization-refinement


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by the vector of neighbour counts into every current cell,
    new cells ordered by that vector, so the result depends only on the
    labelled structure up to isomorphism.
    """
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            m = 0
            for v in cell:
                m |= 1 << v
            masks[i] = m
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in cell}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(cell)
                continue
            changed = True
            groups: dict[tuple[int, ...], list[int]] = {k: [] for k in keys}
            for v in cell:
                groups[sig[v]].append(v)
            out.extend(groups[k] for k in keys)
        cells = out
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        r = 0
        for w in iter_bits(adj[v]):
            r |= 1 << pos[w]
        rows.append(r)
    return tuple(rows)


class _Search:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.best_code: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None
        self.first_code: tuple[int, ...] | None = None
        self.first_order: list[int] | None = None
        self.generators: list[list[int]] = []

    def _add_generator(self, source: list[int], image: list[int]) -> None:
        gen = [0] * len(source)
        for a, b in zip(source, image):
            gen[a] = b
        self.generators.append(gen)

    def run(self) -> None:
        n = len(self.adj)
        by_degree: dict[int, list[int]] = {}
        for v in range(n):
            by_degree.setdefault(self.adj[v].bit_count(), []).append(v)
        cells = [by_degree[d] for d in sorted(by_degree)]
        self._descend(_refine(self.adj, cells), [])

    def _descend(self, cells: list[list[int]], fixed: list[int]) -> None:
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            order = [c[0] for c in cells]
            code = _code(self.adj, order)
            if self.first_code is None:
                self.first_code, self.first_order = code, order
            elif code == self.first_code:
                self._add_generator(self.first_order, order)
            if self.best_code is None or code < self.best_code:
                self.best_code, self.best_order = code, order
            elif code == self.best_code and self.best_order is not self.first_order:
                self._add_generator(self.best_order, order)
            return
        cell = cells[target]
        done: list[int] = []
        for v in cell:
            if done and self._same_orbit(v, done, fixed):
                continue
            done.append(v)
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._descend(_refine(self.adj, child), fixed + [v])

    def _same_orbit(self, v: int, explored: list[int], fixed: list[int]) -> bool:
        gens = [g for g in self.generators if all(g[x] == x for x in fixed)]
        if not gens:
            return False
        orbit = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return any(u in orbit for u in explored)


def refined_labeling(g: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Canonical vertex order and the adjacency rows of the relabelled graph."""
    if g.n == 0:
        return [], ()
    search = _Search(g.adj)
    search.run()
    return search.best_order, search.best_code


def refined_certificate(g: Graph) -> CanonicalForm:
    """Whole-graph certificate from individualization-refinement alone."""
    _, code = refined_labeling(g)
    return CanonicalForm(g.n, _pack_rows(g.n, code))


def canonical_relabel(g: Graph) -> Graph:
    order, _ = refined_labeling(g)
    return relabel(g, order)


def _pack_rows(n: int, rows: tuple[int, ...]) -> bytes:
    bits = 0
    k = 0
    for j in range(1, n):
        col = 0
        for i in range(j):
            col |= (rows[i] >> j & 1) << i
        bits |= col << k
        k += j
    width = (k + 7) // 8
    return b"%d:" % n + bits.to_bytes(width, "big").hex().encode()


# --------------------------------------------------------------------------
# tree and unicyclic components


def _rooted_code(adj: tuple[int, ...], root: int, blocked: int) -> str:
    """Nested-parenthesis code of the tree at ``root`` avoiding ``blocked``."""
    parent = {root: -1}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in iter_bits(adj[v] & ~blocked):
            if w != parent[v] and w not in parent:
                parent[w] = v
                order.append(w)
    kids: dict[int, list[str]] = {v: [] for v in order}
    code = ""
    for v in reversed(order):
        children = kids[v]
        children.sort()
        code = "(" + "".join(children) + ")"
        p = parent[v]
        if p >= 0:
            kids[p].append(code)
    return code


def _tree_code(adj: tuple[int, ...], vertices: list[int]) -> str:
    """Free-tree code: least rooted code over the (one or two) centres."""
    if len(vertices) == 1:
        return "()"
    deg = {v: adj[v].bit_count() for v in vertices}
    layer = [v for v in vertices if deg[v] <= 1]
    remaining = len(vertices)
    removed = 0
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed |= 1 << v
            for w in iter_bits(adj[v] & ~removed):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_rooted_code(adj, c, 0) for c in layer)


def _unicyclic_code(adj: tuple[int, ...], vertices: list[int]) -> str:
    deg = {v: adj[v].bit_count() for v in vertices}
    stack = [v for v in vertices if deg[v] == 1]
    pruned = 0
    while stack:
        v = stack.pop()
        pruned |= 1 << v
        for w in iter_bits(adj[v] & ~pruned):
            deg[w] -= 1
            if deg[w] == 1:
                stack.append(w)
    cycle_mask = 0
    for v in vertices:
        if not pruned >> v & 1:
            cycle_mask |= 1 << v
    start = (cycle_mask & -cycle_mask).bit_length() - 1
    ring = [start]
    prev, cur = -1, start
    while True:
        nxt = [w for w in iter_bits(adj[cur] & cycle_mask) if w != prev]
        step = nxt[0]
        if step == start:
            break
        ring.append(step)
        prev, cur = cur, step
        if len(ring) > len(vertices):
            raise AssertionError("cycle walk did not close")
    seq = [_rooted_code(adj, v, cycle_mask & ~(1 << v)) for v in ring]
    L = len(seq)
    rev = seq[::-1]
    best = min(
        min(tuple(seq[i:] + seq[:i]) for i in range(L)),
        min(tuple(rev[i:] + rev[:i]) for i in range(L)),
    )
    return "".join(best)


@lru_cache(maxsize=1 << 16)
def _component_certificate(sub: Graph) -> str:
    m = sub.edge_count
    all_v = list(range(sub.n))
    if m == sub.n - 1:
        return "T" + _tree_code(sub.adj, all_v)
    if m == sub.n:
        return "U" + _unicyclic_code(sub.adj, all_v)
    return "G" + refined_certificate(sub).data.decode()


@lru_cache(maxsize=1 << 18)
def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > MAX_ORDER:
        raise GraphError(f"order {g.n} exceeds supported maximum {MAX_ORDER}")
    comps = components(g)
    if len(comps) == 1:
        parts = [_component_certificate(g)]
    else:
        parts = sorted(_component_certificate(induced_subgraph(g, c)) for c in comps)
    return CanonicalForm(g.n, ";".join(parts).encode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> list[list[int]]:
    """Generators of Aut(g) as vertex maps (a generating set, not necessarily minimal)."""
    if g.n == 0:
        return []
    search = _Search(g.adj)
    search.run()
    return search.generators


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits of Aut(g)."""
    if g.n == 0:
        return []
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in automorphism_generators(g):
        for a, b in enumerate(gen):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_vertex_transitive(g: Graph) -> bool:
    return len(automorphism_orbits(g)) <= 1


# --------------------------------------------------------------------------
# brute-force reference


@lru_cache(maxsize=None)
def _permutation_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    # column k holds the flat matrix index of pair k under each permutation
    idx = np.stack([perms[:, i] * n + perms[:, j] for i, j in pairs], axis=1)
    return perms, idx


def brute_force_certificate(g: Graph) -> CanonicalForm:
    """Greatest upper-triangle bit string (column order) over all n! labelings."""
    n = g.n
    if n > BRUTE_FORCE_CAP:
        raise GraphError(f"brute force limited to n <= {BRUTE_FORCE_CAP}")
    if n <= 1:
        return CanonicalForm(n, b"")
    _, idx = _permutation_table(n)
    mat = np.zeros(n * n, dtype=np.uint8)
    for u, v in g.edges():
        mat[u * n + v] = mat[v * n + u] = 1
    bits = mat[idx].astype(np.int64)
    m = bits.shape[1]
    weights = np.left_shift(np.int64(1), np.arange(m - 1, -1, -1, dtype=np.int64))
    best = int((bits @ weights).max())
    return CanonicalForm(n, best.to_bytes((m + 7) // 8, "big"))


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and brute_force_certificate(g) == brute_force_certificate(h)
