"""Canonical labelling for small graphs: colour refinement plus backtracking.

Good enough for the enumerator (n <= 10) and cubic corpora (n <= ~30).
Search-tree pruning uses automorphisms found at equal leaves: a node's
children are skipped when they share an orbit, under the automorphisms
fixing the node's prefix, with an already explored child.
"""

from __future__ import annotations

from .graph import Graph, build_graph
from .graph6 import emit_graph6


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable.

    Cells split by the number of neighbours each vertex has in every cell;
    sub-cells are ordered by that signature, which keeps the result
    label-invariant.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _key(adj: list[int], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        a, row = adj[v], 0
        while a:
            low = a & -a
            row |= 1 << pos[low.bit_length() - 1]
            a ^= low
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, adj: list[int]):
        self.adj = adj
        self.best_key: tuple[int, ...] | None = None
        self.best_order: list[int] = []
        self.best_path: list[int] = []
        self.autos: list[list[int]] = []

    def _orbits(self, prefix: list[int]):
        n = len(self.adj)
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for a in range(n):
                    ra, rb = find(a), find(gamma[a])
                    if ra != rb:
                        parent[ra] = rb
        return find

    def run(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        """Explore one node; returns the depth to jump back to, if any."""
        cells = _refine(self.adj, cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = i
        if target is None:
            return self._leaf([c[0] for c in cells], prefix)
        cell = cells[target]
        tried: list[int] = []
        for v in sorted(cell):
            if tried and self.autos:
                find = self._orbits(prefix)
                if any(find(v) == find(t) for t in tried):
                    continue
            tried.append(v)
            child = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1 :]
            jump = self.run(child, prefix + [v])
            if jump is not None and jump < len(prefix):
                return jump
        return None

    def _leaf(self, order: list[int], prefix: list[int]) -> int | None:
        key = _key(self.adj, order)
        if self.best_key is None or key > self.best_key:
            self.best_key, self.best_order, self.best_path = key, order, list(prefix)
            return None
        if key < self.best_key:
            return None
        gamma = [0] * len(order)
        for a, b in zip(self.best_order, order):
            gamma[a] = b
        self.autos.append(gamma)
        # the branch holding this leaf is the image of the best leaf's branch
        common = 0
        while common < min(len(prefix), len(self.best_path)) and self.best_path[common] == prefix[common]:
            common += 1
        return common


def _search(adj: list[int], cells: list[list[int]]) -> list[int]:
    s = _Search(adj)
    s.run(cells, [])
    return s.best_order


def canonical_order(g: Graph, colors: list[int] | None = None) -> list[int]:
    """Vertex order such that isomorphic graphs relabel to identical graphs.

    ``colors`` optionally restricts isomorphisms to colour-preserving ones.
    """
    n = g.vertex_count
    if n == 0:
        return []
    adj = [0] * n
    for v, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            adj[v] |= 1 << w
    if colors is None:
        cells = [list(range(n))]
    else:
        cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    return _search(adj, cells)


def relabel(g: Graph, order: list[int]) -> Graph:
    pos = {v: i for i, v in enumerate(order)}
    return build_graph(g.vertex_count, ((pos[u], pos[v]) for u, v in g.edges))


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_order(g))


def canonical_graph6(g: Graph) -> str:
    return emit_graph6(canonical_graph(g))


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Hashable certificate: equal iff the graphs are isomorphic."""
    n = g.vertex_count
    if n == 0:
        return (0, ())
    adj = [0] * n
    for v, nbrs in enumerate(g.adjacency):
        for w in nbrs:
            adj[v] |= 1 << w
    order = _search(adj, [list(range(n))])
    return (n, _key(adj, order))
