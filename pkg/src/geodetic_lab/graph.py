"""Immutable simple graphs and the BFS-based metrics built on them."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

INF = math.inf

# Shortest-path counts saturate here unless full counts are requested.
SIGMA_CAP = 2


class GraphError(ValueError):
    """Raised on malformed graph input."""


class DisconnectedError(GraphError):
    """Raised when an operation needs a connected graph."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  ``labels``
    optionally tags each vertex ("point", "line", "flag" or "plain").
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.vertex_count else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.vertex_count else 0

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the induced subgraph and the list mapping new ids to old ones."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.adjacency[u]
            if v in index and u < v
        ]
        labels = None if self.labels is None else tuple(self.labels[v] for v in keep)
        return build_graph(len(keep), edges, labels=labels), keep

    def without(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        gone = set(removed)
        return self.induced_subgraph(v for v in range(self.vertex_count) if v not in gone)

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a canonical :class:`Graph`; duplicate edges collapse to one."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError("labels must have one entry per vertex")
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), labels)


# ---------------------------------------------------------------------------
# BFS
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BFSLayers:
    source: int
    dist: list[float]
    sigma: list[int]
    parents: list[list[int]]

    def layers(self) -> list[list[int]]:
        out: list[list[int]] = []
        for v, d in enumerate(self.dist):
            if d == INF:
                continue
            d = int(d)
            while len(out) <= d:
                out.append([])
            out[d].append(v)
        return out


def bfs_layers(g: Graph, source: int, cap: int | None = SIGMA_CAP) -> BFSLayers:
    """Distances, shortest-path counts and parent sets from ``source``.

    ``sigma`` saturates at ``cap``; pass ``cap=None`` for exact counts.
    Parent lists come out sorted ascending.
    """
    if not 0 <= source < g.vertex_count:
        raise GraphError(f"source {source} out of range")
    n = g.vertex_count
    adj = g.adjacency
    dist: list[float] = [INF] * n
    sigma = [0] * n
    parents: list[list[int]] = [[] for _ in range(n)]
    dist[source] = 0
    sigma[source] = 1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        su = sigma[u]
        for w in adj[u]:
            dw = dist[w]
            if dw == INF:
                dist[w] = du
                queue.append(w)
                dw = du
            if dw == du:
                s = sigma[w] + su
                sigma[w] = s if cap is None or s < cap else cap
                parents[w].append(u)
    for p in parents:
        p.sort()
    return BFSLayers(source, dist, sigma, parents)


def bfs_distances(g: Graph, source: int, allowed: Sequence[bool] | None = None) -> list[float]:
    """Plain BFS distances, optionally restricted to vertices with ``allowed[v]``."""
    dist: list[float] = [INF] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == INF and (allowed is None or allowed[w]):
                dist[w] = du
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    dist: list[list[float]]
    sigma: list[list[int]]


def distance_matrix(g: Graph, cap: int | None = SIGMA_CAP) -> DistanceMatrix:
    rows = [bfs_layers(g, s, cap=cap) for s in range(g.vertex_count)]
    return DistanceMatrix([r.dist for r in rows], [r.sigma for r in rows])


def is_connected(g: Graph) -> bool:
    if g.vertex_count == 0:
        return True
    return INF not in bfs_distances(g, 0)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by their least vertex."""
    seen = [False] * g.vertex_count
    out = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def shortest_path(g: Graph, u: int, v: int, allowed: Sequence[bool] | None = None) -> list[int] | None:
    """Lexicographically least shortest ``u -> v`` path (None if unreachable)."""
    dist = bfs_distances(g, v, allowed)
    if dist[u] == INF:
        return None
    path = [u]
    while path[-1] != v:
        cur = path[-1]
        path.append(next(w for w in g.adjacency[cur] if dist[w] == dist[cur] - 1))
    return path


# ---------------------------------------------------------------------------
# Metrics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphMetrics:
    diameter: int
    radius: int
    girth: float
    min_degree: int
    connectivity: int


def eccentricities(g: Graph) -> list[int]:
    out = []
    for s in range(g.vertex_count):
        d = max(bfs_distances(g, s))
        if d == INF:
            raise DisconnectedError("graph is disconnected")
        out.append(int(d))
    return out


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``INF`` for forests."""
    best = INF
    adj = g.adjacency
    for s in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        parent = [-1] * g.vertex_count
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def metrics(g: Graph) -> GraphMetrics:
    if g.vertex_count == 0 or not is_connected(g):
        raise DisconnectedError("metrics need a connected, non-empty graph")
    ecc = eccentricities(g)
    return GraphMetrics(
        diameter=max(ecc),
        radius=min(ecc),
        girth=girth(g),
        min_degree=g.min_degree,
        connectivity=vertex_connectivity(g),
    )


# ---------------------------------------------------------------------------
# Vertex connectivity
# ---------------------------------------------------------------------------


def _local_cut(g: Graph, s: int, t: int, bound: int) -> tuple[int, list[int]]:
    """Max number of internally disjoint s-t paths, capped at ``bound``.

    Unit-capacity flow on the split digraph: vertex v becomes v_in = 2v and
    v_out = 2v + 1 joined by an arc of capacity 1 (infinite for s and t).
    Returns the flow value and, when it is below ``bound``, a minimum
    separating vertex set.
    """
    n = g.vertex_count
    # residual capacities stored sparsely: cap[(a, b)]
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(b, a)] = cap.get((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < bound:
        prev = [-1] * (2 * n)
        prev[source] = source
        queue = deque([source])
        while queue and prev[sink] < 0:
            a = queue.popleft()
            for b in out[a]:
                if prev[b] < 0 and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if prev[sink] < 0:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    else:
        return flow, []

    # residual reachability from source gives the min cut
    reach = [False] * (2 * n)
    reach[source] = True
    stack = [source]
    while stack:
        a = stack.pop()
        for b in out[a]:
            if not reach[b] and cap[(a, b)] > 0:
                reach[b] = True
                stack.append(b)
    cut = [v for v in range(n) if reach[2 * v] and not reach[2 * v + 1]]
    return flow, cut


def minimum_vertex_cut(g: Graph) -> tuple[int, list[int]]:
    """Vertex connectivity and a certificate cut (empty for complete graphs).

    Even's pair selection: with vertices v_0, v_1, ... it suffices to try
    pairs (v_i, v_j), j > i, for i up to the current best value.
    """
    n = g.vertex_count
    if n < 2:
        raise GraphError("connectivity needs at least two vertices")
    if not is_connected(g):
        return 0, []
    best, best_cut = n - 1, []
    i = 0
    while i <= best and i < n:
        nbrs = g.neighbor_sets[i]
        for j in range(i + 1, n):
            if j in nbrs:
                continue
            k, cut = _local_cut(g, i, j, best)
            if k < best:
                best, best_cut = k, sorted(cut)
        i += 1
    return best, best_cut


def vertex_connectivity(g: Graph) -> int:
    return minimum_vertex_cut(g)[0]


# ---------------------------------------------------------------------------
# Blocks and 2-cuts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[list[int]]
    cut_vertices: list[int]


def biconnected_blocks(g: Graph) -> BlockDecomposition:
    """Blocks (as sorted vertex lists) and cut vertices, Hopcroft-Tarjan style.

    Isolated vertices form singleton blocks.  Blocks are sorted.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    cut: set[int] = set()
    counter = 0
    adj = g.adjacency
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if not adj[root]:
            blocks.append([root])
            continue
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cut.add(parent)
                verts = set()
                while True:
                    a, b = edge_stack.pop()
                    verts.update((a, b))
                    if (a, b) == (parent, u):
                        break
                blocks.append(sorted(verts))
        if root_children > 1:
            cut.add(root)
    blocks.sort()
    return BlockDecomposition(blocks, sorted(cut))


def articulation_points(g: Graph) -> list[int]:
    return biconnected_blocks(g).cut_vertices


@dataclass(frozen=True)
class TwoCut:
    x: int
    y: int
    distance: float


def enumerate_two_cuts(g: Graph) -> list[TwoCut]:
    """All vertex pairs ``{x, y}`` (x < y) whose removal disconnects ``g``.

    For each ``x`` the pairs are read off the articulation points of
    ``g - x``, so the cost is one block decomposition per vertex.
    """
    n = g.vertex_count
    found: set[tuple[int, int]] = set()
    for x in range(n):
        h, keep = g.without([x])
        comps = components(h)
        comp_of = {}
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        arts = set(articulation_points(h))
        for y_new in range(h.vertex_count):
            y = keep[y_new]
            if y <= x:
                continue
            if y_new in arts:
                found.add((x, y))
                continue
            remaining = len(comps) - (1 if len(comps[comp_of[y_new]]) == 1 else 0)
            if remaining >= 2:
                found.add((x, y))
    out = []
    for x, y in sorted(found):
        out.append(TwoCut(x, y, bfs_distances(g, x)[y]))
    return out
