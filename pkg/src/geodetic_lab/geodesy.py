"""Geodeticity: two independent deciders, witnesses, blocks and smoothing."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import (
    INF,
    DisconnectedError,
    Graph,
    GraphError,
    biconnected_blocks,
    bfs_layers,
    is_connected,
)


class NonUniqueGeodesicError(GraphError):
    pass


class SmoothingError(GraphError):
    """Base class for graphs that cannot be smoothed into a simple weighted graph."""


class DegenerateSmoothingError(SmoothingError):
    """The graph is a cycle or a path: no branch vertex survives."""


class ParallelEdgeError(SmoothingError):
    pass


class ClosedChainError(SmoothingError):
    """A degree-2 chain leaves and returns to the same branch vertex."""


@dataclass(frozen=True)
class Witness:
    u: int
    v: int
    path_a: list[int]
    path_b: list[int]
    circuit: list[int]
    antipodes: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "path_a": self.path_a,
            "path_b": self.path_b,
            "circuit": self.circuit,
            "antipodes": list(self.antipodes),
        }


@dataclass(frozen=True)
class GeodeticVerdict:
    geodetic: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.geodetic

    def to_dict(self) -> dict:
        return {
            "geodetic": self.geodetic,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError("geodeticity checks need a connected graph")


def _walk_back(parents: list[list[int]], start: int, choice: dict[int, int]) -> list[int]:
    # from ``start`` down to the BFS root, taking parents[w][choice.get(w, 0)]
    path = [start]
    while parents[path[-1]]:
        w = path[-1]
        path.append(parents[w][choice.get(w, 0)])
    return path


def _extract_witness(u: int, v: int, parents: list[list[int]]) -> Witness:
    first = _walk_back(parents, v, {})
    branch = next(w for w in first if len(parents[w]) > 1)
    second = _walk_back(parents, branch, {branch: 1})
    second = first[: first.index(branch)] + second
    # the two walks split at ``branch`` and rejoin at the first common vertex below it
    on_first = {w: i for i, w in enumerate(first)}
    i0 = first.index(branch)
    j = i0 + 1
    while second[j] not in on_first:
        j += 1
    merge = second[j]
    arc_a = first[i0 : on_first[merge] + 1]
    arc_b = second[i0 : j + 1]
    circuit = arc_a + arc_b[-2:0:-1]
    return Witness(
        u=u,
        v=v,
        path_a=first[::-1],
        path_b=second[::-1],
        circuit=circuit,
        antipodes=(branch, merge),
    )


def is_geodetic_sigma(g: Graph, with_witness: bool = True) -> GeodeticVerdict:
    """Decide geodeticity from BFS shortest-path counts.

    The first pair ``u < v`` with two or more geodesics (in lexicographic
    order) is reported, with the two least parent-set branches as paths.
    """
    _require_connected(g)
    for u in range(g.vertex_count):
        res = bfs_layers(g, u)
        for v in range(u + 1, g.vertex_count):
            if res.sigma[v] >= 2:
                if not with_witness:
                    return GeodeticVerdict(False)
                return GeodeticVerdict(False, _extract_witness(u, v, res.parents))
    return GeodeticVerdict(True)


def check_witness(g: Graph, w: Witness) -> bool:
    """Replay a witness: two distinct equal-length shortest paths u -> v."""
    from .graph import bfs_distances

    a, b = w.path_a, w.path_b
    if a == b or len(a) != len(b):
        return False
    for p in (a, b):
        if p[0] != w.u or p[-1] != w.v or len(set(p)) != len(p):
            return False
        if any(not g.has_edge(s, t) for s, t in zip(p, p[1:])):
            return False
    if bfs_distances(g, w.u)[w.v] != len(a) - 1:
        return False
    c = w.circuit
    if len(c) % 2 or len(set(c)) != len(c) or len(c) < 4:
        return False
    if any(not g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c))):
        return False
    x, y = w.antipodes
    if c[0] != x or c[len(c) // 2] != y:
        return False
    return bfs_distances(g, x)[y] == len(c) // 2


# ---------------------------------------------------------------------------
# Vertical edges
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerticalProfile:
    root: int
    vertical: list[tuple[int, int]]
    horizontal: list[tuple[int, int]]
    heights: list[int]  # heights[i - 1] = number of vertical edges between levels i-1 and i
    spheres: list[int]  # spheres[i] = |N_i(root)|

    def edge_class(self, u: int, v: int) -> str:
        e = (min(u, v), max(u, v))
        return "horizontal" if e in set(self.horizontal) else "vertical"

    def to_dict(self) -> dict:
        return {
            "root": self.root,
            "heights": self.heights,
            "spheres": self.spheres,
            "vertical_count": len(self.vertical),
            "horizontal_count": len(self.horizontal),
        }


def vertical_profile(g: Graph, root: int) -> VerticalProfile:
    _require_connected(g)
    dist = bfs_layers(g, root).dist
    ecc = int(max(dist))
    heights = [0] * ecc
    spheres = [0] * (ecc + 1)
    for d in dist:
        spheres[int(d)] += 1
    vertical, horizontal = [], []
    for u, v in g.edges:
        du, dv = dist[u], dist[v]
        if du == dv:
            horizontal.append((u, v))
        else:
            vertical.append((u, v))
            heights[int(max(du, dv)) - 1] += 1
    return VerticalProfile(root, vertical, horizontal, heights, spheres)


def _vertical_is_spanning_tree(g: Graph, root: int) -> bool:
    dist = bfs_layers(g, root).dist
    n = g.vertex_count
    count = 0
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in g.edges:
        if dist[u] == dist[v]:
            continue
        count += 1
        if count > n - 1:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return count == n - 1


def is_geodetic_vertical(g: Graph) -> bool:
    """Geodetic iff, from every root, the vertical edges form a spanning tree."""
    _require_connected(g)
    return all(_vertical_is_spanning_tree(g, v) for v in range(g.vertex_count))


def geodesic(g: Graph, u: int, v: int) -> list[int]:
    """The unique shortest path from ``u`` to ``v``."""
    res = bfs_layers(g, u)
    if res.dist[v] == INF:
        raise DisconnectedError(f"{u} and {v} lie in different components")
    if res.sigma[v] > 1:
        raise NonUniqueGeodesicError(f"{u} and {v} are joined by several shortest paths")
    return _walk_back(res.parents, v, {})[::-1]


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockVerdict:
    block: list[int]
    verdict: GeodeticVerdict


@dataclass(frozen=True)
class BlocksReport:
    geodetic: bool
    blocks: list[BlockVerdict]

    @property
    def offending(self) -> list[list[int]]:
        return [b.block for b in self.blocks if not b.verdict.geodetic]


def blocks_geodetic(g: Graph) -> BlocksReport:
    """Per-block verdicts; witnesses are translated back to ``g``'s vertex ids."""
    out = []
    for block in biconnected_blocks(g).blocks:
        sub, keep = g.induced_subgraph(block)
        verdict = is_geodetic_sigma(sub)
        if verdict.witness is not None:
            w = verdict.witness
            verdict = GeodeticVerdict(
                False,
                Witness(
                    keep[w.u],
                    keep[w.v],
                    [keep[i] for i in w.path_a],
                    [keep[i] for i in w.path_b],
                    [keep[i] for i in w.circuit],
                    (keep[w.antipodes[0]], keep[w.antipodes[1]]),
                ),
            )
        out.append(BlockVerdict(block, verdict))
    return BlocksReport(all(b.verdict.geodetic for b in out), out)


# ---------------------------------------------------------------------------
# Smoothing and weighted geodeticity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightedGraph:
    vertex_count: int
    weights: dict[tuple[int, int], int]
    # original vertex ids for each weighted vertex, and the chain behind each edge
    vertex_map: list[int] = field(default_factory=list)
    chains: dict[tuple[int, int], list[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (u, v), w in self.weights.items():
            if u == v or not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"bad weighted edge ({u}, {v})")
            if w < 1 or int(w) != w:
                raise GraphError(f"weight {w} on ({u}, {v}) is not a positive integer")

    @property
    def adjacency(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for (u, v), w in sorted(self.weights.items()):
            adj[u].append((v, w))
            adj[v].append((u, w))
        return adj

    @classmethod
    def from_graph(cls, g: Graph) -> "WeightedGraph":
        return cls(
            g.vertex_count,
            {e: 1 for e in g.edges},
            list(range(g.vertex_count)),
            {e: list(e) for e in g.edges},
        )


def smooth(g: Graph) -> WeightedGraph:
    """Collapse maximal chains of degree-2 vertices into weighted edges.

    Vertices of degree other than 2 are kept; every chain between two kept
    vertices becomes one edge weighted by its length.
    """
    _require_connected(g)
    keep = [v for v in range(g.vertex_count) if g.degree(v) != 2]
    if not any(g.degree(v) >= 3 for v in keep):
        raise DegenerateSmoothingError("graph is a cycle or a path")
    index = {v: i for i, v in enumerate(keep)}
    weights: dict[tuple[int, int], int] = {}
    chains: dict[tuple[int, int], list[int]] = {}
    for a in keep:
        for first in g.adjacency[a]:
            chain = [a, first]
            while chain[-1] not in index:
                cur, prev = chain[-1], chain[-2]
                nxt = g.adjacency[cur][0] if g.adjacency[cur][0] != prev else g.adjacency[cur][1]
                chain.append(nxt)
            b = chain[-1]
            if b == a:
                raise ClosedChainError(f"closed degree-2 chain at vertex {a}")
            if a > b:
                continue
            key = (index[a], index[b])
            if key in weights and chains[key] != chain:
                raise ParallelEdgeError(f"vertices {a} and {b} would be joined twice")
            weights[key] = len(chain) - 1
            chains[key] = chain
    return WeightedGraph(len(keep), weights, keep, chains)


def _weighted_sssp(adj: list[list[tuple[int, int]]], s: int) -> tuple[list[float], list[int]]:
    """Dijkstra distances and path counts (saturating at 2) from ``s``."""
    n = len(adj)
    dist: list[float] = [INF] * n
    count = [0] * n
    done = [False] * n
    dist[s] = 0
    count[s] = 1
    heap = [(0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                count[v] = count[u]
                heapq.heappush(heap, (nd, v))
            elif nd == dist[v]:
                count[v] = min(2, count[v] + count[u])
    return dist, count


def is_geodetic_weighted(wg: WeightedGraph, interior: bool = True) -> bool:
    """True iff shortest paths in the weighted graph are unique.

    With ``interior`` (the default) the integer points inside each edge of
    weight w > 1 count as endpoints too, which makes the verdict agree with
    the unsmoothed graph.  ``interior=False`` only compares vertex pairs;
    that is weaker: a tie can sit between a chain's inner vertex and the
    rest of the graph while every vertex pair stays unique.
    """
    adj = wg.adjacency
    n = wg.vertex_count
    rows = [_weighted_sssp(adj, s) for s in range(n)]
    if any(c != 1 for _, count in rows for c in count):
        return False
    if not interior:
        return True

    # a point is (edge or None, offset); its ports are (vertex, distance to it)
    points: list[tuple[tuple[int, int] | None, int, list[tuple[int, int]]]] = [
        (None, 0, [(v, 0)]) for v in range(n)
    ]
    for (u, v), w in sorted(wg.weights.items()):
        for t in range(1, w):
            points.append(((u, v), t, [(u, t), (v, w - t)]))
    for i in range(n, len(points)):
        e1, t1, ports1 = points[i]
        for j in range(i):
            e2, t2, ports2 = points[j]
            best, total = INF, 0
            if e1 is not None and e1 == e2:
                best, total = abs(t1 - t2), 1
            for a, da in ports1:
                dist, count = rows[a]
                for b, db in ports2:
                    length = da + dist[b] + db
                    if length < best:
                        best, total = length, count[b]
                    elif length == best:
                        total += count[b]
            if total != 1:
                return False
    return True
