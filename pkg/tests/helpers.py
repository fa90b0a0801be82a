"""Graph builders and networkx bridges shared by the tests."""

import random
from itertools import combinations

import networkx as nx

from geodetic_lab.graph import Graph, build_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    relabel = {v: i for i, v in enumerate(sorted(h.nodes))}
    return build_graph(len(relabel), [(relabel[u], relabel[v]) for u, v in h.edges])


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def random_connected(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus independent extra edges."""
    p = rng.uniform(0.05, 0.6) if p is None else p
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def subdivide(g: Graph, counts: dict[tuple[int, int], int]) -> Graph:
    """Replace edge e by a path with counts[e] new interior vertices."""
    n = g.vertex_count
    edges = []
    for u, v in g.edges:
        k = counts.get((u, v), 0)
        chain = [u] + list(range(n, n + k)) + [v]
        n += k
        edges.extend(zip(chain, chain[1:]))
    return build_graph(n, edges)


# (number, title, passed, detail) per acceptance criterion, printed at session end
ACCEPTANCE: list[tuple[int, str, bool, str]] = []
