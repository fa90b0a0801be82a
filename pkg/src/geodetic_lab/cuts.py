"""Diagnostics around minimal 2-cuts: distance coordinates, diagonals and lemma checks.

For a 2-cut ``{x, y}`` at distance ``ell`` each vertex ``v`` on the geodesic's
side ``A1`` maps to ``(d(x, v), d(y, v))`` and each vertex of a second
component ``A2`` to ``(ell - d(y, v), ell - d(x, v))``.  Diagonal ``j`` holds
the vertices with ``d(v, y) - d(v, x) = j``; ``R`` collects the ``A1`` side,
``L`` the ``A2`` side, with ``x`` placed on diagonal ``ell`` and ``y`` on
``-ell`` of both.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .geodesy import is_geodetic_sigma
from .graph import (
    INF,
    DisconnectedError,
    Graph,
    GraphError,
    bfs_distances,
    bfs_layers,
    components,
    enumerate_two_cuts,
    is_connected,
    shortest_path,
)


class NotACutError(GraphError):
    pass


class StaleProfileError(GraphError):
    pass


def _fingerprint(g: Graph) -> int:
    return hash(g.adjacency)


@dataclass(frozen=True)
class MinimalCut:
    x: int
    y: int
    ell: int


def min_distance_two_cut(g: Graph) -> MinimalCut | None:
    """A 2-cut ``{x, y}`` with ``d(x, y)`` minimal; ties go to the least ``(x, y)``."""
    if not is_connected(g):
        raise DisconnectedError("min_distance_two_cut needs a connected graph")
    cuts = enumerate_two_cuts(g)
    if not cuts:
        return None
    best = min(cuts, key=lambda c: (c.distance, c.x, c.y))
    return MinimalCut(best.x, best.y, int(best.distance))


@dataclass(frozen=True)
class CutProfile:
    x: int
    y: int
    ell: int
    path: list[int]
    components: list[list[int]]
    a1: int  # index into components
    a2: int
    phi: dict[int, tuple[int, int]]
    right: dict[int, list[int]]  # R_j
    left: dict[int, list[int]]  # L_j
    dist_x: list[float]
    dist_y: list[float]
    geodetic_basis: bool
    fingerprint: int = field(repr=False, default=0)

    @property
    def k(self) -> int:
        return len(self.components)

    def diagonal_grid(self) -> str:
        """Text table: one row per diagonal j with the sizes of R_j and L_j."""
        rows = [f"{'j':>4} {'R':>5} {'L':>5}"]
        for j in range(self.ell, -self.ell - 1, -1):
            rows.append(f"{j:>4} {len(self.right[j]):>5} {len(self.left[j]):>5}")
        return "\n".join(rows) + "\n"

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "ell": self.ell,
            "path": self.path,
            "components": self.components,
            "a1": self.a1,
            "a2": self.a2,
            "geodetic_basis": self.geodetic_basis,
            "phi": {str(v): list(c) for v, c in sorted(self.phi.items())},
            "R": {str(j): vs for j, vs in sorted(self.right.items())},
            "L": {str(j): vs for j, vs in sorted(self.left.items())},
        }


def cut_profile(g: Graph, x: int, y: int) -> CutProfile:
    if x == y:
        raise NotACutError("a 2-cut needs two distinct vertices")
    if not is_connected(g):
        raise DisconnectedError("cut_profile needs a connected graph")
    x, y = min(x, y), max(x, y)
    rest, keep = g.without([x, y])
    comps = [[keep[v] for v in c] for c in components(rest)]
    if len(comps) < 2:
        raise NotACutError(f"removing {{{x}, {y}}} leaves the graph connected")

    dist_x = bfs_distances(g, x)
    dist_y = bfs_distances(g, y)
    ell = int(dist_x[y])
    sigma = bfs_layers(g, x).sigma[y]
    geodetic_basis = sigma == 1 and is_geodetic_sigma(g, with_witness=False).geodetic
    path = shortest_path(g, x, y)

    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    a1 = comp_of[path[1]] if ell >= 2 else 0
    a2 = next(i for i in range(len(comps)) if i != a1)

    phi: dict[int, tuple[int, int]] = {x: (0, ell), y: (ell, 0)}
    right = {j: [] for j in range(-ell, ell + 1)}
    left = {j: [] for j in range(-ell, ell + 1)}
    for v in comps[a1]:
        phi[v] = (int(dist_x[v]), int(dist_y[v]))
        right[int(dist_y[v] - dist_x[v])].append(v)
    for v in comps[a2]:
        phi[v] = (int(ell - dist_y[v]), int(ell - dist_x[v]))
        left[int(dist_y[v] - dist_x[v])].append(v)
    for side in (right, left):
        side[ell].append(x)
        side[-ell].append(y)
        for j in side:
            side[j].sort()
    return CutProfile(
        x, y, ell, path, comps, a1, a2, phi, right, left, dist_x, dist_y,
        geodetic_basis, _fingerprint(g),
    )


# ---------------------------------------------------------------------------
# Lemma predicates
# ---------------------------------------------------------------------------

HOLDS = "holds"
VIOLATED = "violated"
VACUOUS = "vacuous"

LEMMAS = (
    "two-components",
    "geodesic-containment",
    "antipodal-emptiness",
    "neighbor-jump",
    "SE-edge-existence",
    "find-square",
    "phi-contraction",
)

# Lemmas that hold on every graph with a minimal 2-cut; antipodal emptiness
# needs geodeticity, the rest also need minimum degree >= 3.
UNCONDITIONAL = ("neighbor-jump", "phi-contraction")
GEODETIC_ONLY = ("antipodal-emptiness",)


@dataclass
class LemmaResult:
    name: str
    status: str
    witness: object = None

    def to_dict(self) -> dict:
        return {"lemma": self.name, "status": self.status, "witness": self.witness}


@dataclass
class LemmaCheckReport:
    results: dict[str, LemmaResult]
    geodetic: bool
    min_degree: int

    def __getitem__(self, name: str) -> LemmaResult:
        return self.results[name]

    @property
    def violations(self) -> list[str]:
        return [name for name, r in self.results.items() if r.status == VIOLATED]

    def asserted(self, name: str) -> bool:
        if name in UNCONDITIONAL:
            return True
        if name in GEODETIC_ONLY:
            return self.geodetic
        return self.geodetic and self.min_degree >= 3

    @property
    def asserted_violations(self) -> list[str]:
        """Violations of lemmas whose hypotheses are met: these refute a claim."""
        return [name for name in self.violations if self.asserted(name)]

    def to_dict(self) -> dict:
        return {
            "geodetic": self.geodetic,
            "min_degree": self.min_degree,
            "lemmas": [
                {**self.results[name].to_dict(), "asserted": self.asserted(name)} for name in LEMMAS
            ],
        }


def _two_components(p: CutProfile) -> LemmaResult:
    if p.k == 2:
        return LemmaResult("two-components", HOLDS)
    return LemmaResult("two-components", VIOLATED, {"components": p.components})


def _containment(g: Graph, p: CutProfile) -> LemmaResult:
    for comp in p.components:
        allowed = [False] * g.vertex_count
        for v in list(comp) + p.path:
            allowed[v] = True
        for u in comp:
            full = bfs_distances(g, u)
            inside = bfs_distances(g, u, allowed)
            for v in comp:
                if v > u and inside[v] != full[v]:
                    return LemmaResult(
                        "geodesic-containment", VIOLATED, {"u": u, "v": v, "distance": full[v]}
                    )
    return LemmaResult("geodesic-containment", HOLDS)


def _antipodal(g: Graph, p: CutProfile) -> LemmaResult:
    name = "antipodal-emptiness"
    for j in range(-p.ell + 1, p.ell):
        if p.right[j] and p.left[-j]:
            v, u = p.right[j][0], p.left[-j][0]
            via_x = shortest_path(g, u, p.x) + shortest_path(g, p.x, v)[1:]
            via_y = shortest_path(g, u, p.y) + shortest_path(g, p.y, v)[1:]
            return LemmaResult(
                name, VIOLATED, {"j": j, "u": u, "v": v, "paths": [via_x, via_y]}
            )
    return LemmaResult(name, HOLDS)


def _side_members(p: CutProfile, side: dict[int, list[int]]) -> dict[int, int]:
    return {v: j for j, vs in side.items() for v in vs}


def _neighbor_jump(g: Graph, p: CutProfile) -> LemmaResult:
    for label, side in (("R", p.right), ("L", p.left)):
        member = _side_members(p, side)
        for u, v in g.edges:
            if u not in member or v not in member:
                continue
            ju, jv = member[u], member[v]
            if abs(ju - jv) > 2:
                return LemmaResult("neighbor-jump", VIOLATED, {"side": label, "edge": [u, v]})
            if abs(ju - jv) == 2:
                (xi_u, eta_u), (xi_v, eta_v) = p.phi[u], p.phi[v]
                if abs(xi_u - xi_v) != 1 or (xi_v - xi_u) != -(eta_v - eta_u):
                    return LemmaResult("neighbor-jump", VIOLATED, {"side": label, "edge": [u, v]})
    return LemmaResult("neighbor-jump", HOLDS)


def _se_edges(g: Graph, p: CutProfile) -> LemmaResult:
    applied = False
    for label, side in (("R", p.right), ("L", p.left)):
        for j in range(-p.ell + 2, p.ell + 1):
            if side[j] and side[j - 2] and not side[j - 1]:
                applied = True
                lower = set(side[j - 2])
                if not any(w in lower for v in side[j] for w in g.adjacency[v]):
                    return LemmaResult("SE-edge-existence", VIOLATED, {"side": label, "j": j})
    return LemmaResult("SE-edge-existence", HOLDS if applied else VACUOUS)


def _find_square(g: Graph, p: CutProfile) -> LemmaResult:
    name = "find-square"
    ell, R = p.ell, p.right

    def empty(j: int) -> bool:
        return j not in R or not R[j]

    a1 = set(p.components[p.a1]) | set(p.path)
    applied = False
    checks = (
        (ell - 1, ell - 3, ell, p.x, p.path[1]),
        (1 - ell, 3 - ell, -ell, p.y, p.path[-2]),
    )
    for j1, j3, jend, end, nxt in checks:
        if empty(j1) and empty(j3):
            applied = True
            if R[jend] != [end]:
                return LemmaResult(name, VIOLATED, {"diagonal": jend, "members": R[jend]})
            nbrs = sorted(w for w in g.adjacency[end] if w in a1)
            if nbrs != [nxt]:
                return LemmaResult(name, VIOLATED, {"vertex": end, "neighbors": nbrs})
    return LemmaResult(name, HOLDS if applied else VACUOUS)


def _contraction(g: Graph, p: CutProfile) -> LemmaResult:
    for u, v in g.edges:
        if u in p.phi and v in p.phi:
            (a, b), (c, d) = p.phi[u], p.phi[v]
            if max(abs(a - c), abs(b - d)) > 1:
                return LemmaResult("phi-contraction", VIOLATED, {"edge": [u, v]})
    return LemmaResult("phi-contraction", HOLDS)


def check_cut_lemmas(g: Graph, profile: CutProfile) -> LemmaCheckReport:
    """Evaluate each lemma about minimal 2-cuts as a predicate on ``profile``.

    On geodetic graphs with minimum degree >= 3 every predicate must hold;
    elsewhere violations are reported with a witness.
    """
    if profile.fingerprint != _fingerprint(g):
        raise StaleProfileError("profile was built from a different graph")
    results = [
        _two_components(profile),
        _containment(g, profile),
        _antipodal(g, profile),
        _neighbor_jump(g, profile),
        _se_edges(g, profile),
        _find_square(g, profile),
        _contraction(g, profile),
    ]
    return LemmaCheckReport(
        {r.name: r for r in results}, profile.geodetic_basis, g.min_degree
    )


def replay_antipodal_witness(g: Graph, witness: dict) -> bool:
    """Both paths are valid, distinct and of length d(u, v)."""
    a, b = witness["paths"]
    u, v = witness["u"], witness["v"]
    d = bfs_distances(g, u)[v]
    for path in (a, b):
        if path[0] != u or path[-1] != v or len(path) - 1 != d:
            return False
        if any(not g.has_edge(s, t) for s, t in zip(path, path[1:])):
            return False
    return a != b


# ---------------------------------------------------------------------------
# Scan for counterexamples to 3-connectivity
# ---------------------------------------------------------------------------


@dataclass
class Theorem1Survey:
    scanned: int = 0
    skipped: int = 0
    counterexamples: list = field(default_factory=list)
    geodetic_blocks: Counter = field(default_factory=Counter)
    records: list = field(default_factory=list)

    def merge(self, other: "Theorem1Survey") -> "Theorem1Survey":
        return Theorem1Survey(
            self.scanned + other.scanned,
            self.skipped + other.skipped,
            self.counterexamples + other.counterexamples,
            self.geodetic_blocks + other.geodetic_blocks,
            self.records + other.records,
        )

    def to_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "skipped": self.skipped,
            "counterexamples": [r.to_dict() for r in self.counterexamples],
            "geodetic_blocks": [
                {"n": n, "connectivity": k, "diameter": d, "girth": None if gi == INF else gi, "count": c}
                for (n, k, d, gi), c in sorted(self.geodetic_blocks.items())
            ],
        }


def is_theorem1_counterexample(rec) -> bool:
    return rec.geodetic and rec.connectivity == 2 and rec.min_degree >= 3


def survey_from_records(records: Iterable) -> Theorem1Survey:
    """Fold census records (``None`` marks a skipped entry) into a survey."""
    out = Theorem1Survey()
    for rec in records:
        if rec is None:
            out.skipped += 1
            continue
        out.scanned += 1
        out.records.append(rec)
        if is_theorem1_counterexample(rec):
            out.counterexamples.append(rec)
        if rec.geodetic and rec.connectivity >= 2:
            out.geodetic_blocks[(rec.n, rec.connectivity, rec.diameter, rec.girth)] += 1
    return out


def theorem1_scan(corpus: Iterable, jobs: int = 1) -> Theorem1Survey:
    """Scan ``(graph, provenance)`` pairs for 2-connected, non-3-connected geodetic graphs of min degree >= 3."""
    from .records import scan_records

    return survey_from_records(scan_records(corpus, jobs=jobs))
