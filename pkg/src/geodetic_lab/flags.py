"""Levi and Flag graphs of planes, lifting, 2-connectivity certificates and claim checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .geodesy import is_geodetic_sigma, is_geodetic_vertical, vertical_profile
from .geometry import AFFINE, PROJECTIVE, IncidenceStructure, build_plane
from .graph import Graph, GraphError, bfs_layers, build_graph, eccentricities, minimum_vertex_cut
from .graph6 import emit_graph6

# Vertex labels: ("point", p), ("line", L) or ("flag", p, L).
Label = tuple


class LiftError(GraphError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[Label, ...]
    structure: IncidenceStructure | None = field(default=None, compare=False)

    @cached_property
    def index(self) -> dict[Label, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def vertex(self, label: Label) -> int:
        return self.index[label]

    def kind_of(self, v: int) -> str:
        return self.labels[v][0]

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v, lab in enumerate(self.labels):
            text = {"point": "P{1}", "line": "L{1}", "flag": "F{1},{2}"}[lab[0]].format(*lab)
            lines.append(f'  {v} [label="{text}", kind="{lab[0]}"];')
        for u, v in self.graph.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_graph6(self) -> str:
        return emit_graph6(self.graph)


def levi_graph(s: IncidenceStructure) -> LabeledGraph:
    """Point-line incidence graph: points first, then lines."""
    n_pts = s.point_count
    labels = [("point", p) for p in range(n_pts)] + [("line", li) for li in range(s.line_count)]
    edges = [(p, n_pts + li) for li, pts in enumerate(s.lines) for p in pts]
    tags = [lab[0] for lab in labels]
    return LabeledGraph(build_graph(len(labels), edges, tags), tuple(labels), s)


def flag_graph(s: IncidenceStructure) -> LabeledGraph:
    """Points plus flags; each line contributes a clique on its flags with pendant points.

    Flags are numbered after the points, sorted by (line, point).
    """
    n_pts = s.point_count
    labels: list[Label] = [("point", p) for p in range(n_pts)]
    edges = []
    for li, pts in enumerate(s.lines):
        first = len(labels)
        for p in pts:
            labels.append(("flag", p, li))
            edges.append((p, len(labels) - 1))
        ids = range(first, len(labels))
        edges.extend((a, b) for a in ids for b in ids if a < b)
    tags = [lab[0] for lab in labels]
    return LabeledGraph(build_graph(len(labels), edges, tags), tuple(labels), s)


def _lift_labels(seq: Sequence[Label], closed: bool) -> list[Label]:
    out: list[Label] = []
    n = len(seq)
    for i, lab in enumerate(seq):
        if lab[0] == "point":
            out.append(lab)
            continue
        if lab[0] != "line":
            raise LiftError(f"{lab!r} is not a Levi vertex")
        if not closed and (i == 0 or i == n - 1):
            raise LiftError("an open Levi path must start and end at points")
        before, after = seq[(i - 1) % n], seq[(i + 1) % n]
        out.append(("flag", before[1], lab[1]))
        out.append(("flag", after[1], lab[1]))
    return out


def _check_levi_walk(levi: LabeledGraph, path: Sequence[int], closed: bool) -> None:
    if len(set(path)) != len(path):
        raise LiftError("Levi path is not simple")
    pairs = list(zip(path, path[1:]))
    if closed:
        if len(path) < 4:
            raise LiftError("a Levi cycle needs at least four vertices")
        pairs.append((path[-1], path[0]))
    for a, b in pairs:
        if not levi.graph.has_edge(a, b):
            raise LiftError(f"{levi.labels[a]} and {levi.labels[b]} are not adjacent in the Levi graph")


def lift_path(levi: LabeledGraph, flag: LabeledGraph, path: Sequence[int]) -> list[int]:
    """Lift a simple Levi path between points to the Flag graph.

    Each step ``p, L, p'`` becomes ``p, (p, L), (p', L), p'``.
    """
    _check_levi_walk(levi, path, closed=False)
    labels = _lift_labels([levi.labels[v] for v in path], closed=False)
    return [flag.vertex(lab) for lab in labels]


def lift_cycle(levi: LabeledGraph, flag: LabeledGraph, cycle: Sequence[int]) -> list[int]:
    """Lift a simple Levi cycle (given without repeating its first vertex)."""
    _check_levi_walk(levi, cycle, closed=True)
    seq = [levi.labels[v] for v in cycle]
    # rotate so the cycle starts at a point; the lifted sequence is then cyclic
    k = next(i for i, lab in enumerate(seq) if lab[0] == "point")
    seq = seq[k:] + seq[:k]
    return [flag.vertex(lab) for lab in _lift_labels(seq, closed=True)]


# ---------------------------------------------------------------------------
# 2-connectivity certificates
# ---------------------------------------------------------------------------


def _anchors(lab: Label) -> tuple[int, int | None]:
    # a point must be a triangle corner; a flag also fixes the side through it
    if lab[0] == "point":
        return lab[1], None
    return lab[1], lab[2]


def _point_off(s: IncidenceStructure, lines: Sequence[int]) -> int:
    banned = set().union(*(s.line_sets[li] for li in lines))
    return next(p for p in range(s.point_count) if p not in banned)


def _other_point(s: IncidenceStructure, line: int, *avoid: int) -> int:
    return next(p for p in s.lines[line] if p not in avoid)


def _triangle(s: IncidenceStructure, u: Label, v: Label) -> list[int] | None:
    """Three non-collinear points whose triangle passes every anchor, or None."""
    a, la = _anchors(u)
    b, lb = _anchors(v)
    if la is None and lb is None:
        return [a, b, _point_off(s, [s.line_through(a, b)])]
    if la is None:
        a, la, b, lb = b, lb, a, la
    # now (a, la) is a flag
    if lb is None:
        if b == a:
            return [a, _other_point(s, la, a), _point_off(s, [la])]
        if b in s.line_sets[la]:
            return [a, b, _point_off(s, [la])]
        return [a, _other_point(s, la, a), b]
    if a == b:
        return [a, _other_point(s, la, a), _other_point(s, lb, a)]
    if la == lb:
        return [a, b, _point_off(s, [la])]
    if b in s.line_sets[la]:
        return [a, b, _other_point(s, lb, b)]
    if a in s.line_sets[lb]:
        return [b, a, _other_point(s, la, a)]
    common = s.line_sets[la] & s.line_sets[lb]
    if common:
        return [a, b, next(iter(common))]
    return None


def two_connectivity_certificate(fg: LabeledGraph, u: int, v: int) -> list[int]:
    """A simple cycle of ``fg`` through ``u`` and ``v``.

    Built from a Levi cycle and lifted: a triangle ``(L1, x1, L_{x1 x2}, x2, L2, x, L1)``
    when possible, otherwise (two flags on parallel lines) the quadrilateral
    ``(L1, x1, L_{x1 x2}, x2, L2, x2', L_{x1' x2'}, x1', L1)``.
    """
    if u == v:
        raise GraphError("a certificate needs two distinct vertices")
    s = fg.structure
    if s is None:
        raise GraphError("flag graph carries no incidence structure")
    levi = levi_graph(s)
    lu, lv = fg.labels[u], fg.labels[v]
    tri = _triangle(s, lu, lv)
    if tri is not None:
        x1, x2, x = tri
        seq = [
            ("point", x1), ("line", s.line_through(x1, x2)),
            ("point", x2), ("line", s.line_through(x2, x)),
            ("point", x), ("line", s.line_through(x, x1)),
        ]
    else:
        (x1, l1), (x2, l2) = (lu[1], lu[2]), (lv[1], lv[2])
        x1b = _other_point(s, l1, x1)
        x2b = _other_point(s, l2, x2)
        seq = [
            ("point", x1), ("line", s.line_through(x1, x2)),
            ("point", x2), ("line", l2),
            ("point", x2b), ("line", s.line_through(x2b, x1b)),
            ("point", x1b), ("line", l1),
        ]
    cycle = lift_cycle(levi, fg, [levi.vertex(lab) for lab in seq])
    if u not in cycle or v not in cycle:
        raise AssertionError(f"certificate misses {lu} or {lv}")
    return cycle


def is_simple_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    n = len(cycle)
    return (
        n >= 3
        and len(set(cycle)) == n
        and all(g.has_edge(cycle[i], cycle[(i + 1) % n]) for i in range(n))
    )


# ---------------------------------------------------------------------------
# Closed forms and claim verification
# ---------------------------------------------------------------------------


def expected_vertex_count(kind: str, q: int) -> int:
    return q**3 + 2 * q**2 if kind == AFFINE else (q + 1) ** 3 + 1


def expected_diameter(kind: str) -> int:
    return 5 if kind == AFFINE else 4


def expected_heights(kind: str, q: int, root: str) -> list[int]:
    """Vertical-edge counts per height from a point root or a flag root."""
    if kind == AFFINE and root == "point":
        return [q + 1, q * q - 1, q * q - 1, q * (q * q - 1)]
    if kind == AFFINE:
        return [q, 2 * q - 1, 2 * q * (q - 1), q * (q - 1) + q * (q - 1) ** 2, q * (q - 1)]
    if root == "point":
        return [q + 1, q * (q + 1), q * (q + 1), q * q * (q + 1)]
    return [q + 1, 2 * q, 2 * q * q, q * q + q**3]


@dataclass
class Claim:
    name: str
    expected: object
    measured: object

    @property
    def passed(self) -> bool:
        return self.expected == self.measured

    def to_dict(self) -> dict:
        return {"claim": self.name, "expected": self.expected, "measured": self.measured, "passed": self.passed}


@dataclass
class ClaimReport:
    kind: str
    q: int
    claims: list[Claim] = field(default_factory=list)
    roots_checked: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def __getitem__(self, name: str) -> Claim:
        return next(c for c in self.claims if c.name == name)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "q": self.q,
            "passed": self.passed,
            "roots_checked": self.roots_checked,
            "claims": [c.to_dict() for c in self.claims],
        }


def _sample_roots(fg: LabeledGraph, all_roots: bool, per_class: int = 10) -> list[int]:
    points = [v for v in range(fg.graph.vertex_count) if fg.kind_of(v) == "point"]
    flags = [v for v in range(fg.graph.vertex_count) if fg.kind_of(v) == "flag"]
    if all_roots:
        return points + flags
    rng = random.Random(0)
    return sorted(rng.sample(points, min(per_class, len(points)))) + sorted(
        rng.sample(flags, min(per_class, len(flags)))
    )


def verify_flag_claims(
    kind: str,
    q: int,
    all_roots: bool | None = None,
    connectivity: bool = True,
) -> ClaimReport:
    """Rebuild the Flag graph and compare every measurable quantity with its closed form.

    Vertical profiles are checked from every root when ``q <= 4`` (or when
    ``all_roots`` is set), otherwise from 10 sampled roots of each kind.
    """
    s = build_plane(kind, q)
    fg = flag_graph(s)
    g = fg.graph
    report = ClaimReport(kind, q)
    add = report.claims.append

    add(Claim("vertex count", expected_vertex_count(kind, q), g.vertex_count))
    add(Claim("diameter", expected_diameter(kind), max(eccentricities(g))))
    add(Claim("geodetic (sigma)", True, is_geodetic_sigma(g, with_witness=False).geodetic))
    add(Claim("geodetic (vertical)", True, is_geodetic_vertical(g)))
    point_deg = {g.degree(v) for v in range(g.vertex_count) if fg.kind_of(v) == "point"}
    flag_deg = {g.degree(v) for v in range(g.vertex_count) if fg.kind_of(v) == "flag"}
    add(Claim("point degree", [q + 1], sorted(point_deg)))
    add(Claim("flag degree", [q if kind == AFFINE else q + 1], sorted(flag_deg)))
    if connectivity:
        # a geodetic graph with minimum degree >= 3 must be 3-connected (2-connected when q = 2 affine)
        kappa, _ = minimum_vertex_cut(g)
        floor = 3 if g.min_degree >= 3 else 2
        add(Claim("connectivity lower bound", True, kappa >= floor))

    if all_roots is None:
        all_roots = q <= 4
    roots = _sample_roots(fg, all_roots)
    report.roots_checked = len(roots)
    mismatched: dict[str, list] = {"point": [], "flag": []}
    for r in roots:
        root_kind = fg.kind_of(r)
        prof = vertical_profile(g, r)
        if prof.heights != expected_heights(kind, q, root_kind):
            mismatched[root_kind].append([r, prof.heights])
    add(Claim("point-root heights", [], mismatched["point"]))
    add(Claim("flag-root heights", [], mismatched["flag"]))
    add(Claim("heights sum", expected_vertex_count(kind, q) - 1, sum(expected_heights(kind, q, "point"))))

    if kind == AFFINE:
        add(Claim("N5 of a flag root", [], _affine_far_sphere_mismatches(fg, roots)))
    return report


def _affine_far_sphere_mismatches(fg: LabeledGraph, roots: Sequence[int]) -> list:
    """Flag roots (p, L) whose 5-sphere is not {(y, l_y) : y off L, l_y parallel to L through y}."""
    s = fg.structure
    bad = []
    for r in roots:
        lab = fg.labels[r]
        if lab[0] != "flag":
            continue
        _, p, line = lab
        cls = next(c for c in s.parallel_classes if line in c)
        expected = set()
        for y in range(s.point_count):
            if y in s.line_sets[line]:
                continue
            ly = next(m for m in cls if y in s.line_sets[m])
            expected.add(fg.vertex(("flag", y, ly)))
        dist = bfs_layers(fg.graph, r).dist
        measured = {v for v, d in enumerate(dist) if d == 5}
        if measured != expected or len(expected) != s.q * (s.q - 1):
            bad.append(r)
    return bad


def flag_graph_for(kind: str, q: int) -> LabeledGraph:
    if kind not in (AFFINE, PROJECTIVE):
        raise GraphError(f"unknown plane kind {kind!r}")
    return flag_graph(build_plane(kind, q))
