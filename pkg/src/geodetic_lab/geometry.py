"""Affine and projective planes over GF(q), with exhaustive axiom checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .fields import FiniteField, build_field

AFFINE = "affine"
PROJECTIVE = "projective"


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class IncidenceStructure:
    """Points, lines (as sorted point-id tuples) and, for affine planes, parallel classes.

    ``point_coords`` and ``line_coords`` record the coordinates each id was
    assigned from; ids follow their lexicographic order.
    """

    kind: str
    q: int
    point_coords: tuple[tuple[int, ...], ...]
    lines: tuple[tuple[int, ...], ...]
    line_coords: tuple[tuple[int, ...], ...] = ()
    parallel_classes: tuple[tuple[int, ...], ...] = ()

    @property
    def point_count(self) -> int:
        return len(self.point_coords)

    @property
    def line_count(self) -> int:
        return len(self.lines)

    @cached_property
    def lines_through(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.point_count)]
        for li, pts in enumerate(self.lines):
            for p in pts:
                out[p].append(li)
        return tuple(tuple(ls) for ls in out)

    @cached_property
    def line_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(pts) for pts in self.lines)

    @cached_property
    def flags(self) -> tuple[tuple[int, int], ...]:
        """Incident (point, line) pairs sorted by (line, point)."""
        return tuple((p, li) for li, pts in enumerate(self.lines) for p in pts)

    @cached_property
    def _joining(self) -> dict[tuple[int, int], int]:
        out = {}
        for li, pts in enumerate(self.lines):
            for a, b in combinations(pts, 2):
                out.setdefault((a, b), li)
        return out

    def incident(self, p: int, line: int) -> bool:
        return p in self.line_sets[line]

    def line_through(self, a: int, b: int) -> int:
        """The line joining two distinct points."""
        if a == b:
            raise GeometryError("a line through one point is not determined")
        return self._joining[(min(a, b), max(a, b))]

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "q": self.q,
            "points": [list(c) for c in self.point_coords],
            "lines": [list(pts) for pts in self.lines],
        }
        if self.kind == AFFINE:
            out["parallel_classes"] = [list(c) for c in self.parallel_classes]
        return out


def affine_plane(q: int) -> IncidenceStructure:
    """AG(2, q): points GF(q)^2, lines ``x = c`` and ``y = m x + b``.

    A line carries coordinates ``(slope, intercept)`` with the vertical
    slope encoded as ``q`` so it sorts after every field element.
    """
    F = build_field(q)
    coords = [(x, y) for x in range(q) for y in range(q)]
    pid = {c: i for i, c in enumerate(coords)}
    lines, line_coords = [], []
    for m in range(q + 1):
        for b in range(q):
            if m == q:
                pts = [pid[(b, y)] for y in range(q)]
            else:
                pts = [pid[(x, F.add(F.mul(m, x), b))] for x in range(q)]
            lines.append(tuple(sorted(pts)))
            line_coords.append((m, b))
    classes = tuple(tuple(range(m * q, (m + 1) * q)) for m in range(q + 1))
    return IncidenceStructure(AFFINE, q, tuple(coords), tuple(lines), tuple(line_coords), classes)


def _normalized_vectors(F: FiniteField) -> list[tuple[int, int, int]]:
    """Nonzero vectors of GF(q)^3 whose leftmost nonzero entry is 1, sorted."""
    q = F.q
    out = []
    for v in ((a, b, c) for a in range(q) for b in range(q) for c in range(q)):
        lead = next((x for x in v if x), None)
        if lead == 1:
            out.append(v)
    return out


def projective_plane(q: int) -> IncidenceStructure:
    """PG(2, q): points and lines are normalized vectors of GF(q)^3.

    A line with dual coordinates (a, b, c) holds the points with
    a x + b y + c z = 0.
    """
    F = build_field(q)
    vecs = _normalized_vectors(F)
    lines = []
    for a, b, c in vecs:
        pts = [
            i
            for i, (x, y, z) in enumerate(vecs)
            if F.add(F.add(F.mul(a, x), F.mul(b, y)), F.mul(c, z)) == 0
        ]
        lines.append(tuple(pts))
    return IncidenceStructure(PROJECTIVE, q, tuple(vecs), tuple(lines), tuple(vecs))


def build_plane(kind: str, q: int) -> IncidenceStructure:
    if kind == AFFINE:
        return affine_plane(q)
    if kind == PROJECTIVE:
        return projective_plane(q)
    raise GeometryError(f"unknown plane kind {kind!r}")


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass
class AxiomResult:
    name: str
    passed: bool
    counterexample: object = None

    def to_dict(self) -> dict:
        return {"axiom": self.name, "passed": self.passed, "counterexample": self.counterexample}


@dataclass
class ValidationReport:
    kind: str
    q: int
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        return next(r for r in self.results if r.name == name)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "q": self.q,
            "passed": self.passed,
            "axioms": [r.to_dict() for r in self.results],
        }


def _check_count(name: str, actual: int, expected: int) -> AxiomResult:
    return AxiomResult(name, actual == expected, None if actual == expected else {"actual": actual, "expected": expected})


def _check_uniform(name: str, sizes, expected: int) -> AxiomResult:
    for i, s in enumerate(sizes):
        if s != expected:
            return AxiomResult(name, False, {"index": i, "actual": s, "expected": expected})
    return AxiomResult(name, True)


def _two_points_one_line(s: IncidenceStructure) -> AxiomResult:
    through = [set(ls) for ls in s.lines_through]
    for a, b in combinations(range(s.point_count), 2):
        common = through[a] & through[b]
        if len(common) != 1:
            return AxiomResult("two points on one line", False, {"points": [a, b], "lines": sorted(common)})
    return AxiomResult("two points on one line", True)


def _two_lines_meet(s: IncidenceStructure) -> AxiomResult:
    for a, b in combinations(range(s.line_count), 2):
        common = s.line_sets[a] & s.line_sets[b]
        if len(common) != 1:
            return AxiomResult("two lines meet in one point", False, {"lines": [a, b], "points": sorted(common)})
    return AxiomResult("two lines meet in one point", True)


def _unique_parallel(s: IncidenceStructure) -> AxiomResult:
    for li, pts in enumerate(s.line_sets):
        for p in range(s.point_count):
            if p in pts:
                continue
            disjoint = [m for m in s.lines_through[p] if not (s.line_sets[m] & pts)]
            if len(disjoint) != 1:
                return AxiomResult("unique parallel", False, {"point": p, "line": li, "parallels": disjoint})
    return AxiomResult("unique parallel", True)


def _parallel_classes_partition(s: IncidenceStructure) -> AxiomResult:
    name = "parallel classes"
    q = s.q
    classes = s.parallel_classes
    if len(classes) != q + 1 or sorted(li for c in classes for li in c) != list(range(s.line_count)):
        return AxiomResult(name, False, {"class_count": len(classes)})
    for ci, cls in enumerate(classes):
        covered = set()
        for li in cls:
            if covered & s.line_sets[li]:
                return AxiomResult(name, False, {"class": ci, "line": li})
            covered |= s.line_sets[li]
        if len(covered) != s.point_count:
            return AxiomResult(name, False, {"class": ci, "covered": len(covered)})
    return AxiomResult(name, True)


def validate_plane(s: IncidenceStructure) -> ValidationReport:
    """Check every plane axiom exhaustively; failures carry a counterexample."""
    q = s.q
    report = ValidationReport(s.kind, q)
    r = report.results
    if s.kind == AFFINE:
        r.append(_check_count("point count", s.point_count, q * q))
        r.append(_check_count("line count", s.line_count, q * q + q))
        r.append(_check_uniform("lines per point", (len(x) for x in s.lines_through), q + 1))
        r.append(_check_uniform("points per line", (len(x) for x in s.lines), q))
        r.append(_two_points_one_line(s))
        r.append(_unique_parallel(s))
        r.append(_parallel_classes_partition(s))
    elif s.kind == PROJECTIVE:
        r.append(_check_count("point count", s.point_count, q * q + q + 1))
        r.append(_check_count("line count", s.line_count, q * q + q + 1))
        r.append(_check_uniform("lines per point", (len(x) for x in s.lines_through), q + 1))
        r.append(_check_uniform("points per line", (len(x) for x in s.lines), q + 1))
        r.append(_two_points_one_line(s))
        r.append(_two_lines_meet(s))
    else:
        raise GeometryError(f"unknown plane kind {s.kind!r}")
    return report


def parallel_class(s: IncidenceStructure, line: int) -> tuple[int, ...]:
    """The parallel class containing ``line`` (affine planes only)."""
    if s.kind != AFFINE:
        raise GeometryError("parallelism is only defined for affine planes")
    return next(c for c in s.parallel_classes if line in c)


def remove_line(s: IncidenceStructure, line: int) -> IncidenceStructure:
    """Delete a line of a projective plane together with its points.

    The surviving lines are restricted to the surviving points; for PG(2, q)
    the result has the parameters of AG(2, q).
    """
    lost = s.line_sets[line]
    renum = {old: i for i, old in enumerate(x for x in range(s.point_count) if x not in lost)}
    lines = tuple(
        tuple(renum[x] for x in pts if x in renum)
        for li, pts in enumerate(s.lines)
        if li != line
    )
    coords = tuple(c for i, c in enumerate(s.point_coords) if i in renum)
    return IncidenceStructure("residual", s.q, coords, lines)
