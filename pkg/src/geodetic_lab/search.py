"""Graph sources (graph6 ingestion, enumeration) and census predicates."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from pathlib import Path
from typing import Iterable, Iterator

from .canon import canonical_graph, canonical_key
from .graph import INF, Graph, GraphError, build_graph, is_connected
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .records import CensusRecord, scan_records

log = logging.getLogger(__name__)

ENUMERATION_CAP = 10


class EnumerationError(GraphError):
    pass


# ---------------------------------------------------------------------------
# Sources
# ---------------------------------------------------------------------------


def ingest_graph6(path: str | Path) -> Iterator[tuple[Graph | None, str]]:
    """Yield ``(graph, provenance)`` per line; malformed lines yield ``(None, provenance)``."""
    path = Path(path)
    with path.open(encoding="ascii", errors="replace") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text:
                continue
            provenance = f"ingested:{path.name}:{lineno}"
            try:
                yield parse_graph6(text), provenance
            except Graph6Error as exc:
                log.warning("skipping %s: %s", provenance, exc)
                yield None, provenance


def write_graph6(graphs: Iterable[Graph], path: str | Path) -> int:
    count = 0
    with Path(path).open("w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")
            count += 1
    return count


def _extensions(g: Graph, min_new: int, max_degree: int | None) -> Iterator[Graph]:
    n = g.vertex_count
    open_slots = [v for v in range(n) if max_degree is None or g.degree(v) < max_degree]
    top = len(open_slots) if max_degree is None else min(len(open_slots), max_degree)
    for size in range(min_new, top + 1):
        for nbrs in combinations(open_slots, size):
            yield build_graph(n + 1, list(g.edges) + [(v, n) for v in nbrs])


@lru_cache(maxsize=None)
def _level(n: int, min_degree: int, max_degree: int | None, connected: bool) -> tuple[Graph, ...]:
    """Canonical representatives of all graphs on ``n`` vertices meeting the constraints.

    Every such graph loses a non-cut vertex and still satisfies
    ``min_degree - 1`` and ``max_degree``, so it arises by adding one vertex
    to a graph of the previous level.
    """
    if n == 0:
        return (build_graph(0, []),) if not connected and min_degree <= 0 else ()
    if n == 1:
        return (build_graph(1, []),) if min_degree <= 0 else ()
    parents = _level(n - 1, max(min_degree - 1, 0), max_degree, connected)
    seen: dict[tuple, Graph] = {}
    min_new = max(min_degree, 1 if connected else 0)
    for parent in parents:
        for child in _extensions(parent, min_new, max_degree):
            if child.min_degree < min_degree:
                continue
            key = canonical_key(child)
            if key not in seen:
                seen[key] = child
    return tuple(canonical_graph(g) for _, g in sorted(seen.items()))


def enumerate_graphs(
    n: int,
    min_degree: int = 0,
    connected: bool = True,
    regular_degree: int | None = None,
    max_degree: int | None = None,
) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices (``n <= 10``).

    Classes are deduplicated by canonical form; each graph is yielded in its
    canonical labelling, in a fixed order.
    """
    if n > ENUMERATION_CAP:
        raise EnumerationError(
            f"n={n} exceeds the enumerator cap of {ENUMERATION_CAP}; ingest an external graph6 corpus instead"
        )
    if n < 0:
        raise EnumerationError("n must be non-negative")
    if regular_degree is not None:
        min_degree = max(min_degree, regular_degree)
        max_degree = regular_degree if max_degree is None else min(max_degree, regular_degree)
    yield from _level(n, min_degree, max_degree, connected)


def enumerate_range(
    max_n: int, min_n: int = 1, **constraints
) -> Iterator[tuple[Graph, str]]:
    for n in range(min_n, max_n + 1):
        for g in enumerate_graphs(n, **constraints):
            yield g, "enumerated"


def _cubic_children(g: Graph) -> Iterator[Graph]:
    n = g.vertex_count
    edges = list(g.edges)
    a, b = n, n + 1
    # edge insertion: subdivide two distinct edges and join the new vertices
    for e1, e2 in combinations(edges, 2):
        rest = [e for e in edges if e != e1 and e != e2]
        yield build_graph(n + 2, rest + [(e1[0], a), (a, e1[1]), (e2[0], b), (b, e2[1]), (a, b)])


def _diamond_children(g: Graph) -> Iterator[Graph]:
    # diamond insertion: an edge u-v becomes u-a, a-{b, c}, b-c, {b, c}-d, d-v
    n = g.vertex_count
    edges = list(g.edges)
    a, b, c, d = range(n, n + 4)
    for e in edges:
        rest = [f for f in edges if f != e]
        yield build_graph(
            n + 4, rest + [(e[0], a), (a, b), (a, c), (b, c), (b, d), (c, d), (d, e[1])]
        )


def _disjoint_union(graphs: Iterable[Graph]) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return build_graph(offset, edges)


def _partitions(n: int, smallest: int) -> Iterator[list[int]]:
    # even parts >= smallest, non-decreasing, summing to n, at least two parts
    for first in range(smallest, n // 2 + 1, 2):
        rest = n - first
        if rest >= first:
            yield [first, rest]
            for tail in _partitions(rest, first):
                yield [first] + tail


def _disconnected_cubic(n: int) -> list[Graph]:
    out = []
    for parts in _partitions(n, 4):
        groups = []
        for size in sorted(set(parts)):
            groups.append(list(combinations_with_replacement(cubic_graphs(size), parts.count(size))))
        for choice in product(*groups):
            out.append(_disjoint_union(g for combo in choice for g in combo))
    return out


@lru_cache(maxsize=None)
def cubic_graphs(n: int) -> tuple[Graph, ...]:
    """Connected cubic graphs on ``n`` vertices, one per isomorphism class.

    Grown from K4 by edge insertion (from n - 2) and diamond insertion
    (from n - 4), deduplicated by canonical form.  Disconnected parents are
    included so that bridges can appear.  Used to write cubic corpora past
    the enumerator cap.
    """
    if n < 4 or n % 2:
        return ()
    if n == 4:
        return (canonical_graph(build_graph(4, combinations(range(4), 2))),)
    parents2 = list(cubic_graphs(n - 2)) + _disconnected_cubic(n - 2)
    parents4 = list(cubic_graphs(n - 4)) + _disconnected_cubic(n - 4)
    children = [c for g in parents2 for c in _cubic_children(g)]
    children += [c for g in parents4 for c in _diamond_children(g)]
    seen: dict[tuple, Graph] = {}
    for child in children:
        if not is_connected(child):
            continue
        key = canonical_key(child)
        if key not in seen:
            seen[key] = child
    return tuple(canonical_graph(g) for _, g in sorted(seen.items()))


# ---------------------------------------------------------------------------
# Census predicates
# ---------------------------------------------------------------------------


@dataclass
class CubicCensus:
    records: list[CensusRecord] = field(default_factory=list)
    scanned: int = 0
    skipped_non_cubic: int = 0
    skipped_malformed: int = 0


def _tag(source: Iterable) -> Iterator[tuple[Graph | None, str]]:
    for item in source:
        if isinstance(item, Graph):
            yield item, "enumerated"
        else:
            yield item


def cubic_geodetic_census(source: Iterable, jobs: int = 1) -> CubicCensus:
    """Records for the 2-connected geodetic members of a stream of cubic graphs."""
    out = CubicCensus()
    cubic: list[tuple[Graph, str]] = []
    for g, provenance in _tag(source):
        if g is None:
            out.skipped_malformed += 1
        elif g.vertex_count == 0 or g.min_degree != 3 or g.max_degree != 3:
            out.skipped_non_cubic += 1
        else:
            cubic.append((g, provenance))
    if out.skipped_non_cubic:
        log.warning("skipped %d non-cubic entries", out.skipped_non_cubic)
    for rec in scan_records(cubic, jobs=jobs):
        if rec is None:
            out.skipped_malformed += 1
            continue
        out.scanned += 1
        if rec.geodetic and rec.connectivity >= 2:
            out.records.append(rec)
    return out


@dataclass
class DiameterGirthSurvey:
    min_degree: int
    histogram: Counter = field(default_factory=Counter)
    exemplars: list[CensusRecord] = field(default_factory=list)
    max_diameter: int | None = None
    scanned: int = 0
    skipped: int = 0

    def rows(self) -> list[tuple[int, float, int]]:
        return sorted(
            ((d, gi, c) for (d, gi), c in self.histogram.items()),
            key=lambda r: (r[0], r[1]),
        )

    def to_tsv(self) -> str:
        lines = ["diameter\tgirth\tcount"]
        for d, gi, c in self.rows():
            lines.append(f"{d}\t{'inf' if gi == INF else int(gi)}\t{c}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "min_degree": self.min_degree,
            "scanned": self.scanned,
            "skipped": self.skipped,
            "max_diameter": self.max_diameter,
            "histogram": [
                {"diameter": d, "girth": None if gi == INF else int(gi), "count": c}
                for d, gi, c in self.rows()
            ],
            "exemplars": [r.to_dict() for r in self.exemplars],
        }


def diameter_girth_survey(source: Iterable, min_degree: int = 3, jobs: int = 1) -> DiameterGirthSurvey:
    """Histogram of (diameter, girth) over geodetic blocks with minimum degree >= ``min_degree``."""
    out = DiameterGirthSurvey(min_degree)
    for rec in scan_records(_tag(source), jobs=jobs):
        if rec is None:
            out.skipped += 1
            continue
        out.scanned += 1
        if not (rec.geodetic and rec.connectivity >= 2 and rec.min_degree >= min_degree):
            continue
        out.histogram[(rec.diameter, rec.girth)] += 1
        if out.max_diameter is None or rec.diameter > out.max_diameter:
            out.max_diameter = rec.diameter
            out.exemplars = [rec]
        elif rec.diameter == out.max_diameter:
            out.exemplars.append(rec)
    return out
