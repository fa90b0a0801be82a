"""Per-graph census records and the ordered parallel scan pipeline."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Iterator, TypeVar

from .canon import canonical_graph6
from .geodesy import is_geodetic_sigma
from .graph import INF, Graph, eccentricities, girth, is_connected, vertex_connectivity
from .graph6 import emit_graph6

# Canonical labelling is skipped above this size; the record keeps the input encoding.
CANON_LIMIT = 40

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    canonical: bool
    n: int
    m: int
    min_degree: int
    connectivity: int
    diameter: int
    radius: int
    girth: float
    geodetic: bool
    self_centered: bool
    provenance: str

    def to_dict(self) -> dict:
        out = asdict(self)
        out["girth"] = None if self.girth == INF else int(self.girth)
        return out


def census_record(g: Graph, provenance: str = "enumerated") -> CensusRecord:
    if g.vertex_count < 2 or not is_connected(g):
        raise ValueError("census records need a connected graph on at least two vertices")
    ecc = eccentricities(g)
    canonical = g.vertex_count <= CANON_LIMIT
    diameter, radius = max(ecc), min(ecc)
    return CensusRecord(
        graph6=canonical_graph6(g) if canonical else emit_graph6(g),
        canonical=canonical,
        n=g.vertex_count,
        m=g.edge_count,
        min_degree=g.min_degree,
        connectivity=vertex_connectivity(g),
        diameter=diameter,
        radius=radius,
        girth=girth(g),
        geodetic=is_geodetic_sigma(g, with_witness=False).geodetic,
        self_centered=diameter == radius,
        provenance=provenance,
    )


def _safe_record(item: tuple[Graph | None, str]) -> CensusRecord | None:
    g, provenance = item
    if g is None:
        return None
    try:
        return census_record(g, provenance)
    except ValueError:
        return None


def default_jobs() -> int:
    return os.cpu_count() or 1


def ordered_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1, chunksize: int = 16) -> Iterator[R]:
    """Map over ``items`` with a worker pool; results come back in input order."""
    if jobs <= 1:
        yield from map(func, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(func, items, chunksize=chunksize)


def scan_records(corpus: Iterable[tuple[Graph, str]], jobs: int = 1) -> Iterator[CensusRecord | None]:
    """One record per ``(graph, provenance)`` pair; ``None`` for entries that cannot be scanned."""
    return ordered_map(_safe_record, corpus, jobs=jobs)
