"""Command-line entry point.

Exit codes: 0 success, 1 a checked claim failed or a counterexample was
found, 2 usage or infrastructure error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence, TextIO

from .cuts import check_cut_lemmas, cut_profile, min_distance_two_cut, theorem1_scan
from .fields import FieldError, build_field
from .flags import flag_graph, levi_graph, verify_flag_claims
from .geodesy import is_geodetic_sigma, is_geodetic_vertical
from .geometry import AFFINE, PROJECTIVE, GeometryError, build_plane, validate_plane
from .graph import INF, Graph, GraphError, eccentricities, girth, is_connected
from .graph6 import Graph6Error, parse_graph6, read_graph6
from .records import default_jobs
from .search import (
    ENUMERATION_CAP,
    cubic_geodetic_census,
    cubic_graphs,
    diameter_girth_survey,
    enumerate_graphs,
    enumerate_range,
    ingest_graph6,
)

log = logging.getLogger("geodetic_lab")

OK, CLAIM_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    kind: str | None = None
    q: int | None = None
    target: str | None = None
    in_path: str | None = None
    out_path: str | None = None
    out_format: str | None = None
    checker: str = "both"
    as_json: bool = False
    jobs: int = 1
    verbosity: int = 0
    all_roots: bool = False
    x: int | None = None
    y: int | None = None
    enumerate: int | None = None
    predicate: str | None = None
    min_degree: int | None = None
    max_n: int | None = None


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _pretty(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(text: str, out_path: str | None, stdout: TextIO) -> None:
    if out_path is None or out_path == "-":
        stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="ascii")


def _read_graphs(path: str) -> Iterator[tuple[int, Graph]]:
    """Graphs from a graph6 file (``-`` for stdin); malformed lines are usage errors."""
    stream = sys.stdin if path == "-" else None
    try:
        fh = stream or open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    with fh:
        for lineno, text in read_graph6(fh):
            try:
                yield lineno, parse_graph6(text)
            except Graph6Error as exc:
                raise UsageError(f"{path}:{lineno}: {exc}") from exc


def _validate_q(q: int) -> None:
    try:
        build_field(q)
    except FieldError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_construct(cfg: RunConfig, stdout: TextIO) -> int:
    _validate_q(cfg.q)
    plane = build_plane(cfg.kind, cfg.q)
    fmt = cfg.out_format or ("json" if cfg.target == "plane" else "g6")
    if cfg.target == "plane":
        if fmt != "json":
            raise UsageError("planes can only be written as json")
        _write(_pretty(plane.to_dict()), cfg.out_path, stdout)
        return OK
    lg = levi_graph(plane) if cfg.target == "levi" else flag_graph(plane)
    if fmt == "g6":
        text = lg.to_graph6() + "\n"
    elif fmt == "dot":
        text = lg.to_dot(f"{cfg.target}_{cfg.kind}_{cfg.q}")
    else:
        text = _pretty(
            {
                "graph": cfg.target,
                "kind": cfg.kind,
                "q": cfg.q,
                "n": lg.graph.vertex_count,
                "m": lg.graph.edge_count,
                "graph6": lg.to_graph6(),
                "labels": [list(lab) for lab in lg.labels],
            }
        )
    _write(text, cfg.out_path, stdout)
    log.info("%s graph of %s plane q=%d: %d vertices", cfg.target, cfg.kind, cfg.q, lg.graph.vertex_count)
    return OK


def _check_one(lineno: int, g: Graph, checker: str) -> dict:
    entry: dict = {"line": lineno, "n": g.vertex_count, "m": g.edge_count}
    if g.vertex_count == 0 or not is_connected(g):
        raise UsageError(f"line {lineno}: geodeticity checks need a connected graph")
    sigma = vertical = None
    witness = None
    if checker in ("sigma", "both"):
        verdict = is_geodetic_sigma(g)
        sigma = verdict.geodetic
        if verdict.witness is not None:
            witness = verdict.witness.to_dict()
    if checker in ("vertical", "both"):
        vertical = is_geodetic_vertical(g)
    ecc = eccentricities(g)
    gi = girth(g)
    entry.update(
        sigma=sigma,
        vertical=vertical,
        geodetic=sigma if sigma is not None else vertical,
        agree=None if checker != "both" else sigma == vertical,
        diameter=max(ecc),
        radius=min(ecc),
        girth=None if gi == INF else int(gi),
        witness=witness,
    )
    return entry


def cmd_check(cfg: RunConfig, stdout: TextIO) -> int:
    entries = [_check_one(lineno, g, cfg.checker) for lineno, g in _read_graphs(cfg.in_path)]
    if not entries:
        raise UsageError(f"{cfg.in_path}: no graphs")
    disagree = any(e["agree"] is False for e in entries)
    if cfg.as_json:
        stdout.write(_pretty({"checker": cfg.checker, "graphs": entries, "checkers_agree": not disagree}))
    else:
        for e in entries:
            verdict = "geodetic" if e["geodetic"] else "not geodetic"
            parts = [f"line {e['line']}: n={e['n']} m={e['m']}", verdict, f"diameter {e['diameter']}"]
            if e["agree"] is not None:
                parts.append("checkers agree" if e["agree"] else "CHECKERS DISAGREE")
            if e["witness"] is not None:
                w = e["witness"]
                parts.append(f"witness {w['u']}-{w['v']}: {w['path_a']} vs {w['path_b']}")
            stdout.write(", ".join(parts) + "\n")
    return CLAIM_FAILED if disagree else OK


def cmd_verify_claims(cfg: RunConfig, stdout: TextIO) -> int:
    _validate_q(cfg.q)
    axioms = validate_plane(build_plane(cfg.kind, cfg.q))
    report = verify_flag_claims(cfg.kind, cfg.q, all_roots=True if cfg.all_roots else None)
    passed = axioms.passed and report.passed
    stdout.write(_pretty({"passed": passed, "plane": axioms.to_dict(), "flag_graph": report.to_dict()}))
    return OK if passed else CLAIM_FAILED


def cmd_analyze_cut(cfg: RunConfig, stdout: TextIO) -> int:
    graphs = list(_read_graphs(cfg.in_path))
    if not graphs:
        raise UsageError(f"{cfg.in_path}: no graphs")
    _, g = graphs[0]
    if not is_connected(g):
        raise UsageError("analyze-cut needs a connected graph")
    if cfg.x is None:
        cut = min_distance_two_cut(g)
        if cut is None:
            result = {"cut": None, "profile": None, "lemmas": None}
            stdout.write(_pretty(result) if cfg.as_json else "no 2-cut: the graph is 3-connected or complete\n")
            return OK
        x, y = cut.x, cut.y
    else:
        x, y = cfg.x, cfg.y
        if not (0 <= x < g.vertex_count and 0 <= y < g.vertex_count):
            raise UsageError("--x/--y out of range")
    profile = cut_profile(g, x, y)
    report = check_cut_lemmas(g, profile)
    failed = report.asserted_violations
    if cfg.as_json:
        stdout.write(
            _pretty(
                {
                    "cut": [profile.x, profile.y],
                    "profile": profile.to_dict(),
                    "lemmas": report.to_dict(),
                    "asserted_violations": failed,
                }
            )
        )
    else:
        stdout.write(f"cut {{{profile.x}, {profile.y}}} at distance {profile.ell}, {profile.k} components\n")
        stdout.write(f"geodesic {profile.path}; geodetic basis: {report.geodetic}\n")
        stdout.write(profile.diagonal_grid())
        for name, r in report.results.items():
            tag = "" if report.asserted(name) else " (hypotheses not met)"
            stdout.write(f"{name}: {r.status}{tag}\n")
    return CLAIM_FAILED if failed else OK


def _scan_source(cfg: RunConfig):
    if cfg.in_path is not None:
        return ingest_graph6(cfg.in_path)
    n = cfg.enumerate
    if n > ENUMERATION_CAP:
        raise UsageError(f"--enumerate {n} exceeds the cap of {ENUMERATION_CAP}; ingest a graph6 corpus")
    if cfg.predicate == "cubic-geodetic-census":
        return enumerate_range(n, min_n=4, regular_degree=3)
    return enumerate_range(n, min_n=2, min_degree=cfg.min_degree or 0)


def _summary(stderr: TextIO, **counts) -> None:
    stderr.write(" ".join(f"{k}={v}" for k, v in counts.items()) + "\n")


def cmd_scan(cfg: RunConfig, stdout: TextIO, stderr: TextIO) -> int:
    if cfg.in_path is not None and not Path(cfg.in_path).is_file():
        raise UsageError(f"cannot read {cfg.in_path}")
    source = _scan_source(cfg)
    if cfg.predicate == "theorem1":
        if cfg.min_degree is not None:
            source = ((g, p) for g, p in source if g is None or g.min_degree >= cfg.min_degree)
        survey = theorem1_scan(source, jobs=cfg.jobs)
        for rec in survey.counterexamples:
            stdout.write(_dumps(rec.to_dict()) + "\n")
        _summary(stderr, scanned=survey.scanned, skipped=survey.skipped, counterexamples=len(survey.counterexamples))
        return CLAIM_FAILED if survey.counterexamples else OK
    if cfg.predicate == "cubic-geodetic-census":
        census = cubic_geodetic_census(source, jobs=cfg.jobs)
        for rec in census.records:
            stdout.write(_dumps(rec.to_dict()) + "\n")
        _summary(
            stderr,
            scanned=census.scanned,
            geodetic_blocks=len(census.records),
            skipped_non_cubic=census.skipped_non_cubic,
            skipped_malformed=census.skipped_malformed,
        )
        return OK
    survey = diameter_girth_survey(source, min_degree=3 if cfg.min_degree is None else cfg.min_degree, jobs=cfg.jobs)
    stdout.write(survey.to_tsv())
    for rec in survey.exemplars:
        stderr.write("exemplar " + _dumps(rec.to_dict()) + "\n")
    _summary(stderr, scanned=survey.scanned, skipped=survey.skipped, max_diameter=survey.max_diameter)
    return OK


def cmd_census(cfg: RunConfig, stdout: TextIO, stderr: TextIO) -> int:
    def source():
        for n in range(4, cfg.max_n + 1, 2):
            graphs = enumerate_graphs(n, regular_degree=3) if n <= ENUMERATION_CAP else cubic_graphs(n)
            for g in graphs:
                yield g, "enumerated" if n <= ENUMERATION_CAP else "generated"

    if cfg.max_n < 4:
        raise UsageError("--max-n must be at least 4")
    census = cubic_geodetic_census(source(), jobs=cfg.jobs)
    for rec in census.records:
        stdout.write(_dumps(rec.to_dict()) + "\n")
    _summary(stderr, scanned=census.scanned, geodetic_blocks=len(census.records))
    return OK


# ---------------------------------------------------------------------------
# Parsing and dispatch
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="geodetic-lab", description="Geodetic graph constructions, checks and scans.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    kinds = (AFFINE, PROJECTIVE)

    p = sub.add_parser("construct", help="build a plane, its Levi graph or its Flag graph")
    p.add_argument("target", choices=("plane", "levi", "flag"))
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("g6", "dot", "json"))

    p = sub.add_parser("check", help="decide geodeticity of graph6 input")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--checker", choices=("sigma", "vertical", "both"), default="both")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-claims", help="check plane axioms and Flag graph closed forms")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--all-roots", action="store_true")

    p = sub.add_parser("analyze-cut", help="profile a minimal 2-cut and evaluate the cut lemmas")
    p.add_argument("--in", dest="in_path", required=True)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("scan", help="run a predicate over a corpus")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--in", dest="in_path")
    src.add_argument("--enumerate", type=int)
    p.add_argument("--predicate", choices=("theorem1", "cubic-geodetic-census", "diameter-girth"), required=True)
    p.add_argument("--min-degree", type=int)
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("census", help="cubic geodetic census over generated graphs")
    p.add_argument("--max-n", type=int, required=True)
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    cmd = ns.command
    if cmd in ("analyze-cut",) and (ns.x is None) != (ns.y is None):
        raise UsageError("--x and --y must be given together")
    jobs = 1
    if cmd == "scan":
        jobs = default_jobs() if ns.jobs is None else ns.jobs
        if jobs < 1:
            raise UsageError("--jobs must be positive")
    extras = {
        name: getattr(ns, name)
        for name in ("all_roots", "x", "y", "enumerate", "predicate", "min_degree", "max_n")
        if hasattr(ns, name)
    }
    return RunConfig(
        command=cmd,
        kind=getattr(ns, "kind", None),
        q=getattr(ns, "q", None),
        target=getattr(ns, "target", None),
        in_path=getattr(ns, "in_path", None),
        out_path=getattr(ns, "out", None),
        out_format=getattr(ns, "format", None),
        checker=getattr(ns, "checker", "both"),
        as_json=getattr(ns, "json", False),
        jobs=jobs,
        verbosity=ns.verbose,
        **extras,
    )


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
        cfg = _config(ns)
        logging.basicConfig(
            level=logging.WARNING - 10 * min(cfg.verbosity, 2), format="%(levelname)s %(message)s", stream=stderr
        )
        if cfg.command == "construct":
            return cmd_construct(cfg, stdout)
        if cfg.command == "check":
            return cmd_check(cfg, stdout)
        if cfg.command == "verify-claims":
            return cmd_verify_claims(cfg, stdout)
        if cfg.command == "analyze-cut":
            return cmd_analyze_cut(cfg, stdout)
        if cfg.command == "scan":
            return cmd_scan(cfg, stdout, stderr)
        return cmd_census(cfg, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return USAGE
    except (GraphError, GeometryError, FieldError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return USAGE
    except SystemExit as exc:  # --help
        return OK if exc.code in (0, None) else USAGE


def main() -> None:
    sys.exit(run())
