import io
import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodetic_lab.canon import canonical_graph, canonical_graph6, canonical_key, canonical_order, relabel
from geodetic_lab.graph import INF, build_graph
from geodetic_lab.graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6
from geodetic_lab.records import CensusRecord, census_record, ordered_map, scan_records
from geodetic_lab.search import (
    EnumerationError,
    cubic_geodetic_census,
    cubic_graphs,
    diameter_girth_survey,
    enumerate_graphs,
    enumerate_range,
    ingest_graph6,
    write_graph6,
)
from helpers import complete, cycle, from_nx, petersen, random_connected, to_nx

# connected graphs on n vertices, n = 1..8 (OEIS A001349)
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853, 11117]
# connected cubic graphs on n = 4, 6, ..., 14 vertices (OEIS A002851)
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def random_graph(rng, n, p):
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


class TestGraph6:
    def test_known_strings(self):
        assert emit_graph6(complete(4)) == "C~"
        assert emit_graph6(build_graph(0, [])) == "?"
        assert parse_graph6("C~").edge_count == 6

    def test_matches_networkx(self):
        rng = random.Random(2)
        for n in list(range(0, 12)) + [62, 63, 100]:
            g = random_graph(rng, n, 0.3)
            ours = emit_graph6(g)
            theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert ours == theirs
            assert parse_graph6(ours) == g

    def test_header_is_stripped(self):
        assert parse_graph6(">>graph6<<C~") == complete(4)

    @pytest.mark.parametrize(
        "text", ["", "C", "C~~", "C\x7f", "~~??????", "C ~"]
    )
    def test_malformed(self, text):
        with pytest.raises(Graph6Error):
            parse_graph6(text)

    def test_nonzero_padding(self):
        # n=2 has one edge bit; the other five bits of the byte must be zero
        with pytest.raises(Graph6Error):
            parse_graph6("A" + chr(63 + 0b100001))

    def test_read_stream(self):
        assert list(read_graph6(io.StringIO("C~\n\n A_ \n"))) == [(1, "C~"), (3, "A_")]


class TestCanon:
    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 14), st.integers(0, 2**32 - 1))
    def test_relabel_invariance(self, n, seed):
        rng = random.Random(seed)
        g = random_graph(rng, n, rng.uniform(0.1, 0.9))
        perm = list(range(n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_key(g) == canonical_key(h)
        assert canonical_graph(g) == canonical_graph(h)

    def test_distinguishes_against_networkx(self):
        rng = random.Random(9)
        graphs = [random_graph(rng, 7, 0.4) for _ in range(150)]
        for a in graphs[:60]:
            for b in graphs[60:]:
                same = canonical_key(a) == canonical_key(b)
                assert same == nx.is_isomorphic(to_nx(a), to_nx(b))

    def test_symmetric_graphs_are_fast(self):
        for g in (complete(30), build_graph(30, []), cycle(30), petersen()):
            order = canonical_order(g)
            assert sorted(order) == list(range(g.vertex_count))

    def test_canonical_graph6(self):
        assert canonical_graph6(cycle(5)) == canonical_graph6(relabel(cycle(5), [3, 1, 4, 0, 2]))


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_counts(self, n):
        assert sum(1 for _ in enumerate_graphs(n)) == CONNECTED_COUNTS[n - 1]

    def test_n8_count(self, corpus8):
        assert sum(1 for g in corpus8 if g.vertex_count == 8) == CONNECTED_COUNTS[7]

    def test_matches_graph_atlas(self, corpus7):
        # the atlas lists every graph on up to 7 vertices exactly once
        atlas = Counter()
        for h in nx.graph_atlas_g()[1:]:
            if nx.is_connected(h):
                atlas[canonical_key(from_nx(h))] += 1
        ours = Counter(canonical_key(g) for g in corpus7)
        ours[canonical_key(build_graph(1, []))] += 1
        assert ours == atlas

    def test_constraints(self):
        atlas_6 = sum(
            1
            for h in nx.graph_atlas_g()
            if h.number_of_nodes() == 6 and nx.is_connected(h) and min(d for _, d in h.degree()) >= 3
        )
        assert sum(1 for _ in enumerate_graphs(6, min_degree=3)) == atlas_6
        assert [g.edge_count for g in enumerate_graphs(8, regular_degree=3)] == [12] * 5
        assert sum(1 for _ in enumerate_graphs(4, connected=False)) == 11
        assert all(g.max_degree <= 2 for g in enumerate_graphs(7, max_degree=2))

    def test_cap(self):
        with pytest.raises(EnumerationError):
            list(enumerate_graphs(11))

    def test_enumerate_range(self):
        items = list(enumerate_range(4))
        assert len(items) == sum(CONNECTED_COUNTS[:4])
        assert {p for _, p in items} == {"enumerated"}

    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
    def test_cubic_generator(self, n):
        graphs = cubic_graphs(n)
        assert len(graphs) == CUBIC_COUNTS[n]
        assert all(g.min_degree == g.max_degree == 3 for g in graphs)
        assert len({canonical_key(g) for g in graphs}) == len(graphs)

    def test_cubic_generator_matches_enumerator(self):
        for n in (4, 6, 8, 10):
            ours = {canonical_key(g) for g in cubic_graphs(n)}
            assert ours == {canonical_key(g) for g in enumerate_graphs(n, regular_degree=3)}

    def test_cubic_corpus_file(self):
        from pathlib import Path

        path = Path(__file__).parent / "data" / "cubic_le14.g6"
        sizes = Counter(g.vertex_count for g, _ in ingest_graph6(path))
        assert dict(sizes) == CUBIC_COUNTS


class TestRecords:
    def test_petersen_record(self):
        rec = census_record(petersen(), "test")
        assert (rec.n, rec.m, rec.connectivity, rec.diameter, rec.girth, rec.geodetic) == (10, 15, 3, 2, 5, True)
        assert rec.self_centered and rec.canonical
        d = rec.to_dict()
        assert set(d) == set(CensusRecord.__dataclass_fields__)

    def test_tree_girth_serializes_as_null(self):
        rec = census_record(build_graph(3, [(0, 1), (1, 2)]))
        assert rec.girth == INF and rec.to_dict()["girth"] is None

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            census_record(build_graph(2, []))

    def test_parallel_order_is_preserved(self):
        graphs = [(cycle(n), f"c{n}") for n in range(3, 30)]
        serial = list(scan_records(graphs, jobs=1))
        parallel = list(scan_records(graphs, jobs=2))
        assert serial == parallel
        assert list(ordered_map(abs, range(-5, 5), jobs=2, chunksize=3)) == [abs(x) for x in range(-5, 5)]


class TestIngest:
    def test_malformed_lines_are_skipped(self, tmp_path):
        path = tmp_path / "mixed.g6"
        path.write_text("C~\nnot graph6 at all\n\nI@OZCMgs?\n")
        items = list(ingest_graph6(path))
        assert [p for _, p in items] == ["ingested:mixed.g6:1", "ingested:mixed.g6:2", "ingested:mixed.g6:4"]
        assert items[1][0] is None

    def test_round_trip(self, tmp_path):
        path = tmp_path / "out.g6"
        graphs = [cycle(5), petersen()]
        assert write_graph6(graphs, path) == 2
        assert [g for g, _ in ingest_graph6(path)] == graphs


class TestSurveys:
    def test_cubic_census_small(self, tmp_path):
        path = tmp_path / "c.g6"
        write_graph6([g for n in (4, 6, 8, 10) for g in cubic_graphs(n)] + [cycle(5)], path)
        path.write_text(path.read_text() + "garbage\n")
        census = cubic_geodetic_census(ingest_graph6(path))
        assert [r.n for r in census.records] == [4, 10]
        assert census.skipped_non_cubic == 1 and census.skipped_malformed == 1
        assert census.scanned == 27

    def test_diameter_girth(self):
        source = [cycle(5), cycle(7), petersen(), complete(4), complete(5)]
        survey = diameter_girth_survey(source, min_degree=2)
        assert survey.rows() == [(1, 3, 2), (2, 5, 2), (3, 7, 1)]
        assert survey.max_diameter == 3
        assert survey.to_tsv().splitlines()[0] == "diameter\tgirth\tcount"
        assert diameter_girth_survey(source).rows() == [(1, 3, 2), (2, 5, 1)]
