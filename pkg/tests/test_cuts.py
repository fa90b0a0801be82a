import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodetic_lab.cuts import (
    HOLDS,
    LEMMAS,
    VIOLATED,
    NotACutError,
    StaleProfileError,
    Theorem1Survey,
    check_cut_lemmas,
    cut_profile,
    is_theorem1_counterexample,
    min_distance_two_cut,
    replay_antipodal_witness,
    survey_from_records,
    theorem1_scan,
)
from geodetic_lab.graph import build_graph, vertex_connectivity
from geodetic_lab.records import census_record
from helpers import cycle, petersen, random_connected

TWO_TRIANGLES = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4)])


def test_min_distance_cut():
    cut = min_distance_two_cut(TWO_TRIANGLES)
    assert (cut.x, cut.y, cut.ell) == (0, 1, 1)
    assert min_distance_two_cut(petersen()) is None


def test_profile_coordinates():
    g = cycle(8)
    p = cut_profile(g, 0, 4)
    assert p.ell == 4 and p.k == 2
    assert p.path == [0, 1, 2, 3, 4]
    assert p.phi[0] == (0, 4) and p.phi[4] == (4, 0)
    # the geodesic's interior is on A1 and keeps its distance coordinates
    assert p.phi[2] == (2, 2)
    # vertex 6 sits opposite, mirrored into the same strip
    assert p.phi[6] == (2, 2)
    assert p.right[0] == [2] and p.left[0] == [6]


def test_profile_grid():
    text = cut_profile(cycle(6), 0, 3).diagonal_grid()
    rows = text.splitlines()
    assert rows[0].split() == ["j", "R", "L"]
    assert len(rows) == 1 + 7


def test_not_a_cut():
    with pytest.raises(NotACutError):
        cut_profile(petersen(), 0, 1)
    with pytest.raises(NotACutError):
        cut_profile(cycle(5), 2, 2)


def test_stale_profile():
    p = cut_profile(cycle(6), 0, 3)
    with pytest.raises(StaleProfileError):
        check_cut_lemmas(cycle(8), p)


def test_antipodal_witness_on_even_cycle():
    g = cycle(6)
    report = check_cut_lemmas(g, cut_profile(g, 0, 3))
    r = report["antipodal-emptiness"]
    assert r.status == VIOLATED
    assert replay_antipodal_witness(g, r.witness)
    assert not report.asserted("antipodal-emptiness")  # C6 is not geodetic
    assert report.asserted_violations == []


def test_odd_cycle_lemmas_hold():
    g = cycle(7)
    report = check_cut_lemmas(g, cut_profile(g, 0, 3))
    assert report.geodetic
    assert report["antipodal-emptiness"].status == HOLDS
    assert report.asserted_violations == []


def test_report_json_order():
    g = cycle(5)
    d = check_cut_lemmas(g, cut_profile(g, 0, 2)).to_dict()
    assert [x["lemma"] for x in d["lemmas"]] == list(LEMMAS)


@settings(max_examples=150, deadline=None)
@given(st.integers(4, 14), st.integers(0, 2**32 - 1))
def test_unconditional_lemmas_on_random_graphs(n, seed):
    g = random_connected(random.Random(seed), n, 0.15)
    if vertex_connectivity(g) >= 3:
        return
    cut = min_distance_two_cut(g)
    if cut is None:
        return
    report = check_cut_lemmas(g, cut_profile(g, cut.x, cut.y))
    assert report["phi-contraction"].status == HOLDS
    assert report["neighbor-jump"].status == HOLDS
    if report.geodetic:
        assert report["antipodal-emptiness"].status == HOLDS
    if report["antipodal-emptiness"].status == VIOLATED:
        assert replay_antipodal_witness(g, report["antipodal-emptiness"].witness)


def test_theorem1_scan_small():
    corpus = [(cycle(n), "enumerated") for n in range(3, 8)] + [(petersen(), "enumerated"), (None, "bad")]
    survey = theorem1_scan(corpus)
    assert survey.scanned == 6 and survey.skipped == 1
    assert survey.counterexamples == []
    # odd cycles and Petersen are the geodetic blocks here
    assert sum(survey.geodetic_blocks.values()) == 4


def test_counterexample_predicate():
    rec = census_record(petersen())
    assert not is_theorem1_counterexample(rec)
    fake = rec.__class__(**{**rec.__dict__, "connectivity": 2})
    assert is_theorem1_counterexample(fake)
    survey = survey_from_records([fake, None])
    assert survey.counterexamples == [fake]


def test_survey_merge():
    a = survey_from_records([census_record(cycle(5))])
    b = survey_from_records([census_record(petersen()), None])
    m = a.merge(b)
    assert (m.scanned, m.skipped, len(m.records)) == (2, 1, 2)
    assert isinstance(m, Theorem1Survey)
    assert m.to_dict()["geodetic_blocks"][0]["n"] == 5
