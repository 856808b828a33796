import json

import pytest

from rookorder import (
    OneLine,
    VerificationReport,
    build_hasse,
    export_dot,
    export_json,
    hasse_from_json,
    interval,
    length,
    rank_sizes,
    verify,
)

from helpers import deodhar_matrix, elements_of

R2_EDGES = [(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 6), (5, 6)]


def test_hasse_r1():
    h = build_hasse(1)
    assert [(node[1].entries, node[2]) for node in h.nodes] == [((0,), 0), ((1,), 1)]
    assert h.edges == ((0, 1),)


def test_hasse_r2():
    h = build_hasse(2)
    assert len(h.nodes) == 7
    assert list(h.edges) == R2_EDGES
    assert [node[1].entries for node in h.nodes] == [
        (0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1),
    ]


def test_hasse_node_ids_and_lengths():
    h = build_hasse(3)
    for ident, el, ln in h.nodes:
        assert h.nodes[ident][0] == ident
        assert ln == length(el)


def test_hasse_rejects_out_of_range():
    with pytest.raises(ValueError):
        build_hasse(0)
    with pytest.raises(ValueError):
        build_hasse(6)


def test_hasse_deterministic():
    a, b = build_hasse(3), build_hasse(3)
    assert a == b
    assert export_json(a) == export_json(b)
    assert export_dot(a) == export_dot(b)


def test_rank_sizes():
    assert rank_sizes(build_hasse(1)) == [1, 1]
    assert rank_sizes(build_hasse(2)) == [1, 1, 2, 2, 1]
    sizes3 = rank_sizes(build_hasse(3))
    assert len(sizes3) == 10
    assert sum(sizes3) == 34
    assert sizes3[0] == sizes3[-1] == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hasse_is_graded_with_full_chain(n):
    h = build_hasse(n)
    for lo, hi in h.edges:
        assert h.nodes[hi][2] == h.nodes[lo][2] + 1
    # longest chain climbs one length step at a time from 0 to n^2
    depth = [0] * len(h.nodes)
    for lo, hi in h.edges:  # edges arrive sorted, sources before targets
        depth[hi] = max(depth[hi], depth[lo] + 1)
    assert max(depth) == n * n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_edge_reachability_recovers_order(n):
    h = build_hasse(n)
    els = elements_of(n)
    rows = deodhar_matrix(n)
    up = [1 << i for i in range(len(els))]
    for lo, hi in sorted(h.edges, key=lambda e: h.nodes[e[1]][2], reverse=True):
        up[lo] |= up[hi]
    assert up == list(rows)


def test_interval_single_point():
    h = build_hasse(2)
    x = OneLine((1, 2))
    sub = interval(h, x, x)
    assert len(sub.nodes) == 1
    assert sub.edges == ()
    assert sub.nodes[0][1] == x


def test_interval_full_r2():
    h = build_hasse(2)
    sub = interval(h, OneLine((0, 0)), OneLine((2, 1)))
    assert len(sub.nodes) == 7
    assert list(sub.edges) == R2_EDGES


def test_interval_proper():
    h = build_hasse(2)
    sub = interval(h, OneLine((0, 1)), OneLine((2, 1)))
    members = {node[1].entries for node in sub.nodes}
    assert (0, 0) not in members
    assert (2, 1) in members
    for lo, hi in sub.edges:
        assert sub.nodes[hi][2] == sub.nodes[lo][2] + 1


def test_interval_rejects_bad_endpoints():
    h = build_hasse(2)
    with pytest.raises(ValueError):
        interval(h, OneLine((2, 0)), OneLine((1, 2)))  # incomparable
    with pytest.raises(ValueError):
        interval(h, OneLine((1, 2)), OneLine((0, 0)))  # wrong way round
    with pytest.raises(ValueError):
        interval(h, OneLine((1, 2, 3)), OneLine((3, 2, 1)))  # not members


def test_json_round_trip():
    h = build_hasse(2)
    payload = export_json(h)
    data = json.loads(payload)
    assert data["n"] == 2
    assert len(data["nodes"]) == 7
    assert data["nodes"][1] == {"id": 1, "oneline": "0,1", "length": 1}
    assert sorted(map(tuple, data["edges"])) == R2_EDGES
    assert payload.endswith("\n")
    assert hasse_from_json(payload) == h


def test_dot_output_shape():
    h = build_hasse(2)
    dot = export_dot(h)
    lines = dot.splitlines()
    assert lines[0] == "digraph rook_order_2 {"
    assert lines[-1] == "}"
    assert sum(1 for l in lines if "->" in l) == len(h.edges)
    assert 'label="0,1 (1)"' in dot


def test_verify_small_exhaustive():
    r1 = verify(1)
    assert r1.passed
    assert r1.mode == "exhaustive"
    assert r1.pairs_checked == 4
    r2 = verify(2)
    assert r2.passed
    assert r2.pairs_checked == 49
    assert r2.mismatches == []
    assert r2.cover_mismatches == []
    assert r2.oracle_mismatches == []


def test_verify_sampled():
    r = verify(2, mode="sampled", sample_count=500, seed=7)
    assert r.passed
    assert r.mode == "sampled"
    assert r.seed == 7
    assert r.pairs_checked == 500


def test_verify_sampled_is_seed_deterministic():
    a = verify(3, mode="sampled", sample_count=200, seed=11)
    b = verify(3, mode="sampled", sample_count=200, seed=11)
    assert a.to_dict()["pairs_checked"] == b.to_dict()["pairs_checked"]
    assert a.passed and b.passed


def test_verify_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify(5, mode="exhaustive")
    with pytest.raises(ValueError):
        verify(2, mode="spot")
    with pytest.raises(ValueError):
        verify(0)
    with pytest.raises(ValueError):
        verify(2, mode="sampled", sample_count=0)


def test_report_shape():
    r = verify(2)
    d = r.to_dict()
    assert d["n"] == 2
    assert d["passed"] is True
    assert set(d) >= {"n", "mode", "pairs_checked", "mismatches", "elapsed", "passed"}
    failing = VerificationReport(
        n=2,
        mode="exhaustive",
        pairs_checked=49,
        mismatches=[("0,0", "1,0", True, False)],
        cover_mismatches=[],
        oracle_mismatches=[],
        elapsed=0.0,
    )
    assert not failing.passed
    assert failing.to_dict()["passed"] is False
