"""Switching enumeration, catalog generation, brute-force verification, and
certificate round-trips."""

import dataclasses
import itertools
import json

import pytest

from mainswitch import (
    Certificate,
    DisconnectedGraphError,
    Graph,
    adjacency_matrix,
    apply_switching,
    canonical_form,
    canonical_graph6,
    emit_graph6,
    enumerate_connected_graphs,
    enumerate_switchings,
    find_all_main_switching,
    main_profile,
    make_certificate,
    make_multipartite,
    make_snr,
    parse_graph6,
    switching_main_counts,
    verify_certificate,
    verify_conjecture,
)
from mainswitch import MultipartiteParams, SnrParams

K4_MINUS_EDGE = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])

# Connected simple graphs per vertex count (frozen; cross-checked below for
# n <= 5 by exhaustive labelled enumeration with an independent iso test).
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


# ---------------------------------------------------------------------------
# Switching enumeration
# ---------------------------------------------------------------------------


def test_enumerate_switchings_small():
    assert [sorted(x.switched) for x in enumerate_switchings(2)] == [[], [2]]
    assert [sorted(x.switched) for x in enumerate_switchings(3)] == \
        [[], [2], [3], [2, 3]]
    assert sum(1 for _ in enumerate_switchings(4)) == 8


def test_enumerate_switchings_order_and_count():
    for n in range(1, 8):
        xs = list(enumerate_switchings(n))
        assert len(xs) == 2 ** (n - 1)
        sizes = [len(x.switched) for x in xs]
        assert sizes == sorted(sizes)
        assert len({tuple(sorted(x.switched)) for x in xs}) == len(xs)


def test_switching_classes_cover_all_subsets():
    # Every one of the 2^n subsets produces a signed graph already reachable
    # from the 2^(n-1) enumerated classes.
    for n in range(2, 6):
        g = make_snr(SnrParams(n, 1)) if n >= 2 else None
        enumerated = {apply_switching(g, x.switched) for x in enumerate_switchings(n)}
        assert len(enumerated) <= 2 ** (n - 1)
        for bits in range(2 ** n):
            subset = {v + 1 for v in range(n) if bits >> v & 1}
            assert apply_switching(g, subset) in enumerated


# ---------------------------------------------------------------------------
# Brute-force search
# ---------------------------------------------------------------------------


def test_k2_has_no_all_main_switching():
    g = parse_graph6("A_")
    assert find_all_main_switching(g) is None
    assert switching_main_counts(g) == [1, 1]


def test_k4_minus_edge_has_no_all_main_switching():
    assert find_all_main_switching(K4_MINUS_EDGE) is None
    counts = switching_main_counts(K4_MINUS_EDGE)
    assert len(counts) == 8
    assert max(counts) < 4  # four distinct eigenvalues, never all main


def test_k3_certificate():
    cert = find_all_main_switching(parse_graph6("Bw"))
    assert cert is not None
    assert len(cert.switching) == 1
    assert cert.all_main and cert.main_count == cert.distinct_count == 2
    assert cert.method == "brute_force"


def test_search_prefers_small_switchings(rng):
    # First success in enumeration order: no strictly smaller subset of
    # {2..n} may be all-main.
    from conftest import random_connected_graph

    for _ in range(10):
        g = random_connected_graph(rng, rng.randrange(3, 7))
        cert = find_all_main_switching(g)
        if cert is None:
            continue
        dc = main_profile(adjacency_matrix(g)).distinct_count
        found = set(cert.switching)
        for x in enumerate_switchings(g.n):
            if len(x.switched) > len(found):
                break
            if x.switched == found:
                break
            prof = main_profile(adjacency_matrix(apply_switching(g, x.switched)))
            assert not prof.all_main


def test_search_rejects_disconnected():
    g = Graph.from_edges(4, [(1, 2), (3, 4)])
    with pytest.raises(DisconnectedGraphError):
        find_all_main_switching(g)


# ---------------------------------------------------------------------------
# Catalog enumeration
# ---------------------------------------------------------------------------


def test_connected_counts():
    for n, expected in CONNECTED_COUNTS.items():
        assert len(enumerate_connected_graphs(n)) == expected


def test_catalog_rejects_beyond_cap():
    with pytest.raises(ValueError):
        enumerate_connected_graphs(8)


def test_catalog_graphs_are_canonical_and_connected():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            assert canonical_form(g) == g


def test_catalog_matches_exhaustive_labelled_enumeration():
    # Independent oracle: enumerate all labelled graphs on n vertices, filter
    # connected, and count isomorphism classes with networkx's VF2 matcher.
    nx = pytest.importorskip("networkx")
    from mainswitch.graphs import is_connected

    for n in range(2, 6):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        reps: list[Graph] = []
        for bits in range(2 ** len(pairs)):
            g = Graph(n, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))
            if not is_connected(g):
                continue
            ng = nx.Graph()
            ng.add_nodes_from(range(1, n + 1))
            ng.add_edges_from(g.edges)
            for rep, nrep in reps:
                if nx.is_isomorphic(ng, nrep):
                    break
            else:
                reps.append((g, ng))
        assert len(reps) == CONNECTED_COUNTS[n]
        # And our canonical forms separate exactly the same classes.
        ours = {emit_graph6(canonical_form(g)) for g, _ in reps}
        catalog = {emit_graph6(g) for g in enumerate_connected_graphs(n)}
        assert ours == catalog


def test_canonical_form_is_isomorphism_invariant(rng):
    from conftest import random_connected_graph

    for _ in range(20):
        n = rng.randrange(2, 8)
        g = random_connected_graph(rng, n)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        relabelled = Graph(n, frozenset(
            (min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
            for u, v in g.edges))
        assert canonical_form(g) == canonical_form(relabelled)


# ---------------------------------------------------------------------------
# Conjecture verification
# ---------------------------------------------------------------------------


def test_verify_conjecture_max_n_2():
    report = verify_conjecture(2)
    assert report.graphs_checked == 1
    assert [e.graph6 for e in report.exceptions] == ["A_"]


def test_verify_conjecture_max_n_4():
    report = verify_conjecture(4)
    assert report.graphs_checked == 9
    assert report.successes == 7
    got = {e.graph6 for e in report.exceptions}
    assert got == {canonical_graph6(parse_graph6("A_")), canonical_graph6(K4_MINUS_EDGE)}
    for e in report.exceptions:
        # evidence: per-class counts, all below the distinct count
        g = parse_graph6(e.graph6)
        dc = main_profile(adjacency_matrix(g)).distinct_count
        assert len(e.main_counts) == 2 ** (g.n - 1)
        assert all(c < dc for c in e.main_counts)


def test_verify_conjecture_deterministic():
    r1 = verify_conjecture(4)
    r2 = verify_conjecture(4)
    assert r1.to_json() == r2.to_json()
    assert [c.to_json() for c in r1.certificates] == [c.to_json() for c in r2.certificates]


def test_verify_conjecture_workers_agree():
    r1 = verify_conjecture(5, workers=1)
    r2 = verify_conjecture(5, workers=2)
    assert r1.to_json() == r2.to_json()


def test_verify_conjecture_supplied_graphs():
    graphs = [parse_graph6("A_"), parse_graph6("Bw")]
    report = verify_conjecture(0, graphs=graphs)
    assert report.graphs_checked == 2
    assert report.successes == 1
    assert [e.graph6 for e in report.exceptions] == ["A_"]


def test_constructive_and_brute_force_agree_small():
    # For every family graph small enough to search exhaustively, both routes
    # certify all-main.
    from mainswitch import (
        NoAllMainSwitchingError,
        multipartite_all_main_switching,
        snr_all_main_switching,
    )

    for n in range(4, 8):
        for r in range(1, n - 2):
            res = snr_all_main_switching(n, r)
            cert = find_all_main_switching(make_snr(SnrParams(n, r)))
            assert res.verified and cert is not None and cert.all_main, (n, r)

    def partitions(total, maxp=None):
        if maxp is None:
            maxp = total
        if total == 0:
            yield []
            return
        for p in range(min(total, maxp), 0, -1):
            for rest in partitions(total - p, p):
                yield [p] + rest

    for n in range(2, 8):
        for part in partitions(n):
            blocks = [(part.count(s), s) for s in sorted(set(part), reverse=True)]
            p = MultipartiteParams.of(blocks)
            graph = make_multipartite(p)
            cert = find_all_main_switching(graph) if len(graph.edges) else None
            try:
                res = multipartite_all_main_switching(p)
            except NoAllMainSwitchingError:
                assert cert is None, blocks
                continue
            assert res.verified, blocks
            if len(graph.edges):  # brute force needs a connected graph
                assert cert is not None and cert.all_main, blocks


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


def test_certificate_round_trip_through_json():
    cert = find_all_main_switching(parse_graph6("Bw"))
    blob = cert.to_json()
    parsed = Certificate.from_json_dict(json.loads(blob))
    assert parsed == cert
    assert verify_certificate(parsed)
    assert list(json.loads(blob)) == ["graph6", "switching", "distinct_count",
                                      "main_count", "all_main", "method",
                                      "tool_version"]


def test_certificate_tamper_detection():
    cert = find_all_main_switching(parse_graph6("Bw"))
    assert verify_certificate(cert)
    tampered = [
        dataclasses.replace(cert, main_count=cert.main_count - 1),
        dataclasses.replace(cert, distinct_count=cert.distinct_count + 1),
        dataclasses.replace(cert, all_main=False),
        dataclasses.replace(cert, switching=()),
    ]
    for bad in tampered:
        assert not verify_certificate(bad)


def test_certificate_from_construction():
    from mainswitch import snr_all_main_switching

    res = snr_all_main_switching(8, 3)
    cert = make_certificate(res.graph, res.switching, res.method, res.profile)
    assert cert.method == "constructive"
    assert cert.all_main
    assert verify_certificate(cert)


def test_certificate_missing_field_rejected():
    cert = find_all_main_switching(parse_graph6("Bw"))
    d = cert.to_json_dict()
    del d["main_count"]
    with pytest.raises(ValueError):
        Certificate.from_json_dict(d)
