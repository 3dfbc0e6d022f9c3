import itertools
from collections import Counter

import networkx as nx
import pytest

from cliquemax.cliques import k_total, kt
from cliquemax.colex import build_colex, g
from cliquemax.graph_core import CapacityError, Graph, canonical_form, disjoint_union, from_graph6, is_connected
from cliquemax.search import (
    SearchReport,
    SearchSpec,
    compute_connected,
    count_classes,
    enumerate_graphs,
    estimate_classes,
    f_max,
    verify_kt,
    verify_main_theorem,
)

from conftest import K3, K4
from oracles import clique_total, orbit_classes

P4 = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3)])
K2 = Graph.complete(2)


def certs(graphs):
    return [canonical_form(h) for h in graphs]


@pytest.fixture(scope="module")
def oracle_r4():
    return orbit_classes(7, 4)


class TestEnumerate:
    def test_single_edge(self):
        assert certs(enumerate_graphs(SearchSpec(1, 3))) == [canonical_form(K2)]

    def test_three_edges_degree_two(self):
        # K_{1,2} is P_3, so the classes are K_3, P_4, P_3 + K_2 and 3K_2
        expected = {
            canonical_form(K3),
            canonical_form(P4),
            canonical_form(disjoint_union(Graph.from_pairs(3, [(0, 1), (1, 2)]), K2)),
            canonical_form(disjoint_union(K2, K2, K2)),
        }
        found = certs(enumerate_graphs(SearchSpec(3, 2)))
        assert len(found) == 4 and set(found) == expected

    def test_labeled_orbits_small(self):
        # labeled graphs on 2m vertices with m edges and Δ <= r, grouped by certificate
        for m, r in [(2, 2), (3, 2), (3, 3), (4, 2)]:
            n = 2 * m
            seen = set()
            for edges in itertools.combinations(itertools.combinations(range(n), 2), m):
                h = Graph.from_pairs(n, edges)
                if h.max_degree() <= r:
                    seen.add(canonical_form(h.strip_isolated()))
            assert sorted(certs(enumerate_graphs(SearchSpec(m, r)))) == sorted(seen)

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_counts_match_oracle(self, r, oracle_r4):
        levels = oracle_r4 if r == 4 else orbit_classes(7, r)
        for m in range(1, 8):
            expected = [h for h in levels[m] if max(d for _, d in h.degree()) <= r]
            found = list(enumerate_graphs(SearchSpec(m, r)))
            assert len(found) == len(expected)
            assert len(set(certs(found))) == len(found)
            connected = [h for h in expected if nx.is_connected(h)]
            assert len(list(enumerate_graphs(SearchSpec(m, r, connected_only=True)))) == len(connected)

    def test_every_output_is_valid(self):
        for h in enumerate_graphs(SearchSpec(6, 3)):
            assert h.edge_count() == 6 and h.max_degree() <= 3
            assert all(d > 0 for d in h.degrees())

    def test_jobs_do_not_change_output(self):
        assert compute_connected(9, 3, jobs=1) == compute_connected(9, 3, jobs=4)

    def test_count_classes_generating_function(self):
        # one connected class per size: the answer is the partition number p(5)
        assert count_classes(5, [0, 1, 1, 1, 1, 1]) == 7

    def test_guard(self):
        assert estimate_classes(6, 3) == len(compute_connected(6, 3)[6])
        with pytest.raises(CapacityError):
            next(enumerate_graphs(SearchSpec(60, 10)))

    def test_search_spec_validation(self):
        with pytest.raises(ValueError):
            SearchSpec(0, 3)
        with pytest.raises(ValueError):
            SearchSpec(3, 3, thread_count=0)


class TestMaximum:
    def test_examples(self):
        rep = verify_main_theorem(6, 3)
        assert rep.f_value == 11 and rep.agrees and rep.argmax_certificates == [canonical_form(K4).decode()]
        rep = verify_main_theorem(7, 3)
        assert rep.f_value == 12 and rep.argmax_certificates == [canonical_form(disjoint_union(K4, K2)).decode()]
        rep = verify_main_theorem(10, 3)
        assert rep.f_value == g(10, 3) and rep.agrees
        assert set(rep.argmax_certificates) == {
            canonical_form(disjoint_union(K4, build_colex(4))).decode(),
            canonical_form(disjoint_union(K4, K3, K2)).decode(),
        }
        rep = verify_main_theorem(12, 3)
        assert rep.agrees and rep.f_value == 22 and len(rep.argmax_certificates) == 1

    def test_matching_regime(self):
        for m in range(1, 10):
            rep = verify_main_theorem(m, 1)
            assert rep.agrees and rep.f_value == m

    def test_below_one_block(self):
        for r in range(2, 5):
            for m in range(1, r * (r + 1) // 2 + 1):
                assert verify_main_theorem(m, r).agrees

    def test_against_oracle(self, oracle_r4):
        for r in (2, 3, 4):
            for m in range(1, 8):
                pool = [h for h in oracle_r4[m] if max(d for _, d in h.degree()) <= r]
                assert f_max(SearchSpec(m, r)).f_value == max(clique_total(h) for h in pool)

    def test_streamed_maximum_agrees(self):
        for m, r in [(5, 2), (7, 3), (8, 3), (6, 4)]:
            graphs = list(enumerate_graphs(SearchSpec(m, r)))
            best = max(k_total(h) for h in graphs)
            winners = sorted(canonical_form(h).decode() for h in graphs if k_total(h) == best)
            rep = f_max(SearchSpec(m, r))
            assert (rep.f_value, rep.argmax_certificates, rep.graphs_enumerated) == (best, winners, len(graphs))

    def test_monotone_in_r(self):
        for m in range(1, 11):
            values = [f_max(SearchSpec(m, r)).f_value for r in (1, 2, 3, 4)]
            assert values == sorted(values)


class TestCliqueSizes:
    def test_examples(self):
        rep = verify_kt(6, 3, 3)
        assert rep.f_value == 4 and rep.argmax_certificates == [canonical_form(K4).decode()]
        assert verify_kt(7, 3, 4).f_value == 1

    def test_triangles_with_degree_two(self):
        for m in range(1, 13):
            rep = verify_kt(m, 2, 3)
            assert rep.f_value == m // 3 and rep.agrees

    def test_rejects_small_t(self):
        with pytest.raises(ValueError):
            verify_kt(5, 3, 2)


def test_report_json_shape():
    rep = verify_main_theorem(6, 3)
    data = rep.to_json()
    assert list(data)[:7] == ["m", "r", "f", "g", "agrees", "graphs_enumerated", "argmax"]
    assert data["expected"] == data["argmax"]
    assert "t" in verify_kt(6, 3, 3).to_json()
