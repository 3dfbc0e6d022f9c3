import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cliquemax.graph_core import (
    CapacityError,
    Graph,
    canonical_form,
    common_neighborhood,
    complement_within,
    components,
    disjoint_union,
    from_edgelist,
    from_edges,
    from_graph6,
    parse_graph,
    to_edgelist,
    to_graph6,
    vset,
)
from cliquemax.cliques import clique_profile

from conftest import C5, K2, K3, K4, K4_MINUS, P3


def random_graph(rng, n, p):
    return Graph.from_pairs(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_pairs(n, [p for p, keep in zip(pairs, chosen) if keep])


class TestFromEdges:
    def test_empty(self):
        g = from_edges([])
        assert g.n == 0 and g.edge_count() == 0

    def test_triangle(self):
        assert K3.n == 3 and K3.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_k4(self):
        assert K4.edge_count() == 6 and K4.max_degree() == 3

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError):
            from_edges([(1, 2), (2, 1)])

    def test_capacity(self):
        with pytest.raises(CapacityError):
            from_edges([(1, 64)])
        assert from_edges([(1, 63)]).n == 63


class TestNeighborhoods:
    def test_common_neighborhood(self):
        assert common_neighborhood(K4, vset([0])) == vset([1, 2, 3])
        assert common_neighborhood(K4, vset([0, 1])) == vset([2, 3])
        assert common_neighborhood(C5, vset([0, 1])) == 0

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            common_neighborhood(K4, 0)

    def test_complement_within(self):
        s = vset([0, 1, 2])
        assert complement_within(K4, s).edge_count() == 0
        assert complement_within(C5, s).edges() == [(0, 2)]
        assert complement_within(Graph.empty(3), s).edges() == K3.edges()

    @given(graphs())
    def test_complement_partitions_pairs(self, g):
        s = vset(range(0, g.n, 2)) | vset(range(1, g.n, 3))
        red = complement_within(g, s)
        members = [v for v in range(g.n) if s >> v & 1]
        for u, v in itertools.combinations(members, 2):
            assert g.has_edge(u, v) != red.has_edge(u, v)


class TestUnionAndComponents:
    def test_two_triangles(self):
        g = disjoint_union(K3, K3)
        assert g.edge_count() == 6 and clique_profile(g)[3] == 2
        assert [bin(c).count("1") for c in components(g)] == [3, 3]

    def test_identity(self):
        assert disjoint_union(K4, Graph.empty(0)) == K4

    def test_k4_k2(self):
        g = disjoint_union(K4, K2)
        assert clique_profile(g).as_tuple() == (7, 4, 1)
        assert [bin(c).count("1") for c in components(g)] == [4, 2]

    def test_c5_connected(self):
        assert len(components(C5)) == 1

    def test_capacity(self):
        with pytest.raises(CapacityError):
            disjoint_union(Graph.empty(40), Graph.empty(24))

    @given(graphs())
    def test_components_partition(self, g):
        comps = components(g)
        assert sum(comps) == g.vertex_mask
        for c in comps:
            for v in range(g.n):
                if c >> v & 1:
                    assert g.adj[v] & ~c == 0


class TestGraph6:
    @given(graphs(max_n=12))
    def test_roundtrip(self, g):
        assert from_graph6(to_graph6(g)) == g

    @given(graphs(max_n=10))
    def test_matches_networkx(self, g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        assert nx.to_graph6_bytes(h, header=False).strip().decode() == to_graph6(g)

    def test_large_header(self):
        g = from_edges([(1, 63), (5, 7)])
        text = to_graph6(g)
        assert text.startswith("~")
        assert from_graph6(text) == g

    def test_malformed(self):
        with pytest.raises(ValueError):
            from_graph6("C")
        with pytest.raises(ValueError):
            from_graph6("C\x10")

    def test_edgelist_roundtrip_and_autodetect(self):
        assert from_edgelist(to_edgelist(C5)) == C5
        assert parse_graph(to_edgelist(K4)) == K4
        assert parse_graph(to_graph6(K4) + "\n") == K4


class TestCanonicalForm:
    def test_relabeled_path(self):
        a = from_edges([(1, 2), (2, 3)])
        b = from_edges([(2, 1), (1, 3)])
        assert canonical_form(a) == canonical_form(b)

    def test_distinguishes(self):
        assert canonical_form(K3) != canonical_form(P3)

    def test_all_permutations_of_k4_minus_edge(self):
        base = canonical_form(K4_MINUS)
        for perm in itertools.permutations(range(4)):
            assert canonical_form(K4_MINUS.relabel(perm)) == base

    def test_random_relabelings(self):
        rng = random.Random(7)
        for _ in range(1000):
            n = rng.randint(1, 8)
            g = random_graph(rng, n, rng.random())
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabel(perm))

    def test_orbits_on_five_vertices(self):
        # brute-force orbit representative: least edge bitmask over all relabelings
        pairs = list(itertools.combinations(range(5), 2))
        perms = list(itertools.permutations(range(5)))

        def orbit_key(mask):
            best = None
            for p in perms:
                img = 0
                for i, (u, v) in enumerate(pairs):
                    if mask >> i & 1:
                        a, b = sorted((p[u], p[v]))
                        img |= 1 << pairs.index((a, b))
                best = img if best is None else min(best, img)
            return best

        by_orbit = {}
        for mask in range(1 << len(pairs)):
            g = Graph.from_pairs(5, [pr for i, pr in enumerate(pairs) if mask >> i & 1])
            by_orbit.setdefault(orbit_key(mask), set()).add(canonical_form(g))
        assert len(by_orbit) == 34
        assert all(len(certs) == 1 for certs in by_orbit.values())
        assert len(set().union(*by_orbit.values())) == 34

    def test_symmetric_disconnected_is_fast(self):
        g = disjoint_union(*[K4] * 5, *[K2] * 10)
        assert canonical_form(g) == canonical_form(g.relabel(list(reversed(range(g.n)))))

    @settings(max_examples=200)
    @given(graphs(max_n=9), st.randoms())
    def test_isomorphic_iff_equal(self, g, rng):
        h = random_graph(rng, g.n, 0.5)
        same = nx.is_isomorphic(nx.Graph(g.edges()), nx.Graph(h.edges())) and g.n == h.n and \
            sorted(g.degrees()) == sorted(h.degrees())
        assert (canonical_form(g) == canonical_form(h)) == same


def test_validate_catches_asymmetry():
    with pytest.raises(AssertionError):
        Graph(2, (0b10, 0)).validate()
    K4.validate()
