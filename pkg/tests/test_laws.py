import json

import pytest

from cliquemax import laws
from cliquemax.colex import g, kt_colex
from cliquemax.graph_core import CapacityError, Graph, canonical_form, disjoint_union, from_graph6, vset

from conftest import C5, K4, K4_MINUS

COLEX_E_B1 = from_graph6("D@s")
R5 = Graph.from_pairs(
    7,
    [(0, 1)] + [(a, b) for a in (0, 1) for b in (2, 3, 4, 5)] + [(2, 4), (2, 5), (3, 4), (3, 5), (2, 6)],
)


@pytest.fixture(scope="module")
def r3():
    return list(laws.connected_instances([3], 10))


class TestKruskalKatona:
    def test_examples(self):
        rep = laws.check_kruskal_katona([K4, C5])
        assert rep.ok and rep.instances_checked == 2
        # C(5) is K_4 minus an edge, which holds two triangles
        assert kt_colex(6, 3) == 4 and kt_colex(5, 3) == 2

    def test_small_graphs_complete_list(self):
        # empty graph, K_2, two on 3 vertices, seven on 4 vertices
        assert len(list(laws.small_graphs(4))) == 11
        assert len(list(laws.graphs_on(4))) == 11


class TestColexLaws:
    def test_numt_examples(self):
        assert kt_colex(3, 2) + 2 == kt_colex(5, 2) == 5
        assert kt_colex(3, 3) + 1 == kt_colex(5, 3) == 2
        rep = laws.check_numt(40, 10)
        assert rep.ok and rep.instances_checked > 0

    def test_disco_examples(self):
        assert g(12, 3) == g(6, 3) + g(6, 3) == 22
        assert g(2, 3) == g(1, 3) + g(1, 3) == 2
        assert g(5, 3) >= g(2, 3) + g(3, 3)
        assert laws.check_disco(30, range(1, 5)).ok


class TestFixedLoss:
    def test_small_sizes(self):
        rep = laws.check_fixed_loss_bounds(4)
        assert rep.ok and rep.instances_checked == 1 + 2 + 4 + 11

    def test_refuses_large(self):
        with pytest.raises(CapacityError):
            laws.check_fixed_loss_bounds(8)


class TestClusterLaws:
    def test_blue_bound_examples(self):
        assert laws.check_blue_bound([(K4_MINUS, 3)]).ok
        assert laws.check_blue_bound([(COLEX_E_B1, 3)], 2).ok

    def test_colex_fold_vacuous_on_complete_block(self):
        rep = laws.check_colex_fold([(K4, 3)])
        assert rep.instances_checked == 0 and rep.vacuous == 1

    def test_colex_fold_witness(self):
        rep = laws.check_colex_fold([(COLEX_E_B1, 3)])
        assert rep.ok and rep.instances_checked == 1

    def test_partial_fold_witness(self):
        rep = laws.check_partial_fold([(R5, 5)])
        assert rep.ok and rep.instances_checked >= 1

    def test_sbound_and_clusnum_skip_complete_block(self):
        for check in (laws.check_sbound, laws.check_clusnum):
            rep = check([(K4, 3)])
            assert rep.ok and rep.instances_checked == 0 and rep.vacuous == 1

    def test_clusnum_singletons(self, r3):
        rep = laws.check_clusnum(r3)
        assert rep.ok and rep.instances_checked > 0

    def test_exhaustive_r3(self, r3):
        for check in (
            laws.check_blue_bound,
            laws.check_colex_fold,
            laws.check_partial_fold,
            laws.check_sbound,
            laws.check_cluster_structure,
            laws.check_move_accounting,
            laws.check_improve_or_average,
        ):
            rep = check(r3)
            assert rep.ok, rep.violations[:3]
            assert rep.instances_checked > 0


class TestAveraging:
    def test_cycle_is_checked(self):
        rep = laws.check_averaging([(C5, 2)])
        assert rep.instances_checked == 1 and rep.ok

    def test_complete_block_vacuous(self):
        rep = laws.check_averaging([(K4, 3)])
        assert rep.instances_checked == 0 and rep.vacuous == 1

    def test_exhaustive_r3(self, r3):
        for strict in (False, True):
            rep = laws.check_averaging(r3, strict)
            assert rep.ok and rep.instances_checked > 0 and rep.vacuous > 0


def test_violation_record_and_json():
    rep = laws.LawReport("demo")
    rep.violate(K4, r=3, observed=5, bound=4)
    data = json.loads(rep.dumps())
    assert not rep.ok
    assert data["violations"] == [{"graph6": "C~", "r": 3, "observed": 5, "bound": 4}]
    assert data["vacuous"] == 0
