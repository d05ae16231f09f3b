from fractions import Fraction

import pytest

from portvc import (
    AnalysisFault,
    EdgeList,
    build_pair_graphs,
    certify,
    check_cover,
    from_edge_list,
    run,
)
from portvc.analysis import CYCLE, PATH, Component, PairGraph
from portvc.simulator import CoverResult

from conftest import consistent_cycle, cycle, k2, star


class TestCheckCover:
    def test_k2_single_node_covers(self):
        assert check_cover(k2(), {0})

    def test_k2_empty_does_not(self):
        assert not check_cover(k2(), set())

    def test_run_output_covers_4_cycle(self):
        g = cycle(4)
        res, _ = run(g)
        assert check_cover(g, res.cover)

    def test_empty_graph_covered_by_empty_set(self):
        g = from_edge_list(EdgeList.from_pairs(3, []))
        assert check_cover(g, set())


class TestBuildPairGraphs:
    def test_k2_single_path(self):
        g = k2()
        res, _ = run(g)
        pg = build_pair_graphs(g, res)
        assert len(pg.components) == 1
        comp = pg.components[0]
        assert comp.kind == PATH
        assert comp.edge_count == 1
        assert set(comp.nodes) == {0, 1}

    def test_consistent_c4_single_cycle(self):
        g = consistent_cycle(4)
        res, _ = run(g)
        pg = build_pair_graphs(g, res)
        assert len(pg.components) == 1
        comp = pg.components[0]
        assert comp.kind == CYCLE
        assert comp.edge_count == 4
        assert comp.removed_edge == (0, 1)

    def test_empty_graph_no_components(self):
        g = from_edge_list(EdgeList.from_pairs(4, []))
        res, _ = run(g)
        pg = build_pair_graphs(g, res)
        assert pg.components == ()
        assert pg.pair_edges == frozenset()

    def test_star_components_partition_cover(self):
        g = star(5)
        res, _ = run(g)
        pg = build_pair_graphs(g, res)
        covered = [v for c in pg.components for v in c.nodes]
        assert sorted(covered) == sorted(res.cover)
        assert len(covered) == len(set(covered))

    def test_fabricated_extra_pair_edge_is_a_fault(self):
        g = cycle(5)
        res, _ = run(g)
        bogus = CoverResult(
            cover=res.cover,
            pair_edges=res.pair_edges | {(99, 100)},
            rounds_run=res.rounds_run,
            last_active_step=res.last_active_step,
        )
        with pytest.raises(AnalysisFault, match="not a subset"):
            build_pair_graphs(g, bogus)

    def test_cover_mismatch_is_a_fault(self):
        g = k2()
        res, _ = run(g)
        bogus = CoverResult(
            cover=res.cover | {7} if g.node_count > 7 else frozenset({0}),
            pair_edges=res.pair_edges,
            rounds_run=res.rounds_run,
            last_active_step=res.last_active_step,
        )
        with pytest.raises(AnalysisFault, match="differ from the cover"):
            build_pair_graphs(g, bogus)


def _single_component_pg(comp: Component) -> PairGraph:
    edges = frozenset(
        (u, v) if u < v else (v, u)
        for u, v in zip(comp.nodes, comp.nodes[1:] + ((comp.nodes[0],) if comp.kind == CYCLE else ()))
    )
    return PairGraph(
        node_count=len(comp.nodes),
        pair_edges=edges,
        cover=frozenset(comp.nodes),
        components=(comp,),
    )


class TestCertify:
    def test_worst_case_path_of_two_edges(self):
        pg = _single_component_pg(Component(PATH, (0, 1, 2), 2, None))
        cert = certify(pg, 3)
        assert cert.lower_bound == 1
        assert cert.certified_ratio == Fraction(3, 1)

    def test_single_edge_path(self):
        pg = _single_component_pg(Component(PATH, (0, 1), 1, None))
        cert = certify(pg, 2)
        assert cert.lower_bound == 1
        assert cert.certified_ratio == Fraction(2, 1)

    def test_cycle_of_four(self):
        pg = _single_component_pg(Component(CYCLE, (0, 1, 2, 3), 4, (0, 1)))
        cert = certify(pg, 4)
        assert cert.lower_bound == 2
        assert cert.certified_ratio == Fraction(2, 1)

    def test_empty_cover_has_no_ratio(self):
        pg = PairGraph(3, frozenset(), frozenset(), ())
        cert = certify(pg, 0)
        assert cert.lower_bound == 0
        assert cert.certified_ratio is None

    def test_zero_bound_with_cover_is_a_fault(self):
        pg = PairGraph(3, frozenset(), frozenset(), ())
        with pytest.raises(AnalysisFault):
            certify(pg, 2)

    def test_cycle_bound_independent_of_removed_edge(self):
        # the bound depends only on the edge count, not on which edge is opened
        for removed in [(0, 1), (1, 2), (2, 3), (0, 3)]:
            pg = _single_component_pg(Component(CYCLE, (0, 1, 2, 3), 4, removed))
            assert certify(pg, 4).lower_bound == 2

    def test_multi_component_sum(self):
        pg = PairGraph(
            node_count=8,
            pair_edges=frozenset({(0, 1), (2, 3), (3, 4)}),
            cover=frozenset({0, 1, 2, 3, 4}),
            components=(
                Component(PATH, (0, 1), 1, None),
                Component(PATH, (2, 3, 4), 2, None),
            ),
        )
        cert = certify(pg, 5)
        assert cert.lower_bound == 2
        assert cert.certified_ratio == Fraction(5, 2)
