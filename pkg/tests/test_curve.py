import json
from fractions import Fraction

import pytest

from bncurve.chain import BNComponentId, ChainSpec, all_components
from bncurve.combinatorics import catalan
from bncurve.curve import (
    build_bn_curve,
    component_profile,
    delta_closed,
    eh_formula,
    export_graph,
    genus_closed,
    genus_from_graph,
    intersect,
)

C1P = BNComponentId((1, 2, 1, 2), 1)
C2P = BNComponentId((1, 2, 1, 2), 2)
C4PP = BNComponentId((1, 1, 2, 2), 4)


def naive_nodes(a):
    """Oracle: quadratic pair scan using intersect directly."""
    chain = ChainSpec.rho_one(a)
    comps = all_components(chain)
    nodes = []
    for i, x in enumerate(comps):
        for y in comps[i + 1:]:
            node = intersect(chain, x, y)
            if node is not None:
                nodes.append(node)
    return nodes


class TestIntersect:
    def test_c2_meets_c1_at_offset_1(self):
        chain = ChainSpec.rho_one(2)
        node = intersect(chain, C2P, C1P)
        assert node is not None
        assert node.offset_on(C2P) == 1  # the point P+3Q

    def test_c2_meets_c4_doubleprime_at_offset_0(self):
        chain = ChainSpec.rho_one(2)
        node = intersect(chain, C2P, C4PP)
        assert node is not None
        assert node.offset_on(C2P) == 0  # the point 4Q
        assert node.offset_on(C4PP) == 2  # the point 2P+2Q

    def test_non_intersecting_pair(self):
        chain = ChainSpec.rho_one(1)
        x = BNComponentId((1, 2), 1)
        y = BNComponentId((1, 2), 3)
        assert intersect(chain, x, y) is None

    def test_same_component_rejected(self):
        chain = ChainSpec.rho_one(1)
        with pytest.raises(ValueError):
            intersect(chain, C1P, C1P)


class TestBuild:
    @pytest.mark.parametrize("a,nu,delta", [(1, 3, 2), (2, 10, 10), (3, 35, 42)])
    def test_counts(self, a, nu, delta):
        graph = build_bn_curve(a)
        assert graph.nu == nu
        assert graph.delta == delta

    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_matches_naive_scan(self, a):
        graph = build_bn_curve(a)
        assert sorted(
            (n.x.label, n.y.label, n.x_offset, n.y_offset) for n in graph.nodes
        ) == sorted(
            (n.x.label, n.y.label, n.x_offset, n.y_offset) for n in naive_nodes(a)
        )

    def test_connected(self):
        for a in (1, 2, 3):
            assert build_bn_curve(a).is_connected()

    def test_guard(self):
        with pytest.raises(ValueError):
            build_bn_curve(7)
        build_bn_curve(3, max_a=3)

    def test_adjacency_law(self):
        # same sequence, neighboring marked components always meet
        for a in (1, 2, 3):
            chain = ChainSpec.rho_one(a)
            graph = build_bn_curve(a)
            node_pairs = {frozenset((n.x, n.y)) for n in graph.nodes}
            count = 0
            for comp in graph.components:
                if comp.marked < chain.g:
                    nxt = BNComponentId(comp.sequence, comp.marked + 1)
                    assert frozenset((comp, nxt)) in node_pairs
                    count += 1
            assert count == (chain.g - 1) * catalan(a)

    def test_nonadjacent_node_count(self):
        for a in (1, 2, 3, 4):
            graph = build_bn_curve(a)
            adjacent = sum(
                1
                for n in graph.nodes
                if n.x.sequence == n.y.sequence
                and abs(n.x.marked - n.y.marked) == 1
            )
            nonadjacent = graph.delta - adjacent
            expected = 2 * (
                (a - 1) * catalan(a)
                - sum(catalan(k) * catalan(a - k) for k in range(1, a))
            )
            assert nonadjacent == expected


class TestClosedForms:
    def test_examples(self):
        assert delta_closed(2) == 10 and genus_closed(2) == 11
        assert delta_closed(1) == 2 and genus_closed(1) == 3
        assert delta_closed(4) == 2 * (9 * 14 - 42) == 168
        assert genus_closed(4) == 169

    def test_genus_is_delta_plus_one(self):
        for a in range(1, 9):
            assert genus_closed(a) == delta_closed(a) + 1

    def test_genus_from_graph(self):
        for a, genus in [(1, 3), (2, 11), (3, 43)]:
            assert genus_from_graph(build_bn_curve(a)) == genus


class TestEhFormula:
    def test_values(self):
        assert eh_formula(5, 1, 4) == 6
        assert eh_formula(3, 1, 3) == 2
        # evaluated verbatim; reported, no correctness claim attached
        assert eh_formula(4, 1, 3) == Fraction(2)

    def test_discrepancy_against_chain_computation(self):
        assert eh_formula(5, 1, 4) != genus_closed(2) == 11
        assert eh_formula(3, 1, 3) != genus_closed(1) == 3


class TestProfiles:
    def test_c2_prime_profile(self):
        graph = build_bn_curve(2)
        profile = component_profile(graph, C2P)
        by_neighbor = {nbr: off for nbr, off in profile}
        assert set(by_neighbor) == {
            C1P,
            BNComponentId((1, 2, 1, 2), 3),
            C4PP,
        }
        assert sorted(by_neighbor.values()) == [0, 1, 2]

    def test_chain_end_component(self):
        graph = build_bn_curve(2)
        profile = component_profile(graph, C1P)
        assert [nbr for nbr, _ in profile] == [C2P]

    def test_at_most_four_distinct_offsets(self):
        for a in range(1, 6):
            graph = build_bn_curve(a)
            for comp in graph.components:
                offsets = [off for _, off in component_profile(graph, comp)]
                assert len(offsets) <= 4
                assert len(set(offsets)) == len(offsets)

    def test_no_triple_points(self):
        # no two nodes share a (component, offset) endpoint
        for a in range(1, 6):
            graph = build_bn_curve(a)
            endpoints = []
            for n in graph.nodes:
                endpoints += [(n.x, n.x_offset), (n.y, n.y_offset)]
            assert len(endpoints) == len(set(endpoints))


class TestExport:
    def test_dot_a1(self):
        dot = export_graph(build_bn_curve(1), "dot")
        assert dot.count("[label=") == 3 + 2  # 3 vertices, 2 edges
        assert dot.startswith("graph bn_curve {")

    def test_json_a2(self):
        payload = json.loads(export_graph(build_bn_curve(2), "json"))
        assert payload["nu"] == "10" and payload["delta"] == "10"
        assert payload["genus"] == "11"
        assert len(payload["components"]) == 10
        assert len(payload["nodes"]) == 10
        assert payload["components"][0] == {
            "id": "1122|1",
            "sequence": [1, 1, 2, 2],
            "marked": 1,
        }

    def test_deterministic(self):
        g1, g2 = build_bn_curve(2), build_bn_curve(2)
        for fmt in ("json", "dot"):
            assert export_graph(g1, fmt) == export_graph(g2, fmt)

    def test_unknown_format(self):
        graph = build_bn_curve(1)
        with pytest.raises(ValueError):
            export_graph(graph, "")
