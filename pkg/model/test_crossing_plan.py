from unittest import TestCase

from model.crossing_plan import CrossingPlan, MultiCrossingPlan, independent, pair_key
from model.exceptions import PlanError
from model.graph import make_graph
from model.operators import standard_graph
from model.planarization import build_planarization

K4 = standard_graph('complete', 4)


class TestCrossingPlan(TestCase):
    def test_pairs_are_canonical(self):
        plan = CrossingPlan.of([((3, 1), (2, 0))])
        self.assertEqual(plan.pairs, (((0, 2), (1, 3)),))
        self.assertEqual(pair_key((1, 3), (0, 2)), ((0, 2), (1, 3)))
        self.assertEqual(plan.partners, {(0, 2): (1, 3), (1, 3): (0, 2)})
        self.assertEqual(plan.crossed_edges, {(0, 2), (1, 3)})

    def test_independent(self):
        self.assertTrue(independent((0, 1), (2, 3)))
        self.assertFalse(independent((0, 1), (1, 2)))

    def test_validate_rejects_adjacent_edges(self):
        with self.assertRaises(PlanError):
            CrossingPlan.of([((0, 1), (1, 2))]).validate_for(K4)

    def test_validate_rejects_missing_edge(self):
        with self.assertRaises(PlanError):
            CrossingPlan.of([((0, 2), (1, 3))]).validate_for(standard_graph('cycle', 4))

    def test_validate_rejects_double_crossing(self):
        k5 = standard_graph('complete', 5)
        plan = CrossingPlan.of([((0, 1), (2, 3)), ((0, 1), (2, 4))])
        with self.assertRaises(PlanError):
            plan.validate_for(k5)


class TestMultiCrossingPlan(TestCase):
    def setUp(self):
        self.k5 = standard_graph('complete', 5)

    def test_orders_required_for_multiply_crossed_edges(self):
        pairs = [((0, 1), (2, 3)), ((0, 1), (2, 4))]
        with self.assertRaises(PlanError):
            MultiCrossingPlan.of(pairs).validate_for(self.k5)
        plan = MultiCrossingPlan.of(pairs, {(0, 1): [(2, 4), (2, 3)]})
        plan.validate_for(self.k5)
        self.assertEqual(plan.order_of((0, 1)), ((2, 4), (2, 3)))
        self.assertEqual(plan.order_of((2, 3)), ((0, 1),))

    def test_order_must_be_permutation(self):
        plan = MultiCrossingPlan.of([((0, 1), (2, 3)), ((0, 1), (2, 4))], {(0, 1): [(2, 3), (3, 4)]})
        with self.assertRaises(PlanError):
            plan.validate_for(self.k5)

    def test_from_crossing_plan(self):
        plan = MultiCrossingPlan.from_crossing_plan(CrossingPlan.of([((0, 2), (1, 3))]))
        plan.validate_for(K4)
        self.assertEqual(plan.crossing_count, 1)


class TestPlanarization(TestCase):
    def test_single_crossing(self):
        plan = CrossingPlan.of([((0, 2), (1, 3))])
        p = build_planarization(K4, plan.pairs)
        self.assertEqual(p.graph.vertex_count, 5)
        self.assertEqual(p.graph.edge_count, 8)
        self.assertEqual(p.true_vertices, (0, 1, 2, 3))
        self.assertEqual(p.false_vertices, (4,))
        self.assertEqual(p.false_vertex_of(plan.pairs[0]), 4)
        self.assertEqual(p.graph.adjacency[4], {0, 1, 2, 3})
        self.assertFalse(p.graph.has_edge(0, 2))

    def test_ordered_path(self):
        k5 = standard_graph('complete', 5)
        plan = MultiCrossingPlan.of([((0, 1), (2, 3)), ((0, 1), (2, 4))], {(0, 1): [(2, 4), (2, 3)]})
        p = build_planarization(k5, plan.pairs, dict(plan.orders))
        x23, x24 = p.false_vertex_of(((0, 1), (2, 3))), p.false_vertex_of(((0, 1), (2, 4)))
        self.assertTrue(p.graph.has_edge(0, x24))
        self.assertTrue(p.graph.has_edge(x24, x23))
        self.assertTrue(p.graph.has_edge(x23, 1))
        self.assertEqual(p.graph.edge_count, k5.edge_count + 2 * 2)

    def test_no_crossings(self):
        g = make_graph(3, [(0, 1)])
        p = build_planarization(g, ())
        self.assertEqual(p.graph, g)
        self.assertEqual(p.crossing_count, 0)
