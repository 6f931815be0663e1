from unittest import TestCase

from model.graph import PartitionSpec, make_graph
from model.join_decision import ReasonKind
from model.operators import complete_multipartite, disjoint_union, join, standard_graph
from model.verdict import Answer
from onejoin.characterization import (MAJOR_PAIRS, construct_apex_drawing, decide_join, edge_bound, factor_name,
                                      is_exposed, majorized_by, necessary_conditions, p_square_check, size_rule,
                                      sufficient_outer1p)
from onejoin.exceptions import DomainError, PreconditionError
from onejoin.planarity import common_face_embedding
from onejoin.solver import validate_witness

P1 = standard_graph('empty', 1)
P2 = standard_graph('path', 2)
TWO_P1 = standard_graph('empty', 2)
C3 = standard_graph('cycle', 3)
C4 = standard_graph('cycle', 4)


class TestMajorization(TestCase):
    def test_size_rule(self):
        self.assertTrue(size_rule(5, 4))
        self.assertTrue(size_rule(3, 7))
        self.assertFalse(size_rule(6, 3))
        self.assertFalse(size_rule(4, 4))

    def test_major_pairs(self):
        self.assertEqual([p.name for p in MAJOR_PAIRS], ['C3∪C3 + C3', 'C4 + C4', 'C4 + C3', 'K_{2,1,1} + P3'])
        self.assertEqual(majorized_by(C4, C4).name, 'C4 + C4')
        self.assertEqual(majorized_by(standard_graph('path', 3), complete_multipartite(PartitionSpec.of(2, 1, 1))).name,
                         'K_{2,1,1} + P3')
        self.assertEqual(majorized_by(disjoint_union(C3, C3), C3).name, 'C3∪C3 + C3')

    def test_not_majorized(self):
        p4_p1 = disjoint_union(standard_graph('path', 4), P1)
        self.assertIsNone(majorized_by(p4_p1, C3))
        self.assertIsNone(majorized_by(standard_graph('complete', 4), C3))

    def test_majorization_domain(self):
        with self.assertRaises(DomainError):
            majorized_by(P2, C4)

    def test_factor_name(self):
        self.assertEqual(factor_name(P1), 'P1')
        self.assertEqual(factor_name(TWO_P1), '2P1')
        self.assertEqual(factor_name(P2), 'P2')
        with self.assertRaises(DomainError):
            factor_name(C3)


class TestNecessaryConditions(TestCase):
    def test_edge_bounds(self):
        self.assertEqual(edge_bound(6, 'P1'), 14)
        self.assertEqual(edge_bound(6, '2P1'), 12)
        self.assertEqual(edge_bound(6, 'P2'), 11)
        self.assertIsNone(edge_bound(1, 'P1'))

    def test_order(self):
        names = [r.name for r in necessary_conditions(C4, 'P2')]
        self.assertEqual(names[:6], ['max-degree', 'edge-bound-P2', 'forbidden-K_{7,1}', 'forbidden-K_{3,3}',
                                     'forbidden-K_{4,2}', 'forbidden-K_{3,1,1}'])
        self.assertTrue(all(r.holds for r in necessary_conditions(C4, 'P2')))
        self.assertNotIn('max-degree', [r.name for r in necessary_conditions(C4, 'P1')])

    def test_forbidden_report_detail(self):
        k33 = complete_multipartite(PartitionSpec.of(3, 3))
        report = [r for r in necessary_conditions(k33, '2P1') if r.name == 'forbidden-K_{3,3}'][0]
        self.assertFalse(report.holds)
        self.assertEqual(report.detail['join_contains'], 'K_{3,3,2}')
        self.assertEqual(len(report.detail['map']), 6)

    def test_unknown_factor(self):
        with self.assertRaises(DomainError):
            necessary_conditions(C4, 'P3')


class TestDecideJoin(TestCase):
    def test_matched_pair(self):
        decision = decide_join(C4, C4)
        self.assertIs(decision.answer, Answer.ONE_PLANAR)
        self.assertIs(decision.reason.kind, ReasonKind.MATCHED_PAIR)
        self.assertEqual(decision.reason.name, 'C4 + C4')
        self.assertIsNone(decision.witness)

    def test_matched_pair_with_witness(self):
        decision = decide_join(C3, C3, with_witness=True)
        self.assertIs(decision.answer, Answer.ONE_PLANAR)
        self.assertTrue(validate_witness(join(C3, C3), decision.witness))

    def test_not_majorized(self):
        decision = decide_join(disjoint_union(standard_graph('path', 4), P1), C3)
        self.assertIs(decision.answer, Answer.NOT_ONE_PLANAR)
        self.assertIs(decision.reason.kind, ReasonKind.NOT_MAJORIZED)

    def test_size_rule(self):
        decision = decide_join(standard_graph('path', 5), standard_graph('path', 4))
        self.assertIs(decision.reason.kind, ReasonKind.SIZE_RULE)
        self.assertIs(decision.answer, Answer.NOT_ONE_PLANAR)

    def test_small_join(self):
        decision = decide_join(P1, standard_graph('complete', 4))
        self.assertIs(decision.answer, Answer.ONE_PLANAR)
        self.assertIs(decision.reason.kind, ReasonKind.SIZE_RULE)

    def test_degree_bound(self):
        star = complete_multipartite(PartitionSpec.of(7, 1))
        decision = decide_join(star, TWO_P1)
        self.assertIs(decision.answer, Answer.NOT_ONE_PLANAR)
        self.assertIs(decision.reason.kind, ReasonKind.DEGREE_BOUND)
        self.assertEqual(decision.reason.name, 'max-degree')

    def test_edge_bound(self):
        decision = decide_join(standard_graph('complete', 6), P1)
        self.assertIs(decision.reason.kind, ReasonKind.EDGE_BOUND)
        self.assertEqual(decision.reason.name, 'edge-bound-P1')

    def test_forbidden_subgraph(self):
        decision = decide_join(TWO_P1, complete_multipartite(PartitionSpec.of(3, 3)))
        self.assertIs(decision.answer, Answer.NOT_ONE_PLANAR)
        self.assertIs(decision.reason.kind, ReasonKind.FORBIDDEN_SUBGRAPH)
        self.assertEqual(decision.reason.name, 'forbidden-K_{3,3}')

    def test_solver_backed(self):
        decision = decide_join(standard_graph('cycle', 5), P1, with_witness=True)
        self.assertIs(decision.answer, Answer.ONE_PLANAR)
        self.assertIs(decision.reason.kind, ReasonKind.SOLVER)
        self.assertEqual(decision.witness.crossing_count, 0)
        self.assertTrue(all(c.holds for c in decision.conditions))


class TestPSquare(TestCase):
    def wheel(self):
        return make_graph(5, list(C4.edges) + [(v, 4) for v in range(4)])

    def test_is_exposed(self):
        self.assertTrue(is_exposed({(0, 1), (1, 4)}, {(0, 1), (1, 2)}))
        self.assertFalse(is_exposed({(0, 4), (1, 4)}, {(0, 1), (1, 2)}))

    def test_cycle(self):
        embedding = common_face_embedding(C4, C4.vertices)
        self.assertTrue(p_square_check(C4, embedding).holds)
        witness = construct_apex_drawing(C4, embedding)
        self.assertEqual(witness.crossing_count, 0)
        self.assertTrue(validate_witness(join(C4, P1), witness))

    def test_wheel_hub_inside(self):
        wheel = self.wheel()
        embedding = common_face_embedding(wheel, range(4))
        report = p_square_check(wheel, embedding)
        self.assertTrue(report.holds)
        self.assertEqual(report.detail['outer_vertices'], [0, 1, 2, 3])
        witness = construct_apex_drawing(wheel, embedding)
        self.assertEqual(witness.crossing_count, 1)
        self.assertTrue(validate_witness(join(wheel, P1), witness))

    def test_not_two_outerplanar(self):
        edges = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]
        edges += [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
        g = make_graph(7, edges)
        embedding = common_face_embedding(g, [0, 1, 2])
        report = p_square_check(g, embedding)
        self.assertFalse(report.holds)
        self.assertFalse(report.detail['two_outerplanar'])
        with self.assertRaises(PreconditionError):
            construct_apex_drawing(g, embedding)


class TestOuterOnePlanarSufficiency(TestCase):
    def test_c4(self):
        report = sufficient_outer1p(C4)
        self.assertTrue(report.holds)
        self.assertTrue(report.detail['join_witness_valid'])
        self.assertEqual(report.detail['decide_join'], 'one_planar')

    def test_k4(self):
        report = sufficient_outer1p(standard_graph('complete', 4))
        self.assertTrue(report.holds)
        self.assertTrue(report.detail['join_witness_valid'])

    def test_k5(self):
        report = sufficient_outer1p(standard_graph('complete', 5))
        self.assertFalse(report.holds)
        self.assertEqual(report.detail['outer_one_planar'], 'not_one_planar')
