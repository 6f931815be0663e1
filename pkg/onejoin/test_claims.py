from unittest import TestCase

from model.crossing_plan import CrossingPlan
from model.embedding import PlaneEmbedding
from model.operators import standard_graph
from model.report import ClaimStatus
from model.test_common import slow_test
from model.verdict import OnePlanarWitness, SearchBudget
from onejoin.claims import (GROUPS, build_claims, check_decision, check_ladder, check_oracle, check_outer1p,
                            check_soundness, check_table_predicate, check_wheel_apex, check_witness_integrity,
                            select, witness_integrity_violations)
from onejoin.solver import is_one_planar

BUDGET = SearchBudget(200_000, 60.0)


class TestCatalogue(TestCase):
    def setUp(self):
        self.claims = build_claims(GROUPS, {'soundness_max_vertices': 4, 'oracle_max_vertices': 5,
                                            'witness_samples': 10})

    def test_ids_are_unique(self):
        ids = [c.claim_id for c in self.claims]
        self.assertEqual(len(ids), len(set(ids)))
        self.assertTrue(all(c.anchor for c in self.claims))

    def test_quick_theorem_sizes(self):
        theorem = [c for c in self.claims if c.claim_id.startswith('theorem-')]
        self.assertEqual(len(theorem), (4 + 11) ** 2)

    def test_select(self):
        self.assertEqual([c.claim_id for c in select(self.claims, ['lemma-3P2+3P1'])], ['lemma-3P2+3P1'])
        table = select(self.claims, ['table1'])
        self.assertEqual(len(table), 1 + 16)
        self.assertEqual([c.claim_id for c in select(self.claims, ['lemma-(C3∪P1)+C3'])], ['lemma-(C3uP1)+C3'])
        self.assertEqual(select(self.claims, None), self.claims)

    def test_stretch_claims(self):
        stretch = sorted(c.claim_id for c in self.claims if c.stretch)
        self.assertEqual(stretch, ['cr-(C3uP1)+4P1', 'cr-K_{6,3}'])

    def test_groups(self):
        only_cr = build_claims(('cr',))
        self.assertTrue(all(c.budget_section == 'crossing_number' for c in only_cr))


class TestChecks(TestCase):
    def test_table_predicate(self):
        self.assertIs(check_table_predicate(BUDGET).status, ClaimStatus.PASS)

    def test_decisions(self):
        self.assertIs(check_decision(BUDGET, 'C4+C4', True).status, ClaimStatus.PASS)
        self.assertIs(check_decision(BUDGET, '(P4∪P1)+C3', False).status, ClaimStatus.PASS)
        self.assertIs(check_decision(BUDGET, 'C4+C4', False).status, ClaimStatus.FAIL)

    def test_constructions(self):
        self.assertIs(check_ladder(BUDGET, 10).status, ClaimStatus.PASS)
        self.assertIs(check_wheel_apex(BUDGET, 5).status, ClaimStatus.PASS)
        self.assertIs(check_outer1p(BUDGET, 'C4', True).status, ClaimStatus.PASS)
        self.assertIs(check_outer1p(BUDGET, 'K5', False).status, ClaimStatus.PASS)

    def test_oracle(self):
        outcome = check_oracle(BUDGET, 4)
        self.assertIs(outcome.status, ClaimStatus.PASS)
        self.assertEqual(outcome.computed['compared'], 2 * 11)

    def test_soundness(self):
        outcome = check_soundness(BUDGET, 'P1', 4)
        self.assertIs(outcome.status, ClaimStatus.PASS)
        self.assertEqual(outcome.computed['counterexamples'], [])

    def test_inconclusive_budget(self):
        outcome = check_decision(SearchBudget(max_nodes=1), 'K_{3,3}+P1', True)
        self.assertIs(outcome.status, ClaimStatus.INCONCLUSIVE)

    @slow_test
    def test_witness_integrity(self):
        outcome = check_witness_integrity(BUDGET, 5, seed=7)
        self.assertIs(outcome.status, ClaimStatus.PASS)
        self.assertEqual(outcome.computed['violations'], [])

    @slow_test
    def test_soundness_larger(self):
        for factor in ('P1', '2P1', 'P2'):
            self.assertIsNot(check_soundness(BUDGET, factor, 6).status, ClaimStatus.FAIL)

    def test_integrity_of_k6_witness(self):
        graph = standard_graph('complete', 6)
        self.assertEqual(witness_integrity_violations(graph, is_one_planar(graph).witness), [])

    def test_malformed_witness_is_a_violation(self):
        graph = standard_graph('complete', 4)
        witness = OnePlanarWitness(CrossingPlan.of([((0, 1), (0, 2))]), PlaneEmbedding.from_rotation([]))
        problems = witness_integrity_violations(graph, witness)
        self.assertEqual(len(problems), 1)
        self.assertTrue(problems[0].startswith('plan: '))

