from unittest import TestCase

from model.graph import PartitionSpec
from model.operators import complete_multipartite, disjoint_union, join, standard_graph
from onejoin.exceptions import UnknownFamilyError
from onejoin.expressions import normalize, parse_graph, split_join
from onejoin.families import four_vertex_graph, wheel


class TestExpressions(TestCase):
    def test_normalize(self):
        self.assertEqual(normalize('K_{1, 3,4} ∪ P1'), 'K_{4,3,1}uP1')
        self.assertEqual(normalize('K_{1,1,1}'), 'K3')
        self.assertEqual(normalize('(C3∪P1)+4P1'), '(C3uP1)+4P1')

    def test_atoms(self):
        self.assertEqual(parse_graph('K_{4,3,1}'), complete_multipartite(PartitionSpec.of(4, 3, 1)))
        self.assertEqual(parse_graph('K6'), standard_graph('complete', 6))
        self.assertEqual(parse_graph('C5'), standard_graph('cycle', 5))
        self.assertEqual(parse_graph('P1').edge_count, 0)
        self.assertEqual(parse_graph('W5'), wheel(5))
        self.assertEqual(parse_graph('G4'), four_vertex_graph(4))

    def test_multiplicity_and_join(self):
        g = parse_graph('3P2+3P1')
        self.assertEqual(g.vertex_count, 9)
        self.assertEqual(g.edge_count, 3 + 18)

    def test_union_binds_tighter_than_join(self):
        expected = join(disjoint_union(standard_graph('cycle', 3), standard_graph('empty', 1)),
                        standard_graph('empty', 4))
        self.assertEqual(parse_graph('(C3∪P1)+4P1'), expected)
        self.assertEqual(parse_graph('C3uP1+4P1'), expected)

    def test_errors(self):
        for text in ('X5', '(C3', 'C3+', 'C2', 'W3', 'G7', 'C3)', ''):
            with self.assertRaises(ValueError, msg=text):
                parse_graph(text)
        with self.assertRaises(UnknownFamilyError):
            parse_graph('C3 ? C4')

    def test_split_join(self):
        self.assertEqual(split_join('(C3∪P1)+4P1'), ('(C3uP1)', '4P1'))
        self.assertEqual(split_join('C4 + C4'), ('C4', 'C4'))
        with self.assertRaises(ValueError):
            split_join('(C4+C4)')
