from unittest import TestCase

from model.operators import join, standard_graph
from onejoin.exceptions import DomainError, UnknownFamilyError
from onejoin.families import (REGISTRY, chorded_cycle, cycle_square, four_vertex_graph, generate, ladder_family,
                              ladder_join_instance, named, wheel)
from onejoin.planarity import is_planar, outer_vertices
from onejoin.solver import validate_witness


class TestSmallGraphs(TestCase):
    def test_four_vertex_graphs(self):
        self.assertEqual([four_vertex_graph(i).edge_count for i in range(1, 7)], [6, 5, 4, 4, 3, 3])
        with self.assertRaises(DomainError):
            four_vertex_graph(7)

    def test_wheel(self):
        w5 = wheel(5)
        self.assertEqual(w5.edge_count, 8)
        self.assertEqual(w5.degree(4), 4)
        with self.assertRaises(DomainError):
            wheel(3)


class TestLadder(TestCase):
    def test_ladder_10(self):
        instance = ladder_family(10)
        self.assertEqual(instance.graph.vertex_count, 10)
        self.assertEqual(instance.graph.edge_count, instance.expected('edge_count'))
        self.assertEqual(instance.graph.edge_count, 25)
        self.assertEqual(instance.witness.crossing_count, 4)
        self.assertTrue(validate_witness(instance.graph, instance.witness))

    def test_chords_on_outer_face(self):
        instance = ladder_family(6)
        outer = outer_vertices(instance.witness.planarization_embedding)
        self.assertTrue({0, 2, 3, 5} <= outer)

    def test_invalid_sizes(self):
        for n in (4, 7, 8, 12):
            with self.assertRaises(DomainError, msg=str(n)):
                ladder_family(n)

    def test_join_witness(self):
        for n in (6, 10):
            instance = ladder_join_instance(n)
            self.assertEqual(instance.join_factor, 'P1')
            self.assertTrue(validate_witness(join(instance.graph, standard_graph('empty', 1)),
                                             instance.join_witness))


class TestCycleSquare(TestCase):
    def test_cycle_square_8(self):
        instance = cycle_square(8)
        self.assertEqual(instance.graph.edge_count, 16)
        self.assertEqual(instance.join_witness.crossing_count, 8)
        self.assertTrue(validate_witness(join(instance.graph, standard_graph('empty', 2)), instance.join_witness))

    def test_invalid_sizes(self):
        with self.assertRaises(DomainError):
            cycle_square(7)
        with self.assertRaises(DomainError):
            cycle_square(4)


class TestChordedCycle(TestCase):
    def test_edge_count(self):
        for n in (5, 6, 7):
            instance = chorded_cycle(n)
            self.assertEqual(instance.graph.edge_count, 2 * n - 2)
            self.assertIsNotNone(is_planar(instance.graph))
        with self.assertRaises(DomainError):
            chorded_cycle(4)


class TestRegistry(TestCase):
    def test_registered_names(self):
        self.assertIn('3P2+3P1', REGISTRY)
        instance = named('(C3 ∪ P1)+4P1')
        self.assertFalse(instance.expected('one_planar'))
        self.assertEqual(instance.expected('crossing_number'), 6)
        self.assertEqual(instance.graph.vertex_count, 8)

    def test_multipartite_names(self):
        self.assertTrue(named('K_{4,4}').expected('one_planar'))
        self.assertFalse(named('K_{3,4,1}').expected('one_planar'))
        self.assertEqual(named('K_{5,3}').expected('crossing_number'), 4)
        self.assertFalse(named('K7').expected('one_planar'))

    def test_unknown(self):
        with self.assertRaises(UnknownFamilyError):
            named('C5')

    def test_generate(self):
        self.assertEqual(generate('ladder', ['10']).join_factor, 'P1')
        self.assertEqual(generate('cycle-square', ['8']).name, 'cycle-square-8')
        self.assertEqual(generate('named', ['K_{4,4}']).graph.edge_count, 16)
        with self.assertRaises(UnknownFamilyError):
            generate('petersen', [])
        with self.assertRaises(UnknownFamilyError):
            generate('named', [])
        with self.assertRaises(DomainError):
            generate('ladder', ['ten'])
