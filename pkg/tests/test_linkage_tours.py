# -*- coding: utf-8 -*-
"""Test edge-disjoint paths, swap repair and the greedy constructions"""
import itertools
import unittest

import sys
import os

import networkx as nx

# Use local kordered version
sys.path.insert(0, os.path.dirname(os.path.realpath(__file__)) + "/../")

# pylint: disable=wrong-import-position
from kordered.generators import gen_bracelet, gen_G
from kordered.graph_core import (
    BudgetExceeded,
    GraphError,
    PreconditionError,
    complete_digraph,
    complete_graph,
    cycle_graph,
    path_graph,
    verify_ordered_cycle,
    verify_tour,
)
from kordered.linkage_tours import (
    GreedyTrace,
    PathSystem,
    find_edge_disjoint_paths,
    greedy_edge_tour,
    greedy_undirected,
    greedy_vertex_cycle,
    linkage_to_edge_tour,
    repair_path_system,
    round_robin_pairs,
    tour_to_linkage,
)
from kordered.order_oracle import find_ordered_tour


def _exhaustive_linkage(g, pairs):
    """Some choice of simple paths, one per pair, shares no edge"""
    graph = g.to_networkx()
    options = [list(nx.all_simple_paths(graph, s, t)) for s, t in pairs]
    for choice in itertools.product(*options):
        keys = [g.edge_key(p[j], p[j + 1]) for p in choice for j in range(len(p) - 1)]
        if len(keys) == len(set(keys)):
            return True
    return False


class TestPathSystems(unittest.TestCase):
    """Edge-disjoint path search and validation"""

    def test_two_halves_of_a_cycle(self):
        """The same pair twice uses both halves of C_4"""
        system = find_edge_disjoint_paths(cycle_graph(4), ((0, 2), (0, 2)))
        self.assertEqual(system.paths, ((0, 1, 2), (0, 3, 2)))
        self.assertTrue(system.validate(cycle_graph(4)))

    def test_crossing_pairs_on_a_cycle(self):
        """Crossing pairs on C_4 would need a shared edge"""
        self.assertIsNone(find_edge_disjoint_paths(cycle_graph(4), ((0, 2), (1, 3))))

    def test_tree(self):
        """Nested pairs on a path share the middle edge"""
        self.assertIsNone(find_edge_disjoint_paths(path_graph(4), ((0, 3), (1, 2))))

    def test_uniform_bracelet(self):
        """Four pairs across G(2, 4)"""
        g = gen_G(2, 4)
        system = find_edge_disjoint_paths(g, ((0, 4), (1, 5), (2, 6), (3, 7)))
        self.assertIsNotNone(system)
        self.assertTrue(system.validate(g))

    def test_equal_ends(self):
        """A pair with equal ends gets a single-vertex path"""
        system = find_edge_disjoint_paths(cycle_graph(4), ((1, 1), (0, 1)))
        self.assertEqual(system.paths, ((1,), (0, 1)))

    def test_bad_terminals_and_budget(self):
        """Unknown terminals and a tiny budget"""
        with self.assertRaises(GraphError):
            find_edge_disjoint_paths(cycle_graph(4), ((0, 4),))
        with self.assertRaises(BudgetExceeded):
            find_edge_disjoint_paths(gen_G(2, 4), ((0, 4),), budget=1)

    def test_validate_reasons(self):
        """Every broken system names its defect"""
        c4 = cycle_graph(4)
        cases = [
            (PathSystem(((0, 1),), ()), "bad-system"),
            (PathSystem(((0, 2),), ((0, 1),)), "bad-endpoints"),
            (PathSystem(((0, 2),), ((0, 2),)), "missing-edge"),
            (PathSystem(((0, 1), (1, 0)), ((0, 1), (1, 0))), "repeated-edge"),
        ]
        for system, reason in cases:
            self.assertEqual(system.validate(c4).reason, reason)

    def test_agrees_with_exhaustive_choice(self):
        """Search and plain enumeration agree on small graphs"""
        graphs = [
            cycle_graph(5),
            complete_graph(4),
            complete_graph(5),
            gen_bracelet((1, 1, 1, 2)).graph,
            cycle_graph(4, directed=True),
            complete_digraph(3),
        ]
        for g in graphs:
            self.assertLessEqual(g.edge_count, 10)
            ends = [(s, t) for s in g.vertices() for t in g.vertices() if s != t]
            for pairs in itertools.combinations_with_replacement(ends, 2):
                system = find_edge_disjoint_paths(g, pairs)
                self.assertEqual(system is not None, _exhaustive_linkage(g, pairs), (g, pairs))
                if system is not None:
                    self.assertTrue(system.validate(g))
        k4 = complete_graph(4)
        crowded = [
            ((0, 1), (0, 1), (0, 1)),
            ((0, 1), (0, 1), (0, 1), (0, 1)),
            ((0, 2), (1, 3), (0, 3)),
        ]
        for pairs in crowded:
            found = find_edge_disjoint_paths(k4, pairs)
            self.assertEqual(found is not None, _exhaustive_linkage(k4, pairs), pairs)


class TestSwapRepair(unittest.TestCase):
    """Round-robin systems turned into ordered tours"""

    def test_round_robin_pairs(self):
        """v_1 -> u_1 -> v_2 -> u_2 -> v_1"""
        self.assertEqual(
            round_robin_pairs(((0, 1), (2, 3))), ((0, 1), (1, 2), (2, 3), (3, 0))
        )

    def test_already_in_place(self):
        """No swap when every slot holds its edge"""
        g = complete_graph(4)
        marks = ((0, 1), (2, 3))
        system = PathSystem(round_robin_pairs(marks), ((0, 1), (1, 2), (2, 3), (3, 0)))
        repaired, swaps = repair_path_system(g, marks, system)
        self.assertEqual(swaps, 0)
        self.assertEqual(repaired, system)
        self.assertEqual(linkage_to_edge_tour(g, marks, system).walk, (0, 1, 2, 3))

    def test_marked_edge_on_another_path(self):
        """The first marked edge is swapped out of the connector path"""
        g = complete_graph(5)
        marks = ((0, 1), (2, 3))
        system = PathSystem(
            round_robin_pairs(marks), ((0, 3, 1), (1, 0, 2), (2, 3), (3, 4, 0))
        )
        self.assertTrue(system.validate(g))
        repaired, swaps = repair_path_system(g, marks, system)
        self.assertEqual(swaps, 1)
        self.assertEqual(repaired.paths, ((0, 1), (1, 3, 0, 2), (2, 3), (3, 4, 0)))
        tour = linkage_to_edge_tour(g, marks, system)
        self.assertEqual(tour.walk, (0, 1, 3, 0, 2, 3, 4))
        self.assertTrue(verify_tour(g, tour, marks))

    def test_mismatched_system(self):
        """Pairs must follow the marked edges"""
        g = complete_graph(4)
        with self.assertRaises(PreconditionError):
            repair_path_system(g, ((0, 1), (2, 3)), PathSystem(((0, 1),), ((0, 1),)))


class TestGreedy(unittest.TestCase):
    """Greedy constructions and their gates"""

    def test_edge_tour_in_complete_digraph(self):
        """K*_5 meets the gate for k = 2 exactly"""
        d = complete_digraph(5)
        trace = GreedyTrace()
        tour = greedy_edge_tour(d, ((0, 1), (2, 3)), 2, trace)
        self.assertTrue(verify_tour(d, tour, ((0, 1), (2, 3))))
        self.assertEqual((trace.connectivity, trace.diameter, trace.required), (4, 1, 4))
        self.assertEqual(len(trace.rounds), 4)
        self.assertEqual(trace.swaps, 0)

    def test_edge_gate_refuses(self):
        """K*_3 is not arc-connected enough"""
        with self.assertRaises(PreconditionError):
            greedy_edge_tour(complete_digraph(3), ((0, 1), (1, 2)), 2)
        with self.assertRaises(PreconditionError):
            greedy_edge_tour(complete_graph(5), ((0, 1), (2, 3)), 2)

    def test_vertex_cycle(self):
        """Complete digraphs give the marks as the cycle"""
        cycle = greedy_vertex_cycle(complete_digraph(6), (0, 1, 2), 3)
        self.assertEqual(cycle.vertices, (0, 1, 2))
        cycle = greedy_vertex_cycle(complete_digraph(4), (0, 1, 2, 3), 4)
        self.assertEqual(cycle.vertices, (0, 1, 2, 3))

    def test_vertex_gate_refuses(self):
        """A directed cycle has connectivity 1 and diameter 4"""
        trace = GreedyTrace()
        with self.assertRaises(PreconditionError) as context:
            greedy_vertex_cycle(cycle_graph(5, directed=True), (0, 1, 2), 3, trace)
        self.assertIn("vertex connectivity 1 < 8", str(context.exception))
        self.assertEqual(trace.required, 8)
        with self.assertRaises(GraphError):
            greedy_vertex_cycle(complete_digraph(4), (0,), 0)

    def test_single_mark(self):
        """One mark closes on a shortest cycle through it"""
        trace = GreedyTrace()
        cycle = greedy_vertex_cycle(complete_digraph(5), (0,), 1, trace)
        self.assertEqual(cycle.vertices, (0, 1, 2))
        self.assertEqual(cycle.marked_positions, (0,))
        self.assertEqual(trace.required, 0)
        self.assertEqual(trace.connectivity, 4)
        self.assertEqual(trace.rounds, [((0, 0), (0, 1, 2, 0))])
        self.assertEqual(greedy_vertex_cycle(complete_digraph(4), (0,), 1).vertices, (0, 1, 2))
        g = complete_graph(4)
        cycle = greedy_undirected(g, (2,), 1, mode="vertex")
        self.assertEqual(cycle.vertices, (2, 0, 1))
        self.assertTrue(verify_ordered_cycle(g, cycle, (2,)))

    def test_undirected_edge_mode(self):
        """K_6 passes the undirected gate for k = 2"""
        g = complete_graph(6)
        tour = greedy_undirected(g, ((0, 1), (2, 3)), 2)
        self.assertTrue(verify_tour(g, tour, ((0, 1), (2, 3))))
        with self.assertRaises(PreconditionError):
            greedy_undirected(cycle_graph(4), ((0, 1), (2, 3)), 2)

    def test_undirected_vertex_mode(self):
        """Two marks of K_7 close through a third vertex"""
        g = complete_graph(7)
        cycle = greedy_undirected(g, (0, 1), 2, mode="vertex")
        self.assertEqual(cycle.vertices, (0, 1, 2))
        self.assertTrue(verify_ordered_cycle(g, cycle, (0, 1)))

    def test_undirected_arguments(self):
        """Mode and graph kind are checked"""
        with self.assertRaises(GraphError):
            greedy_undirected(complete_graph(6), ((0, 1),), 1, mode="both")
        with self.assertRaises(PreconditionError):
            greedy_undirected(complete_digraph(6), ((0, 1),), 1)


class TestTourToLinkage(unittest.TestCase):
    """Linkages read off ordered tours"""

    def test_complete_graph(self):
        """Both pairs route through vertex 4"""
        g = complete_graph(6)
        system = tour_to_linkage(g, ((0, 1), (2, 3)))
        self.assertEqual(system.paths, ((0, 4, 1), (2, 4, 3)))
        self.assertTrue(system.validate(g))

    def test_cycle(self):
        """One pair on C_4"""
        system = tour_to_linkage(cycle_graph(4), ((0, 2),))
        self.assertEqual(system.paths, ((0, 1, 2),))

    def test_equal_ends(self):
        """Pairs with equal ends need no tour"""
        system = tour_to_linkage(cycle_graph(4), ((1, 1),))
        self.assertEqual(system.paths, ((1,),))

    def test_provider(self):
        """The tour provider is pluggable"""
        calls = []

        def provider(g, marks, budget):
            calls.append(tuple(marks))
            return find_ordered_tour(g, marks, budget)

        system = tour_to_linkage(complete_graph(6), ((0, 1), (2, 3)), provider)
        self.assertEqual(len(calls), 1)
        self.assertIsNotNone(system)
        self.assertIsNone(tour_to_linkage(complete_graph(6), ((0, 1),), lambda g, m, b: None))

    def test_degree_gate(self):
        """Minimum degree 2k is required"""
        with self.assertRaises(PreconditionError):
            tour_to_linkage(path_graph(3), ((0, 2),))
        with self.assertRaises(PreconditionError):
            tour_to_linkage(complete_digraph(4), ((0, 2),))


if __name__ == "__main__":
    unittest.main()
