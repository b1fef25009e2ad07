# -*- coding: utf-8 -*-
"""Test connectivity, diameter and the structural screens"""
import unittest

import sys
import os

# Use local kordered version
sys.path.insert(0, os.path.dirname(os.path.realpath(__file__)) + "/../")

# pylint: disable=wrong-import-position
from kordered.generators import gen_bracelet, gen_directed, gen_G, gen_H, gen_P
from kordered.graph_core import (
    Graph,
    PreconditionError,
    complete_digraph,
    complete_graph,
    cycle_graph,
    path_graph,
)
from kordered.metrics import (
    bracelet_degree_audit,
    check_diameter_bound,
    check_directed_necessary,
    connectivity,
    diameter,
    edge_connectivity,
    exhaustive_connectivity,
    vertex_connectivity,
)
from kordered.order_oracle import MODE_ORDERED, Verdict, VerdictStatus, is_k_ordered


class TestConnectivity(unittest.TestCase):
    """Flow-based connectivity and diameter"""

    def test_cycle(self):
        """C_4 is 2-connected with diameter 2"""
        report = connectivity(cycle_graph(4))
        self.assertEqual(report.vertex_connectivity, 2)
        self.assertEqual(report.edge_connectivity, 2)
        self.assertEqual(report.min_degree, 2)
        self.assertEqual(report.diameter, 2)
        self.assertIsNone(report.min_indeg)
        self.assertFalse(report.directed)

    def test_uniform_bracelet(self):
        """G(2, 4) is 4-connected"""
        report = connectivity(gen_G(2, 4))
        self.assertEqual(report.vertex_connectivity, 4)
        self.assertEqual(report.edge_connectivity, 4)
        self.assertEqual(report.diameter, 2)

    def test_complete_digraph(self):
        """Complete digraphs have connectivity n-1 and diameter 1"""
        report = connectivity(complete_digraph(5))
        self.assertEqual(report.vertex_connectivity, 4)
        self.assertEqual(report.edge_connectivity, 4)
        self.assertEqual(report.min_indeg, 4)
        self.assertEqual(report.min_outdeg, 4)
        self.assertEqual(report.diameter, 1)
        self.assertTrue(report.directed)

    def test_path_and_disconnected(self):
        """Trees are 1-connected, disconnected graphs 0-connected"""
        self.assertEqual(vertex_connectivity(path_graph(4)), 1)
        self.assertEqual(edge_connectivity(path_graph(4)), 1)
        self.assertEqual(diameter(path_graph(4)), 3)
        split = Graph(4, [(0, 1), (2, 3)])
        self.assertEqual(vertex_connectivity(split), 0)
        self.assertEqual(edge_connectivity(split), 0)
        self.assertIsNone(diameter(split))

    def test_directed_cycle(self):
        """A directed cycle reaches everything but only one way"""
        d = cycle_graph(5, directed=True)
        self.assertEqual(vertex_connectivity(d), 1)
        self.assertEqual(edge_connectivity(d), 1)
        self.assertEqual(diameter(d), 4)

    def test_too_small(self):
        """At least two vertices"""
        with self.assertRaises(PreconditionError):
            connectivity(Graph(1))

    def test_exhaustive_agrees(self):
        """Flows and cut enumeration give the same numbers"""
        for g in [
            cycle_graph(5),
            complete_graph(4),
            path_graph(5),
            gen_H(2, 1),
            gen_directed(3, 3),
            cycle_graph(4, directed=True),
        ]:
            self.assertEqual(
                exhaustive_connectivity(g),
                (vertex_connectivity(g), edge_connectivity(g)),
                g,
            )

    def test_ordered_graphs_are_well_connected(self):
        """Certified k-ordered graphs are (k-1)-connected"""
        cases = [
            (gen_G(2, 4), 5),
            (gen_H(2, 1), 4),
            (complete_graph(5), 5),
            (cycle_graph(6), 3),
        ]
        for g, k in cases:
            verdict = is_k_ordered(g, k)
            self.assertTrue(verdict.holds, (g, k))
            self.assertGreaterEqual(connectivity(g).vertex_connectivity, k - 1, (g, k))


class TestDiameterBound(unittest.TestCase):
    """Diameter against the orderedness bound"""

    def test_k33_is_tight(self):
        """K_{3,3} reaches the bound 2"""
        report = check_diameter_bound(gen_H(2, 1), 2, Verdict(VerdictStatus.HOLDS, 4, MODE_ORDERED))
        self.assertTrue(report.applicable)
        self.assertTrue(report.satisfied)
        self.assertEqual(report.bound, 2)
        self.assertEqual(report.slack, 0)

    def test_uniform_family_bound(self):
        """G(2, 6) has diameter 3, the family bound"""
        report = check_diameter_bound(gen_G(2, 6), 2, Verdict(VerdictStatus.HOLDS, 5, MODE_ORDERED))
        self.assertEqual(report.diameter, 3)
        self.assertEqual(report.bound, 4)
        self.assertEqual(report.family_bound, 3)
        self.assertEqual(report.slack, 1)

    def test_not_applicable(self):
        """A failed verdict gives no bound to check"""
        report = check_diameter_bound(path_graph(8), 2, Verdict(VerdictStatus.FAILS, 4, MODE_ORDERED))
        self.assertFalse(report.applicable)
        self.assertTrue(report.satisfied)

    def test_violation(self):
        """A long path claimed 4-ordered breaks the bound"""
        with self.assertLogs(level="ERROR"):
            report = check_diameter_bound(
                path_graph(8), 2, Verdict(VerdictStatus.HOLDS, 4, MODE_ORDERED)
            )
        self.assertFalse(report.satisfied)
        self.assertEqual(report.slack, -4)


class TestScreens(unittest.TestCase):
    """Directed necessary conditions and bracelet degree screens"""

    def test_directed_necessary(self):
        """2-diregular bracelets pass for k = 3, 1-diregular ones do not"""
        report = check_directed_necessary(gen_directed(3, 4), 3)
        self.assertTrue(report.passes)
        self.assertEqual(report.vertex_connectivity, 2)
        report = check_directed_necessary(gen_directed(2, 4), 3)
        self.assertFalse(report.passes)
        self.assertIn("vertex 0: outdeg 1 < 2", report.violations)
        self.assertIn("vertex connectivity 1 < 2", report.violations)

    def test_directed_necessary_needs_digraph(self):
        """Undirected graphs are refused"""
        with self.assertRaises(PreconditionError):
            check_directed_necessary(cycle_graph(4), 2)

    def test_low_degree_audit(self):
        """P(2, 6) passes every screen"""
        audit = bracelet_degree_audit(gen_P(2, 6), 2)
        self.assertTrue(audit.passes)
        self.assertEqual(audit.min_degree, 3)
        self.assertEqual(audit.max_degree, 6)
        self.assertEqual(audit.nonadjacent_min, 3)
        self.assertEqual(audit.distance_two_sums, (3, 4, 5, 6, 4, 4))

    def test_separator_screen(self):
        """H(2, 2) has two small non-adjacent parts"""
        audit = bracelet_degree_audit(gen_H(2, 2), 2)
        self.assertFalse(audit.passes)
        self.assertIn("separator", [name for name, _ in audit.failures])

    def test_min_degree_screen(self):
        """A cycle has degree 2 < 3"""
        audit = bracelet_degree_audit(gen_bracelet((1, 1, 1, 1, 1, 1)), 2)
        self.assertEqual(audit.failures[0][0], "min-degree")

    def test_degree_window(self):
        """Seven parts with degrees between 2k-1 and 2k+1"""
        audit = bracelet_degree_audit(gen_bracelet((1, 2, 2, 2, 2, 2, 2)), 2)
        self.assertEqual(audit.min_degree, 3)
        self.assertEqual(audit.max_degree, 4)
        self.assertIn("degree-window", [name for name, _ in audit.failures])

    def test_passing_seven_parts(self):
        """Two small parts among large ones"""
        audit = bracelet_degree_audit(gen_bracelet((1, 1, 3, 3, 3, 3, 3)), 2)
        self.assertTrue(audit.passes)
        self.assertEqual(audit.min_degree, 4)
        self.assertEqual(audit.max_degree, 6)

    def test_large_part_neighborhood(self):
        """A part larger than k with two neighbors and k vertices left outside"""
        audit = bracelet_degree_audit(gen_bracelet((5, 1, 1, 1, 1, 1)), 4)
        self.assertIn(("part-neighborhood", "part 0: |N| = 2 < 8"), audit.failures)


if __name__ == "__main__":
    unittest.main()
