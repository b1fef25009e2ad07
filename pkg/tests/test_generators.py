# -*- coding: utf-8 -*-
"""Test the graph family generators"""
import unittest

import sys
import os

# Use local kordered version
sys.path.insert(0, os.path.dirname(os.path.realpath(__file__)) + "/../")

# pylint: disable=wrong-import-position
from kordered.generators import (
    FamilyId,
    bracelet_specs,
    canonical_spec,
    family_from_name,
    gen_bracelet,
    gen_complete,
    gen_counterexample,
    gen_cycle,
    gen_directed,
    gen_G,
    gen_H,
    gen_P,
)
from kordered.graph_core import GraphError, is_bipartite
from tests.common import G24_PARTS


class TestFamilies(unittest.TestCase):
    """Sizes, degrees and parameter checks of every family"""

    def test_uniform(self):
        """G(k, m) is 2k-regular"""
        bg = gen_G(2, 4)
        self.assertEqual(bg.parts, G24_PARTS)
        self.assertEqual(set(bg.graph.degrees()), {4})
        self.assertEqual((bg.family, bg.params), ("G", (2, 4)))
        self.assertEqual(gen_G(3, 6).graph.edge_count, 54)
        for k, parts in [(0, 4), (2, 5), (2, 2)]:
            with self.assertRaises(GraphError):
                gen_G(k, parts)

    def test_h_pattern(self):
        """H(k, m) is (2k-1)-regular and H(2, 1) is K_{3,3}"""
        k33 = gen_H(2, 1)
        self.assertEqual(k33.part_sizes, (1, 1, 2, 2))
        self.assertEqual(k33.graph.edge_count, 9)
        self.assertTrue(is_bipartite(k33))
        self.assertEqual(set(gen_H(3, 2).graph.degrees()), {5})
        with self.assertRaises(GraphError):
            gen_H(1, 1)

    def test_low_degree(self):
        """P(k, m) has minimum degree 2k-1"""
        p5 = gen_P(2, 5)
        self.assertEqual(p5.part_sizes, (1, 1, 2, 3, 3))
        self.assertEqual(min(p5.graph.degrees()), 3)
        self.assertEqual(max(p5.graph.degrees()), 5)
        p6 = gen_P(2, 6)
        self.assertEqual(min(p6.graph.degrees()), 3)
        self.assertEqual(max(p6.graph.degrees()), 6)
        with self.assertRaises(GraphError):
            gen_P(2, 4)

    def test_directed(self):
        """Directed bracelets are (k-1)-diregular"""
        bg = gen_directed(3, 4)
        self.assertTrue(bg.directed)
        self.assertEqual(bg.n, 8)
        for v in bg.graph.vertices():
            self.assertEqual(bg.graph.out_degree(v), 2)
            self.assertEqual(bg.graph.in_degree(v), 2)
        with self.assertRaises(GraphError):
            gen_directed(1, 4)
        with self.assertRaises(GraphError):
            gen_directed(3, 2)

    def test_counterexample(self):
        """The big independent part has 2k neighbors"""
        bg = gen_counterexample(2, (2, 2, 2))
        self.assertEqual(bg.part_sizes, (2, 5, 2, 2, 2, 2))
        self.assertEqual(bg.special_part, 1)
        self.assertEqual(bg.neighborhood_size(1), 4)
        with self.assertRaises(GraphError):
            gen_counterexample(2, (1, 2))

    def test_plain_families(self):
        """Explicit bracelets, complete graphs and cycles"""
        self.assertEqual(gen_bracelet((1, 2, 3)).params, (1, 2, 3))
        self.assertTrue(gen_bracelet((1, 1, 1), directed=True).directed)
        self.assertEqual(gen_complete(4).edge_count, 6)
        self.assertEqual(gen_complete(4, directed=True).edge_count, 12)
        self.assertEqual(gen_cycle(6).edge_count, 6)
        with self.assertRaises(GraphError):
            gen_complete(1)
        with self.assertRaises(GraphError):
            gen_bracelet((1, 1))

    def test_family_names(self):
        """Command-line names map to families"""
        self.assertIs(family_from_name("G"), FamilyId.G_UNIFORM)
        self.assertIs(family_from_name("counterexample"), FamilyId.COUNTEREXAMPLE)
        with self.assertRaises(GraphError):
            family_from_name("petersen")


class TestEnumeration(unittest.TestCase):
    """Canonical bracelet specs"""

    def test_canonical_spec(self):
        """Least rotation or reflection"""
        self.assertEqual(canonical_spec((3, 1, 2)), (1, 2, 3))
        self.assertEqual(canonical_spec((2, 1, 1, 3)), (1, 1, 2, 3))
        self.assertEqual(canonical_spec((1, 3, 1, 2)), (1, 2, 1, 3))

    def test_bracelet_specs(self):
        """Each bracelet appears once"""
        specs = [spec.part_sizes for spec in bracelet_specs(3, 2)]
        self.assertEqual(specs, [(1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)])
        self.assertEqual(len(list(bracelet_specs(4, 2))), 6)
        for spec in bracelet_specs(5, 3, min_size=2):
            self.assertGreaterEqual(min(spec.part_sizes), 2)


if __name__ == "__main__":
    unittest.main()
