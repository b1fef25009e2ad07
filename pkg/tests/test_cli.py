# -*- coding: utf-8 -*-
"""Test the command line runner"""
import unittest
from unittest import mock

import sys
import os
import argparse
import io
import json
from contextlib import redirect_stdout

# Use local kordered version
sys.path.insert(0, os.path.dirname(os.path.realpath(__file__)) + "/../")

# pylint: disable=wrong-import-position
from kordered.cli import (
    BUDGET_ENV,
    EXIT_BUDGET,
    EXIT_FALSIFIED,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    SCHEMA,
    KOrderedRunner,
    RunConfig,
    default_budget,
    describe_graph,
    format_human,
    format_structured,
    print_version_info,
    return_arg_parser_doc,
    run,
)
from kordered.generators import gen_directed
from kordered.graph_io import load_graph
from kordered.order_oracle import DEFAULT_BUDGET, MODE_ORDERED_HAM
from tests.common import TESTDEST


def config_from(args):
    """Parse a command line into a RunConfig"""
    runner = KOrderedRunner()
    return RunConfig.from_namespace(runner.parse(args))


class TestParsing(unittest.TestCase):
    """Options to RunConfig"""

    def test_get_arg_parser(self):
        """Test getting the arg parser"""
        arg_parser_doc = return_arg_parser_doc()
        self.assertTrue(isinstance(arg_parser_doc, argparse.ArgumentParser))

    def test_ham_flag(self):
        """--ham selects the hamiltonian mode"""
        config = config_from(
            ["verify", "--family", "G", "--k", "2", "--parts", "4", "--order", "5", "--ham"]
        )
        self.assertEqual(config.mode, MODE_ORDERED_HAM)
        self.assertEqual((config.family, config.k, config.parts), ("G", 2, 4))
        self.assertTrue(config.reduce)

    def test_lists(self):
        """Comma separated sizes and marks"""
        config = config_from(["construct", "--family", "bracelet", "--sizes", "2,3,2,3", "--marks", "0,4,7"])
        self.assertEqual(config.sizes, (2, 3, 2, 3))
        self.assertEqual(config.marks, (0, 4, 7))

    def test_tour_marks(self):
        """Edge mode reads u-v pairs, vertex mode plain ids"""
        config = config_from(["tour", "--family", "complete", "--n", "5", "--marks", "0-1,2-3"])
        self.assertEqual(config.marks, ((0, 1), (2, 3)))
        self.assertEqual(config.tour_mode, "edge")
        config = config_from(
            ["tour", "--family", "complete", "--n", "5", "--mode", "vertex", "--marks", "0,2"]
        )
        self.assertEqual(config.marks, (0, 2))
        self.assertEqual(config.tour_mode, "vertex")

    def test_bad_tour_marks(self):
        """Malformed edges are a usage error"""
        with mock.patch("sys.stderr", io.StringIO()):
            with self.assertRaises(SystemExit):
                config_from(["tour", "--family", "complete", "--n", "5", "--marks", "0-1-2"])

    def test_budget_environment(self):
        """KORDERED_BUDGET sets the default budget"""
        with mock.patch.dict(os.environ, {BUDGET_ENV: "1234"}):
            self.assertEqual(default_budget(), 1234)
            config = config_from(["suite", "--only", "directed"])
            self.assertEqual(config.budget, 1234)
        with mock.patch.dict(os.environ, {BUDGET_ENV: "lots"}):
            self.assertEqual(default_budget(), DEFAULT_BUDGET)
        config = config_from(["suite", "--budget", "99"])
        self.assertEqual(config.budget, 99)

    def test_version(self):
        """Version line"""
        out = io.StringIO()
        with redirect_stdout(out):
            print_version_info()
        self.assertTrue(out.getvalue().startswith("kordered version "))


class TestVerify(unittest.TestCase):
    """verify subcommand"""

    def test_holds(self):
        """K_{3,3} is 4-ordered"""
        result = run(RunConfig("verify", family="H", k=2, m=1, order=4))
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual(result.report["status"], "holds")
        self.assertEqual(result.report["sequences"], 45)
        self.assertEqual(result.report["schema"], SCHEMA)
        self.assertEqual(result.report["command"], "verify")

    def test_expected_failure(self):
        """H(2, 2) fails as expected, with a certificate"""
        result = run(RunConfig("verify", family="H", k=2, m=2, order=4, expect="fails"))
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual(result.report["status"], "fails")
        self.assertEqual(result.report["certificate"]["kind"], "alternating")

    def test_unexpected_failure(self):
        """A failing verdict falsifies the default expectation"""
        result = run(RunConfig("verify", family="H", k=2, m=2, order=4))
        self.assertEqual(result.code, EXIT_FALSIFIED)

    def test_budget(self):
        """Budget exhaustion exits 3"""
        result = run(
            RunConfig("verify", family="G", k=2, parts=4, order=5, mode=MODE_ORDERED_HAM, budget=1)
        )
        self.assertEqual(result.code, EXIT_BUDGET)
        self.assertEqual(result.report["counterexample"], (0, 1, 2, 3, 4))

    def test_sampled(self):
        """Sampled hamiltonian check on G(2, 6)"""
        result = run(
            RunConfig(
                "verify", family="G", k=2, parts=6, order=5, mode=MODE_ORDERED_HAM, sample=20, seed=1
            )
        )
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual(result.report["sequences"], 20)

    def test_edge_ordered(self):
        """K_4 is 2-edge-ordered"""
        result = run(RunConfig("verify", family="complete", n=4, order=2, mode="edge-ordered"))
        self.assertEqual(result.code, EXIT_OK)

    def test_usage_errors(self):
        """Missing parameters and impossible samples exit 2"""
        self.assertEqual(run(RunConfig("verify", family="G", k=2, order=5)).code, EXIT_USAGE)
        self.assertEqual(run(RunConfig("verify", order=3)).code, EXIT_USAGE)
        self.assertEqual(run(RunConfig("verify", family="cycle", n=4)).code, EXIT_USAGE)
        result = run(RunConfig("verify", family="cycle", n=4, order=5, sample=3))
        self.assertEqual(result.code, EXIT_USAGE)
        self.assertEqual(result.report["status"], "usage-error")

    def test_missing_file(self):
        """Unreadable input exits 4"""
        result = run(RunConfig("verify", input_file=os.path.join(TESTDEST, "missing.txt"), order=3))
        self.assertEqual(result.code, EXIT_IO)

    def test_undecodable_file(self):
        """Binary input exits 2"""
        path = os.path.join(TESTDEST, "cli_binary.txt")
        with open(path, "wb") as handle:
            handle.write(b"\xff\xfe")
        try:
            result = run(RunConfig("generate", input_file=path))
        finally:
            os.remove(path)
        self.assertEqual(result.code, EXIT_USAGE)
        self.assertEqual(result.report["status"], "usage-error")


class TestOtherCommands(unittest.TestCase):
    """generate, construct, analyze, tour and suite"""

    def test_generate_to_file(self):
        """The written file loads back"""
        path = os.path.join(TESTDEST, "cli_generate.xml")
        result = run(RunConfig("generate", family="directed", k=3, l=4, output_file=path))
        try:
            self.assertEqual(result.code, EXIT_OK)
            self.assertEqual(result.report["written"], path)
            self.assertEqual(load_graph(path).graph, gen_directed(3, 4).graph)
        finally:
            os.remove(path)

    def test_describe_graph(self):
        """Directed bracelets report in- and out-degree ranges"""
        info = describe_graph(gen_directed(3, 4))
        self.assertEqual(info["outdeg"], [2, 2])
        self.assertEqual(info["indeg"], [2, 2])
        self.assertEqual(info["part_sizes"], [2, 2, 2, 2])

    def test_construct_sample(self):
        """Sampled constructions on G(2, 4)"""
        result = run(RunConfig("construct", family="G", k=2, parts=4, sample=20))
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual(result.report["built"], 20)
        self.assertEqual(result.report["failures"], [])

    def test_construct_marks(self):
        """A single explicit mark sequence"""
        result = run(RunConfig("construct", family="bracelet", sizes=(2, 3, 2, 3), marks=(0, 4, 7)))
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual(result.report["first_witness"]["marks"], [0, 4, 7])

    def test_construct_needs_bracelet(self):
        """Complete graphs have no construction"""
        result = run(RunConfig("construct", family="complete", n=5, marks=(0, 1, 2)))
        self.assertEqual(result.code, EXIT_USAGE)

    def test_analyze(self):
        """Connectivity, diameter and parity of G(2, 6)"""
        result = run(RunConfig("analyze", family="G", k=2, parts=6))
        report = result.report
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual((report["vertex_connectivity"], report["edge_connectivity"]), (4, 4))
        self.assertEqual(report["diameter"], 3)
        self.assertEqual(report["parity"]["message"], "bipartite, even vertex count")

    def test_analyze_with_order(self):
        """K_{3,3} meets the diameter bound exactly"""
        result = run(RunConfig("analyze", family="H", k=2, m=1, order=4))
        bound = result.report["bound"]
        self.assertEqual(result.code, EXIT_OK)
        self.assertTrue(bound["ordered"])
        self.assertTrue(bound["applicable"])
        self.assertEqual(bound["slack"], 0)
        self.assertIn("screens", result.report)

    def test_analyze_directed(self):
        """Necessary conditions for the directed bracelet"""
        result = run(RunConfig("analyze", family="directed", k=3, l=4, order=3))
        self.assertTrue(result.report["necessary"]["passes"])

    def test_tour_built(self):
        """Greedy tour in a complete digraph"""
        result = run(
            RunConfig("tour", family="complete", n=5, directed=True, marks=((0, 1), (2, 3)))
        )
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual(result.report["status"], "built")
        self.assertEqual(result.report["witness"], [0, 1, 2, 3])
        self.assertEqual(result.report["gate"]["required"], 4)

    def test_tour_refused(self):
        """The gate refuses a directed cycle"""
        result = run(
            RunConfig("tour", family="cycle", n=5, directed=True, marks=(0, 1, 2), tour_mode="vertex")
        )
        self.assertEqual(result.code, EXIT_FALSIFIED)
        self.assertEqual(result.report["status"], "refused")
        self.assertEqual(result.report["gate"]["required"], 8)

    def test_suite(self):
        """One fast row"""
        result = run(RunConfig("suite", only="counterexample"))
        self.assertEqual(result.code, EXIT_OK)
        self.assertEqual(len(result.report["rows"]), 1)
        self.assertIn("row 3", result.timings)


class TestReports(unittest.TestCase):
    """Structured and human rendering"""

    def test_structured_is_deterministic(self):
        """Same config, same bytes"""
        config = RunConfig("verify", family="H", k=2, m=2, order=4, expect="fails")
        first = format_structured(run(config).report)
        second = format_structured(run(config).report)
        self.assertEqual(first, second)
        parsed = json.loads(first)
        self.assertEqual(parsed["schema"], SCHEMA)
        self.assertEqual(list(parsed), sorted(parsed))

    def test_timings_stay_out_of_the_report(self):
        """Timings are only in the human rendering"""
        result = run(RunConfig("verify", family="H", k=2, m=1, order=4))
        self.assertNotIn("total", format_structured(result.report))
        text = format_human(result)
        self.assertIn("status: holds", text)
        self.assertIn("time total:", text)


if __name__ == "__main__":
    unittest.main()
