#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""\
Generate, construct, verify and analyze k-ordered graphs from the command line

Every subcommand builds a report dictionary. The structured format prints it as
sorted JSON, so identical arguments and seed give byte-identical output; the human
format is rendered from the same dictionary, with timings appended.

Exit codes: 0 as expected, 1 falsified, 2 usage error, 3 budget exhausted,
4 I/O failure.
"""

__version__ = "1.0.0"
__author__ = "Devillez Louis, Kjell Magne Fauske"
__maintainer__ = "Deville Louis"
__email__ = "louis.devillez@gmail.com"

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .constructive import construct_cycle
from .generators import (
    FamilyId,
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
from .graph_core import (
    BraceletGraph,
    BudgetExceeded,
    ConstructionError,
    GraphError,
    KOrderedError,
    OrderedCycle,
    PreconditionError,
    as_graph,
    verify_ordered_cycle,
)
from .graph_io import load_graph, save_graph
from .linkage_tours import (
    GreedyTrace,
    greedy_edge_tour,
    greedy_undirected,
    greedy_vertex_cycle,
)
from .metrics import (
    bracelet_degree_audit,
    check_diameter_bound,
    check_directed_necessary,
    connectivity,
)
from .order_oracle import (
    DEFAULT_BUDGET,
    MODE_EDGE_ORDERED,
    MODE_ORDERED,
    MODE_ORDERED_HAM,
    VerdictStatus,
    canonical_sequences,
    is_k_edge_ordered,
    is_k_ordered,
    neighborhood_obstruction,
    parity_audit,
    sample_sequences,
)
from .suite import FAIL, RESOURCE_EXCEEDED, TAGS, SuiteContext, run_suite

SCHEMA = "kordered.report/1"
BUDGET_ENV = "KORDERED_BUDGET"

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4


def default_budget() -> int:
    """Node budget from KORDERED_BUDGET, or DEFAULT_BUDGET"""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        logging.warning("Ignoring %s=%r: not an integer", BUDGET_ENV, raw)
        return DEFAULT_BUDGET


def _int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma separated integers: {text}") from err


def _edge_list(text: str) -> Tuple[Tuple[int, int], ...]:
    edges = []
    for item in text.split(","):
        ends = item.strip().split("-")
        if len(ends) != 2:
            raise argparse.ArgumentTypeError(f"expected edges as u-v pairs: {item}")
        try:
            edges.append((int(ends[0]), int(ends[1])))
        except ValueError as err:
            raise argparse.ArgumentTypeError(f"expected edges as u-v pairs: {item}") from err
    return tuple(edges)


def return_arg_parser_doc():
    """
    Methode to return the arg parser of KOrderedRunner to help generate the doc
    """
    return KOrderedRunner().arg_parser


@dataclass
class RunConfig:  # pylint: disable=too-many-instance-attributes
    """Everything a run depends on; a fixed config and seed give a fixed report"""

    command: str
    family: Optional[str] = None
    k: Optional[int] = None
    parts: Optional[int] = None
    m: Optional[int] = None
    l: Optional[int] = None
    n: Optional[int] = None
    filler: Tuple[int, ...] = ()
    sizes: Tuple[int, ...] = ()
    directed: bool = False
    input_file: Optional[str] = None
    output_file: Optional[str] = None
    order: Optional[int] = None
    mode: str = MODE_ORDERED
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    expect: str = "holds"
    sample: Optional[int] = None
    seed: int = 0
    reduce: bool = True
    marks: Tuple = ()
    sweep: bool = False
    tour_mode: str = "edge"
    only: Optional[str] = None
    report: str = "human"
    verbose: bool = False

    @classmethod
    def from_namespace(cls, options: argparse.Namespace) -> "RunConfig":
        """Build a config from parsed command-line options"""
        mode = getattr(options, "mode", MODE_ORDERED)
        if getattr(options, "ham", False) and mode == MODE_ORDERED:
            mode = MODE_ORDERED_HAM
        return cls(
            command=options.command,
            family=getattr(options, "family", None),
            k=getattr(options, "k", None),
            parts=getattr(options, "parts", None),
            m=getattr(options, "m", None),
            l=getattr(options, "l", None),
            n=getattr(options, "n", None),
            filler=getattr(options, "filler", ()) or (),
            sizes=getattr(options, "sizes", ()) or (),
            directed=getattr(options, "directed", False),
            input_file=getattr(options, "input_file", None),
            output_file=getattr(options, "output_file", None),
            order=getattr(options, "order", None),
            mode=mode if options.command == "verify" else MODE_ORDERED,
            budget=options.budget if options.budget is not None else default_budget(),
            workers=options.workers,
            expect=getattr(options, "expect", "holds"),
            sample=getattr(options, "sample", None),
            seed=options.seed,
            reduce=not getattr(options, "no_reduce", False),
            marks=getattr(options, "marks", None) or (),
            sweep=getattr(options, "sweep", False),
            tour_mode=mode if options.command == "tour" else "edge",
            only=getattr(options, "only", None),
            report=options.report,
            verbose=options.verbose,
        )


@dataclass
class RunResult:
    """Exit code, deterministic report, and timings kept out of the report"""

    code: int
    report: Dict
    timings: Dict[str, float] = field(default_factory=dict)


#### Report rendering


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def format_structured(report: Dict) -> str:
    """Sorted, indented JSON"""
    return json.dumps(_jsonable(report), sort_keys=True, indent=2)


def _human_lines(value, indent=0) -> List[str]:
    pad = "  " * indent
    lines = []
    for key in sorted(value):
        item = value[key]
        if isinstance(item, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_human_lines(item, indent + 1))
        elif isinstance(item, (list, tuple)) and item and isinstance(item[0], dict):
            lines.append(f"{pad}{key}:")
            for entry in item:
                lines.extend(_human_lines(entry, indent + 1))
                lines.append("")
        elif isinstance(item, (list, tuple)):
            lines.append(f"{pad}{key}: {' '.join(str(v) for v in item)}")
        else:
            lines.append(f"{pad}{key}: {item}")
    return lines


def format_human(result: RunResult) -> str:
    """Readable rendering of the report, timings last"""
    lines = _human_lines(result.report)
    for name, seconds in sorted(result.timings.items()):
        lines.append(f"time {name}: {seconds:.3f}s")
    return "\n".join(lines)


def describe_graph(obj) -> Dict:
    """Size, degree range and family data of a graph or bracelet"""
    g = as_graph(obj)
    info = {"n": g.n, "edges": g.edge_count, "directed": g.directed}
    if g.directed:
        outs = [g.out_degree(v) for v in g.vertices()] or [0]
        ins = [g.in_degree(v) for v in g.vertices()] or [0]
        info["outdeg"] = [min(outs), max(outs)]
        info["indeg"] = [min(ins), max(ins)]
    else:
        degrees = g.degrees() or (0,)
        info["degree"] = [min(degrees), max(degrees)]
    if isinstance(obj, BraceletGraph):
        info["family"] = obj.family
        info["params"] = list(obj.params)
        info["part_sizes"] = list(obj.part_sizes)
    return info


def _cycle_report(cycle: Optional[OrderedCycle]):
    return None if cycle is None else list(cycle.vertices)


def _witness_report(witness):
    if witness is None:
        return None
    if isinstance(witness, OrderedCycle):
        return list(witness.vertices)
    return list(witness.walk)


def _sampled(count: int, order: int, samples: int, seed: int):
    if not 1 <= order <= count:
        raise PreconditionError(f"cannot sample {order} distinct items out of {count}")
    return sample_sequences(count, order, samples, seed)


class KOrderedRunner:
    """Command-line runner: parses options and dispatches to the subcommands"""

    def __init__(self):
        self.arg_parser = argparse.ArgumentParser(
            prog="kordered",
            description="Generate, construct, verify and analyze k-ordered graphs",
        )
        self._set_up_options()

    def _add_booloption(self, parser, *args, **kwargs):
        kwargs["action"] = "store_true"
        parser.add_argument(*args, **kwargs)

    def _add_common(self, parser):
        parser.add_argument(
            "--report",
            dest="report",
            choices=("human", "structured"),
            default="human",
            help="Report format; structured is sorted JSON",
        )
        parser.add_argument(
            "--budget",
            dest="budget",
            type=int,
            default=None,
            help=f"Node budget per search (default ${BUDGET_ENV} or {DEFAULT_BUDGET})",
        )
        parser.add_argument(
            "--workers",
            dest="workers",
            type=int,
            default=1,
            help="Worker processes for sequence sweeps",
        )
        parser.add_argument(
            "--seed", dest="seed", type=int, default=0, help="Seed for sampled sequences"
        )
        self._add_booloption(
            parser, "--verbose", dest="verbose", help="Verbose output (useful for debugging)"
        )

    def _add_graph_selection(self, parser):
        parser.add_argument(
            "--family",
            dest="family",
            choices=[f.value for f in FamilyId],
            help="Graph family to generate",
        )
        parser.add_argument("--k", dest="k", type=int, help="Family parameter k")
        parser.add_argument("--parts", dest="parts", type=int, help="Number of parts of G")
        parser.add_argument("--m", dest="m", type=int, help="Family parameter m (H, P)")
        parser.add_argument("--l", dest="l", type=int, help="Number of parts of the directed family")
        parser.add_argument("--n", dest="n", type=int, help="Vertex count (complete, cycle)")
        parser.add_argument(
            "--filler",
            dest="filler",
            type=_int_list,
            help="Extra part sizes of the counterexample family, e.g. 2,2",
        )
        parser.add_argument(
            "--sizes", dest="sizes", type=_int_list, help="Part sizes of a bracelet, e.g. 1,2,3,4"
        )
        self._add_booloption(parser, "--directed", dest="directed", help="Directed variant")
        parser.add_argument(
            "-i", "--input", dest="input_file", help="Read the graph from a file instead"
        )

    def _set_up_options(self):
        parser = self.arg_parser
        parser.add_argument(
            "-V",
            "--version",
            dest="printversion",
            action="store_true",
            help="Print version information and exit",
        )
        commands = parser.add_subparsers(dest="command")

        generate = commands.add_parser("generate", help="Build a graph and describe or save it")
        self._add_graph_selection(generate)
        generate.add_argument("-o", "--output", dest="output_file", help="Write the graph here")
        self._add_common(generate)

        construct = commands.add_parser(
            "construct", help="Build ordered cycles with the polynomial-time constructions"
        )
        self._add_graph_selection(construct)
        construct.add_argument("--marks", dest="marks", type=_int_list, help="Marks, e.g. 0,3,5")
        construct.add_argument("--order", dest="order", type=int, help="Number of marks to sweep")
        self._add_booloption(
            construct, "--sweep", dest="sweep", help="All mark sequences up to symmetry"
        )
        construct.add_argument("--sample", dest="sample", type=int, help="Random mark sequences")
        self._add_common(construct)

        verify = commands.add_parser("verify", help="Decide orderedness by exhaustive search")
        self._add_graph_selection(verify)
        verify.add_argument("--order", dest="order", type=int, required=True, help="Order k")
        verify.add_argument(
            "--mode",
            dest="mode",
            choices=(MODE_ORDERED, MODE_ORDERED_HAM, MODE_EDGE_ORDERED),
            default=MODE_ORDERED,
            help="Property to decide",
        )
        self._add_booloption(verify, "--ham", dest="ham", help="Same as --mode ordered-ham")
        verify.add_argument(
            "--expect",
            dest="expect",
            choices=("holds", "fails"),
            default="holds",
            help="Expected verdict; exit 1 if the other one comes out",
        )
        verify.add_argument(
            "--sample", dest="sample", type=int, help="Check N seeded sequences instead"
        )
        self._add_booloption(
            verify, "--no-reduce", dest="no_reduce", help="Disable symmetry reduction"
        )
        self._add_common(verify)

        analyze = commands.add_parser("analyze", help="Connectivity, diameter and screens")
        self._add_graph_selection(analyze)
        analyze.add_argument(
            "--order", dest="order", type=int, help="Also check the bounds for this order"
        )
        self._add_common(analyze)

        tour = commands.add_parser("tour", help="Greedy ordered tours and cycles")
        self._add_graph_selection(tour)
        tour.add_argument(
            "--mode", dest="mode", choices=("edge", "vertex"), default="edge", help="Marks kind"
        )
        tour.add_argument(
            "--marks",
            dest="marks",
            required=True,
            help="Edges u-v,u-v in edge mode, vertices v,v,v in vertex mode",
        )
        self._add_common(tour)

        suite = commands.add_parser("suite", help="Run the acceptance matrix")
        suite.add_argument("--only", dest="only", choices=TAGS, help="Only rows with this tag")
        self._add_common(suite)

    def parse(self, args=None) -> argparse.Namespace:
        """Parse args (sys.argv[1:] by default)"""
        options = self.arg_parser.parse_args(args)
        if options.command == "tour":
            parse = _edge_list if options.mode == "edge" else _int_list
            try:
                options.marks = parse(options.marks)
            except argparse.ArgumentTypeError as err:
                self.arg_parser.error(str(err))
        return options

    #### Subcommands

    @staticmethod
    def build_graph(config: RunConfig):
        """Graph or bracelet selected by the config"""
        if config.input_file:
            return load_graph(config.input_file)
        if config.family is None:
            raise GraphError("either --family or --input is required")
        family = family_from_name(config.family)

        def need(*names):
            missing = [name for name in names if getattr(config, name) is None]
            if missing:
                flags = ", ".join(f"--{name}" for name in missing)
                raise GraphError(f"family {family.value} needs {flags}")

        if family is FamilyId.G_UNIFORM:
            need("k", "parts")
            return gen_G(config.k, config.parts)
        if family is FamilyId.H_PATTERN:
            need("k", "m")
            return gen_H(config.k, config.m)
        if family is FamilyId.P_LOWDEG:
            need("k", "m")
            return gen_P(config.k, config.m)
        if family is FamilyId.DIRECTED_BRACELET:
            need("k", "l")
            return gen_directed(config.k, config.l)
        if family is FamilyId.COUNTEREXAMPLE:
            need("k")
            return gen_counterexample(config.k, config.filler)
        if family is FamilyId.BRACELET:
            if not config.sizes:
                raise GraphError("family bracelet needs --sizes")
            return gen_bracelet(config.sizes, config.directed)
        need("n")
        if family is FamilyId.COMPLETE:
            return gen_complete(config.n, config.directed)
        return gen_cycle(config.n, config.directed)

    def generate(self, config: RunConfig) -> RunResult:
        """Describe the selected graph, writing it out with --output"""
        obj = self.build_graph(config)
        report = {"graph": describe_graph(obj)}
        if config.output_file:
            save_graph(obj, config.output_file)
            report["written"] = config.output_file
        return RunResult(EXIT_OK, report)

    def _default_order(self, bg: BraceletGraph) -> int:
        if bg.directed:
            return bg.part_sizes[0] + 1
        if bg.family == "P":
            return 2 * bg.params[0]
        if bg.family == "G":
            return 2 * bg.params[0] + 1
        raise GraphError("--order is required for this family")

    def construct(self, config: RunConfig) -> RunResult:
        """Run the constructions on given, swept or sampled mark sequences"""
        bg = self.build_graph(config)
        if not isinstance(bg, BraceletGraph):
            raise GraphError("constructions need a bracelet")
        if config.marks:
            sequences = [tuple(config.marks)]
        else:
            order = config.order or self._default_order(bg)
            if config.sample:
                sequences = _sampled(bg.n, order, config.sample, config.seed)
            elif config.sweep:
                sequences = canonical_sequences(bg.n, order, reflect=not bg.directed)
            else:
                raise GraphError("give --marks, --sweep or --sample")
        built = 0
        failures = []
        witness = None
        for marks in sequences:
            try:
                cycle = construct_cycle(bg, marks, config.budget)
            except ConstructionError as err:
                failures.append({"marks": list(marks), "error": str(err)})
                continue
            if not verify_ordered_cycle(bg, cycle, marks):
                failures.append({"marks": list(marks), "error": "witness rejected"})
                continue
            built += 1
            if witness is None:
                witness = {"marks": list(marks), "cycle": _cycle_report(cycle)}
        report = {
            "graph": describe_graph(bg),
            "built": built,
            "failures": failures,
            "first_witness": witness,
        }
        return RunResult(EXIT_FALSIFIED if failures else EXIT_OK, report)

    def verify(self, config: RunConfig) -> RunResult:
        """Exhaustive (or sampled) orderedness check against --expect"""
        obj = self.build_graph(config)
        g = as_graph(obj)
        order = config.order
        if order is None:
            raise GraphError("verify needs --order")
        if config.mode == MODE_EDGE_ORDERED:
            sequences = None
            if config.sample:
                edges = g.edges()
                indices = _sampled(len(edges), order, config.sample, config.seed)
                sequences = [tuple(edges[i] for i in seq) for seq in indices]
            verdict = is_k_edge_ordered(
                g, order, config.budget, config.reduce, config.workers, sequences
            )
        else:
            sequences = None
            if config.sample:
                sequences = _sampled(g.n, order, config.sample, config.seed)
            verdict = is_k_ordered(
                g,
                order,
                config.mode == MODE_ORDERED_HAM,
                config.budget,
                config.reduce,
                config.workers,
                sequences,
            )
        witness = verdict.witness
        report = {
            "graph": describe_graph(obj),
            "mode": verdict.mode,
            "order": order,
            "status": verdict.status.value,
            "expected": config.expect,
            "sequences": verdict.stats.sequences,
            "nodes": verdict.stats.nodes,
            "counterexample": verdict.counterexample,
            "witnessed": verdict.witnessed,
            "witness": _witness_report(witness),
        }
        if (
            verdict.status is VerdictStatus.FAILS
            and config.mode != MODE_EDGE_ORDERED
            and isinstance(obj, BraceletGraph)
            and not g.directed
        ):
            cert = neighborhood_obstruction(obj, order)
            if cert is not None:
                report["certificate"] = {
                    "kind": cert.kind,
                    "subset": cert.subset,
                    "neighborhood": cert.neighborhood,
                    "refuted_order": cert.refuted_order,
                }
        timings = {"search": verdict.stats.elapsed}
        if verdict.status is VerdictStatus.RESOURCE_EXCEEDED:
            return RunResult(EXIT_BUDGET, report, timings)
        code = EXIT_OK if verdict.status.value == config.expect else EXIT_FALSIFIED
        return RunResult(code, report, timings)

    def analyze(self, config: RunConfig) -> RunResult:
        """Connectivity, diameter, parity and degree screens, bounds with --order"""
        obj = self.build_graph(config)
        g = as_graph(obj)
        conn = connectivity(g)
        report = {
            "graph": describe_graph(obj),
            "vertex_connectivity": conn.vertex_connectivity,
            "edge_connectivity": conn.edge_connectivity,
            "min_degree": conn.min_degree,
            "diameter": "infinite" if conn.diameter is None else conn.diameter,
        }
        code = EXIT_OK
        if isinstance(obj, BraceletGraph) and not g.directed:
            parity = parity_audit(obj, config.budget)
            report["parity"] = {"message": parity.message, "violations": parity.violations}
            if not parity.ok:
                code = EXIT_FALSIFIED
        if config.order is None:
            return RunResult(code, report)
        order = config.order
        if g.directed:
            necessary = check_directed_necessary(g, order)
            report["necessary"] = {"passes": necessary.passes, "violations": necessary.violations}
            return RunResult(code, report)
        k = order // 2
        verdict = is_k_ordered(g, order, budget=config.budget, workers=config.workers)
        if verdict.status is VerdictStatus.RESOURCE_EXCEEDED:
            report["bound"] = {"status": verdict.status.value}
            return RunResult(EXIT_BUDGET, report, {"search": verdict.stats.elapsed})
        if k >= 1:
            bound = check_diameter_bound(g, k, verdict)
            report["bound"] = {
                "ordered": verdict.holds,
                "applicable": bound.applicable,
                "bound": bound.bound,
                "family_bound": bound.family_bound,
                "satisfied": bound.satisfied,
                "slack": bound.slack,
            }
            if not bound.satisfied:
                code = EXIT_FALSIFIED
        if isinstance(obj, BraceletGraph) and k >= 1:
            audit = bracelet_degree_audit(obj, k)
            report["screens"] = {
                "passes": audit.passes,
                "failures": [f"{name}: {why}" for name, why in audit.failures],
            }
        return RunResult(code, report, {"search": verdict.stats.elapsed})

    def tour(self, config: RunConfig) -> RunResult:
        """Greedy ordered tour (edge mode) or cycle (vertex mode) through --marks"""
        g = as_graph(self.build_graph(config))
        marks = config.marks
        k = len(marks)
        trace = GreedyTrace()
        report = {"graph": describe_graph(g), "mode": config.tour_mode, "k": k}
        try:
            if config.tour_mode == "edge":
                if g.directed:
                    witness = greedy_edge_tour(g, marks, k, trace).walk
                else:
                    witness = greedy_undirected(g, marks, k, "edge", trace).walk
            elif g.directed:
                witness = greedy_vertex_cycle(g, marks, k, trace).vertices
            else:
                witness = greedy_undirected(g, marks, k, "vertex", trace).vertices
        except PreconditionError as err:
            report["gate"] = self._gate_report(trace)
            report["status"] = "refused"
            report["reason"] = str(err)
            return RunResult(EXIT_FALSIFIED, report)
        report["gate"] = self._gate_report(trace)
        report["rounds"] = [
            {"from": s, "to": t, "path": list(path)} for (s, t), path in trace.rounds
        ]
        report["swaps"] = trace.swaps
        report["status"] = "built"
        report["witness"] = list(witness)
        return RunResult(EXIT_OK, report)

    @staticmethod
    def _gate_report(trace: GreedyTrace):
        return {
            "connectivity": trace.connectivity,
            "diameter": "infinite" if trace.diameter is None else trace.diameter,
            "required": trace.required,
        }

    def suite(self, config: RunConfig) -> RunResult:
        """Acceptance rows; any failed row means exit 1"""
        ctx = SuiteContext(config.budget, config.seed, config.workers)
        rows = run_suite(config.only, ctx)
        report = {
            "rows": [
                {
                    "number": row.number,
                    "title": row.title,
                    "tags": list(row.tags),
                    "status": row.status,
                    "detail": row.detail,
                }
                for row in rows
            ]
        }
        timings = {f"row {row.number}": row.elapsed for row in rows}
        statuses = {row.status for row in rows}
        if FAIL in statuses:
            return RunResult(EXIT_FALSIFIED, report, timings)
        if RESOURCE_EXCEEDED in statuses:
            return RunResult(EXIT_BUDGET, report, timings)
        return RunResult(EXIT_OK, report, timings)

    def run(self, config: RunConfig) -> RunResult:
        """Dispatch to the subcommand; library errors become exit codes"""
        handler = getattr(self, config.command)
        started = time.perf_counter()
        try:
            result = handler(config)
        except BudgetExceeded as err:
            logging.warning("%s", err)
            result = RunResult(EXIT_BUDGET, {"status": RESOURCE_EXCEEDED, "error": str(err)})
        except OSError as err:
            logging.error("I/O failure: %s", err)
            result = RunResult(EXIT_IO, {"status": "io-error", "error": str(err)})
        except (GraphError, PreconditionError) as err:
            logging.error("%s", err)
            result = RunResult(EXIT_USAGE, {"status": "usage-error", "error": str(err)})
        except KOrderedError as err:
            logging.error("Internal error: %s", err)
            result = RunResult(EXIT_FALSIFIED, {"status": "error", "error": str(err)})
        result.report = {"schema": SCHEMA, "command": config.command, **result.report}
        result.timings["total"] = time.perf_counter() - started
        return result


def run(config: RunConfig) -> RunResult:
    """Run one configured command"""
    return KOrderedRunner().run(config)


def print_version_info():
    """Print the version of kordered"""
    print(f"kordered version {__version__}")


def main_cmdline(args=None):  # pragma: no cover
    """Main command line interface"""
    runner = KOrderedRunner()
    options = runner.parse(args)
    if options.printversion:
        print_version_info()
        return EXIT_OK
    if options.command is None:
        runner.arg_parser.print_help()
        sys.exit(EXIT_USAGE)
    logging.basicConfig(
        level=logging.DEBUG if options.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    result = runner.run(RunConfig.from_namespace(options))
    if options.report == "structured":
        print(format_structured(result.report))
    else:
        print(format_human(result))
    sys.exit(result.code)


if __name__ == "__main__":  # pragma: no cover
    main_cmdline()
