# -*- coding: utf-8 -*-

"""\
Acceptance matrix

Each row reproduces one published claim on concrete instances and re-verifies every
witness it gets. A row ends as ``pass``, ``fail`` or ``resource_exceeded``; the last
one only means the node budget ran out.
"""

import logging
import random
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .constructive import construct_directed_hamiltonian, construct_G_hamiltonian
from .generators import (
    bracelet_specs,
    gen_bracelet,
    gen_complete,
    gen_counterexample,
    gen_directed,
    gen_G,
    gen_H,
    gen_P,
)
from .graph_core import (
    BudgetExceeded,
    PreconditionError,
    as_graph,
    build_bracelet,
    cycle_graph,
    verify_ordered_cycle,
    verify_tour,
)
from .linkage_tours import (
    find_edge_disjoint_paths,
    greedy_edge_tour,
    greedy_vertex_cycle,
    linkage_to_edge_tour,
    repair_path_system,
    round_robin_pairs,
)
from .metrics import (
    bracelet_degree_audit,
    check_diameter_bound,
    check_directed_necessary,
    connectivity,
    exhaustive_connectivity,
)
from .order_oracle import (
    DEFAULT_BUDGET,
    VerdictStatus,
    all_sequences,
    canonical_sequences,
    find_ordered_cycle,
    is_k_ordered,
    neighborhood_obstruction,
    parity_audit,
    sample_sequences,
)

PASS = "pass"
FAIL = "fail"
RESOURCE_EXCEEDED = "resource_exceeded"

TAGS = (
    "uniform",
    "counterexample",
    "parity",
    "diameter",
    "lowdeg",
    "screen",
    "directed",
    "linkage",
    "greedy",
    "cross-oracle",
)


class RowFailure(Exception):
    """A claim did not reproduce"""


@dataclass(frozen=True)
class SuiteContext:
    """Budget, seed and parallelism shared by all rows"""

    budget: int = DEFAULT_BUDGET
    seed: int = 0
    workers: int = 1


@dataclass(frozen=True)
class SuiteRow:
    """Outcome of one acceptance row"""

    number: int
    title: str
    tags: Tuple[str, ...]
    status: str
    detail: str
    elapsed: float = 0.0


def _expect(condition, message):
    if not condition:
        raise RowFailure(message)


def _holds(verdict, what):
    if verdict.status is VerdictStatus.RESOURCE_EXCEEDED:
        raise BudgetExceeded(verdict.stats.nodes, "per-sequence", verdict.counterexample)
    _expect(verdict.holds, f"{what}: no witness for {verdict.counterexample}")


def _fails(verdict, what):
    if verdict.status is VerdictStatus.RESOURCE_EXCEEDED:
        raise BudgetExceeded(verdict.stats.nodes, "per-sequence", verdict.counterexample)
    _expect(verdict.status is VerdictStatus.FAILS, f"{what}: unexpectedly holds")


#### Rows


def _row_uniform_small(ctx):
    bg = gen_G(2, 4)
    count = 0
    for marks in canonical_sequences(bg.n, 5, reflect=True):
        cycle, _ = construct_G_hamiltonian(bg, marks)
        _expect(verify_ordered_cycle(bg.graph, cycle, marks, True), f"bad witness for {marks}")
        count += 1
    verdict = is_k_ordered(bg, 5, True, ctx.budget, workers=ctx.workers)
    _holds(verdict, "oracle on G(2,4)")
    return f"{count} constructed witnesses, oracle holds on {verdict.stats.sequences} sequences"


def _row_uniform_large(ctx):
    bg = gen_G(2, 6)
    count = 0
    for marks in canonical_sequences(bg.n, 5, reflect=True):
        cycle, _ = construct_G_hamiltonian(bg, marks)
        _expect(verify_ordered_cycle(bg.graph, cycle, marks, True), f"bad witness for {marks}")
        count += 1
    sample = sample_sequences(bg.n, 5, 1000, ctx.seed)
    verdict = is_k_ordered(bg, 5, True, ctx.budget, workers=ctx.workers, sequences=sample)
    _holds(verdict, "oracle spot check on G(2,6)")
    return f"{count} constructed witnesses, {len(sample)} sampled sequences confirmed"


def _row_counterexample(ctx):
    bg = gen_counterexample(2, (2,))
    big = bg.parts[bg.special_part]
    verdict = is_k_ordered(bg, 5, budget=ctx.budget, sequences=[big])
    _fails(verdict, "big-part sequence")
    _expect(verdict.counterexample == big, f"counterexample {verdict.counterexample}")
    cert = neighborhood_obstruction(bg, 5)
    _expect(cert is not None, "no neighborhood certificate")
    _expect(cert.validate(bg.graph), "certificate does not validate")
    _expect(cert.neighborhood_size == 4, f"|N| = {cert.neighborhood_size}")
    return f"{big} admits no cycle; {cert.kind} certificate with |N| = 4"


def _row_parity(ctx):
    corpus = [
        gen_G(2, 4),
        gen_G(1, 6),
        gen_H(2, 1),
        gen_H(2, 2),
        gen_P(2, 6),
        gen_counterexample(2, (2,)),
        gen_bracelet((1, 1, 1, 2)),
    ]
    odd_confirmed = 0
    for bg in corpus:
        report = parity_audit(bg, ctx.budget)
        _expect(report.ok, f"{bg.part_sizes}: {report.violations}")
        odd_confirmed += report.searched
    _expect(odd_confirmed >= 1, "no odd-vertex bracelet searched")

    bg = gen_G(2, 4)
    for marks in sample_sequences(bg.n, 5, 50, ctx.seed):
        cycle, _ = construct_G_hamiltonian(bg, marks)
        _expect(len(cycle) % 2 == 0, f"odd constructed cycle {cycle.vertices}")
        found = find_ordered_cycle(bg, marks, budget=ctx.budget)
        _expect(found is not None and len(found) % 2 == 0, f"odd oracle cycle for {marks}")
    return f"{len(corpus)} bracelets audited, {odd_confirmed} odd-order non-hamiltonian"


def _row_diameter(ctx):
    k33 = gen_H(2, 1)
    verdict = is_k_ordered(k33, 4, budget=ctx.budget)
    _holds(verdict, "K_{3,3}")
    report = check_diameter_bound(k33, 2, verdict)
    _expect(report.applicable and report.diameter == 2 == report.bound, "K_{3,3} not tight")

    reports = []
    for bg in (gen_G(2, 6), gen_G(2, 4), gen_P(2, 5)):
        verdict = is_k_ordered(bg, 4, budget=ctx.budget, workers=ctx.workers)
        _holds(verdict, f"{bg.family}{bg.params}")
        report = check_diameter_bound(bg, 2, verdict)
        _expect(report.satisfied, f"{bg.family}{bg.params}: diameter {report.diameter}")
        reports.append(report)
    checked = 1 + len(reports)
    g26 = reports[0]
    _expect(g26.diameter == 3 == g26.family_bound, f"G(2,6) diameter {g26.diameter}")
    return f"bound holds on {checked} certified instances; G(2,6) attains {g26.family_bound}"


def _row_lowdeg(ctx):
    _fails(is_k_ordered(gen_H(2, 2), 4, budget=ctx.budget, workers=ctx.workers), "H(2,2)")
    for m, top in ((5, 5), (6, 6)):
        bg = gen_P(2, m)
        degrees = bg.graph.degrees()
        _expect(min(degrees) == 3 and max(degrees) == top, f"P(2,{m}) degrees {degrees}")
        _holds(is_k_ordered(bg, 4, budget=ctx.budget, workers=ctx.workers), f"P(2,{m})")
    return "H(2,2) refuted; P(2,5), P(2,6) 4-ordered with degrees 3..5 and 3..6"


def _row_screen(ctx):
    checked = 0
    for spec in bracelet_specs(7, 3):
        bg = build_bracelet(spec)
        degrees = [bg.neighborhood_size(j) for j in range(bg.m)]
        if min(degrees) != 3 or max(degrees) > 5:
            continue
        checked += 1
        audit = bracelet_degree_audit(bg, 2)
        _expect(not audit.passes, f"{spec.part_sizes} passes every screen")
        cert = neighborhood_obstruction(bg, 4)
        if cert is not None and find_ordered_cycle(bg, cert.sequence(), budget=ctx.budget) is None:
            continue
        _fails(is_k_ordered(bg, 4, budget=ctx.budget, workers=ctx.workers), str(spec.part_sizes))
    _expect(checked > 0, "no bracelet in the window")
    return f"{checked} bracelets with degrees in [3, 5], none 4-ordered"


def _row_directed(ctx):
    bg = gen_directed(3, 4)
    count = 0
    for marks in all_sequences(bg.n, 3):
        cycle = construct_directed_hamiltonian(bg, marks)
        _expect(verify_ordered_cycle(bg.graph, cycle, marks, True), f"bad witness for {marks}")
        count += 1
    report = check_directed_necessary(bg, 3)
    _expect(report.passes, "; ".join(report.violations))
    return f"{count} triples with hamiltonian witnesses"


def _row_linkage(ctx):
    corpus = [gen_G(2, 4).graph, gen_complete(6), gen_G(2, 6).graph]
    rng = random.Random(ctx.seed)
    done = attempts = 0
    while done < 50:
        attempts += 1
        _expect(attempts <= 1000, f"only {done} linkable instances in 1000 attempts")
        g = corpus[attempts % len(corpus)]
        marks = [e if rng.random() < 0.5 else e[::-1] for e in rng.sample(g.edges(), 3)]
        try:
            system = find_edge_disjoint_paths(g, round_robin_pairs(marks), min(ctx.budget, 10**6))
        except BudgetExceeded:
            continue
        if system is None:
            continue
        _, swaps = repair_path_system(g, marks, system)
        _expect(swaps <= 3, f"{swaps} swaps for {marks}")
        tour = linkage_to_edge_tour(g, marks, system)
        _expect(verify_tour(g, tour, marks), f"bad tour for {marks}")
        done += 1
    return f"50 verified tours ({attempts} attempts)"


def _row_greedy(ctx):
    rng = random.Random(ctx.seed)
    built = refused = 0
    for n in (5, 6, 7):
        d = gen_complete(n, directed=True)
        for k in range(1, n + 1):
            arcs = rng.sample(d.edges(), k)
            try:
                tour = greedy_edge_tour(d, arcs, k)
                _expect(2 * k <= n - 1, f"edge gate passed for n={n}, k={k}")
                _expect(verify_tour(d, tour, arcs), f"bad tour n={n}, k={k}")
                built += 1
            except PreconditionError:
                _expect(2 * k > n - 1, f"edge gate refused n={n}, k={k}")
                refused += 1
            marks = rng.sample(range(n), k)
            try:
                cycle = greedy_vertex_cycle(d, marks, k)
                _expect(verify_ordered_cycle(d, cycle, marks), f"bad cycle n={n}, k={k}")
                built += 1
            except PreconditionError:
                _expect(k - 1 > n - 1, f"vertex gate refused n={n}, k={k}")
                refused += 1
    return f"{built} greedy witnesses verified, {refused} refusals"


def _row_cross_oracle(ctx):
    corpus = [
        gen_G(2, 4),
        gen_H(2, 1),
        gen_bracelet((1, 1, 1, 2)),
        gen_directed(3, 3),
        cycle_graph(5),
        gen_complete(5),
        gen_complete(4, directed=True),
    ]
    compared = 0
    for obj in corpus:
        g = as_graph(obj)
        for k in (3, 4):
            reduced = is_k_ordered(g, k, budget=ctx.budget)
            full = is_k_ordered(g, k, budget=ctx.budget, reduce=False)
            _expect(reduced.status == full.status, f"{obj!r}, k={k}: symmetry reduction unsound")
            compared += 1
        report = connectivity(g)
        exhaustive = exhaustive_connectivity(g)
        _expect(
            (report.vertex_connectivity, report.edge_connectivity) == exhaustive,
            f"{obj!r}: flow ({report.vertex_connectivity}, {report.edge_connectivity})"
            f" != cut enumeration {exhaustive}",
        )
    return f"{compared} reduced/unreduced verdicts agree, {len(corpus)} connectivities agree"


ROWS: Sequence[Tuple[int, str, Tuple[str, ...], Callable]] = (
    (1, "G(2,4) is 5-ordered hamiltonian", ("uniform",), _row_uniform_small),
    (2, "G(2,6) constructor sweep with oracle spot check", ("uniform",), _row_uniform_large),
    (3, "counterexample (2, 5, 2, 2) is not 5-ordered", ("counterexample",), _row_counterexample),
    (4, "even-part bracelets are bipartite", ("parity",), _row_parity),
    (5, "diameter bound on certified instances", ("diameter",), _row_diameter),
    (6, "H(2,2) refuted, P(2,5) and P(2,6) 4-ordered", ("lowdeg",), _row_lowdeg),
    (7, "7-part bracelets with degrees 3..5 are not 4-ordered", ("screen",), _row_screen),
    (8, "directed bracelet (3,4) is 3-ordered hamiltonian", ("directed",), _row_directed),
    (9, "round-robin linkages give ordered tours", ("linkage",), _row_linkage),
    (10, "greedy constructions on complete digraphs", ("greedy",), _row_greedy),
    (11, "symmetry reduction and flow connectivity cross-checks", ("cross-oracle",), _row_cross_oracle),
)


def run_row(number: int, title: str, tags, func, ctx: SuiteContext) -> SuiteRow:
    """Run one row, mapping budget exhaustion and failed claims to statuses"""
    started = time.perf_counter()
    try:
        detail = func(ctx)
        status = PASS
    except BudgetExceeded as err:
        status, detail = RESOURCE_EXCEEDED, f"budget exhausted on {err.sequence}"
    except RowFailure as err:
        status, detail = FAIL, str(err)
    elapsed = time.perf_counter() - started
    log = logging.info if status == PASS else logging.error
    log("row %d (%s): %s, %s", number, title, status, detail)
    return SuiteRow(number, title, tuple(tags), status, detail, elapsed)


def run_suite(only: Optional[str] = None, ctx: Optional[SuiteContext] = None) -> List[SuiteRow]:
    """
    Run the acceptance rows, optionally only those tagged only

    :raises ValueError: for an unknown tag
    """
    if only is not None and only not in TAGS:
        raise ValueError(f"unknown tag {only!r}, expected one of {', '.join(TAGS)}")
    ctx = ctx or SuiteContext()
    return [
        run_row(number, title, tags, func, ctx)
        for number, title, tags, func in ROWS
        if only is None or only in tags
    ]
