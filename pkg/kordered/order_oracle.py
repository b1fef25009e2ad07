# -*- coding: utf-8 -*-

"""\
Exhaustive oracles for ordered cycles and ordered tours

Every answer here is ground truth: a returned witness passes the verifiers of
graph_core, and an absent witness means the backtracking search completed without
finding one. Searches count nodes and give up with BudgetExceeded when the budget
runs out, which is never reported as a failure.
"""

import enum
import logging
import random
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, islice, permutations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .graph_core import (
    BraceletGraph,
    BudgetExceeded,
    Check,
    GraphError,
    OrderedCycle,
    PASSED,
    PreconditionError,
    Tour,
    as_graph,
    check_edge_marks,
    check_marks,
    is_bipartite,
)

DEFAULT_BUDGET = 10**8
CHUNK_SIZE = 256

MODE_ORDERED = "ordered"
MODE_ORDERED_HAM = "ordered-ham"
MODE_EDGE_ORDERED = "edge-ordered"


class VerdictStatus(enum.Enum):
    """Three-valued oracle answer"""

    HOLDS = "holds"
    FAILS = "fails"
    RESOURCE_EXCEEDED = "resource_exceeded"


@dataclass(frozen=True)
class SearchStats:
    """Work done by a sweep"""

    nodes: int = 0
    sequences: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class Verdict:
    """
    Result of an orderedness sweep

    holds: every sequence admits a witness; witness is the one found for the first
    sequence (witnessed).
    fails: counterexample admits no witness.
    resource_exceeded: counterexample is the sequence whose search ran out of budget.
    """

    status: VerdictStatus
    order: int
    mode: str
    witness: Optional[Union[OrderedCycle, Tour]] = None
    witnessed: Optional[tuple] = None
    counterexample: Optional[tuple] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def holds(self) -> bool:
        """True when the property was verified"""
        return self.status is VerdictStatus.HOLDS


#### Backtracking kernels


class _CycleSearch:
    """
    Depth-first search for a cycle v_1 -> v_2 -> ... -> v_k -> v_1

    The cycle is grown as consecutive segments between marks; a segment may only use
    vertices that are unused and unmarked. Before expanding a node the search checks
    that the next mark is still reachable through such vertices.
    """

    def __init__(self, g, marks, require_hamiltonian, budget):
        self.g = g
        self.marks = marks
        self.mark_set = frozenset(marks)
        self.require_hamiltonian = require_hamiltonian
        self.budget = budget
        self.nodes = 0
        self.path = [marks[0]]
        self.used = {marks[0]}

    def run(self) -> Optional[Tuple[int, ...]]:
        """Vertex sequence of a witness, or None"""
        return self._extend(self.marks[0], 0)

    def _reachable(self, current, target):
        adjacency = self.g.adjacency
        if target in adjacency[current]:
            return True
        seen = {current}
        stack = [current]
        while stack:
            v = stack.pop()
            for w in adjacency[v]:
                if w == target:
                    return True
                if w in seen or w in self.used or w in self.mark_set:
                    continue
                seen.add(w)
                stack.append(w)
        return False

    def _push(self, vertex, segment):
        self.path.append(vertex)
        self.used.add(vertex)
        found = self._extend(vertex, segment)
        if found is None:
            self.path.pop()
            self.used.discard(vertex)
        return found

    def _extend(self, current, segment):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes, self.budget, self.marks)
        k = len(self.marks)
        target = self.marks[(segment + 1) % k]
        closing = segment + 1 == k
        if not self._reachable(current, target):
            return None
        for nxt in self.g.sorted_neighbors(current):
            if nxt == target:
                if closing:
                    if len(self.path) < 3:
                        continue
                    if self.require_hamiltonian and len(self.path) != self.g.n:
                        continue
                    return tuple(self.path)
                found = self._push(nxt, segment + 1)
            elif nxt in self.used or nxt in self.mark_set:
                continue
            else:
                found = self._push(nxt, segment)
            if found is not None:
                return found
        return None


class _TourSearch:
    """
    Depth-first search over edge-usage states for an ordered tour

    The walk starts by traversing e_1 (in either direction for undirected graphs),
    then alternates connector trails over unmarked unused edges with the traversal of
    the next marked edge, and finally walks back to its start.
    """

    def __init__(self, g, edge_marks, budget):
        self.g = g
        self.marks = edge_marks
        self.keys = tuple(g.edge_key(u, v) for u, v in edge_marks)
        self.marked = frozenset(self.keys)
        self.budget = budget
        self.nodes = 0
        self.used = set()
        self.walk: List[int] = []

    def _orientations(self, index):
        u, v = self.marks[index]
        if self.g.directed:
            return ((u, v),)
        return ((u, v), (v, u))

    def run(self) -> Optional[Tuple[int, ...]]:
        """Closed walk of a witness (start vertex not repeated), or None"""
        for tail, head in self._orientations(0):
            self.used = {self.keys[0]}
            self.walk = [tail, head]
            found = self._step(head, 1, tail)
            if found is not None:
                return found
        return None

    def _reachable(self, current, targets):
        if current in targets:
            return True
        seen = {current}
        stack = [current]
        while stack:
            v = stack.pop()
            for w in self.g.adjacency[v]:
                key = self.g.edge_key(v, w)
                if w in seen or key in self.used or key in self.marked:
                    continue
                if w in targets:
                    return True
                seen.add(w)
                stack.append(w)
        return False

    def _advance(self, key, vertex, index, start):
        self.used.add(key)
        self.walk.append(vertex)
        found = self._step(vertex, index, start)
        if found is None:
            self.walk.pop()
            self.used.discard(key)
        return found

    def _step(self, current, index, start):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes, self.budget, self.marks)
        k = len(self.marks)
        if index == k and current == start:
            return tuple(self.walk[:-1])
        if index == k:
            targets = {start}
        else:
            targets = {tail for tail, _ in self._orientations(index)}
        if not self._reachable(current, targets):
            return None
        if index < k:
            for tail, head in self._orientations(index):
                if tail == current:
                    found = self._advance(self.keys[index], head, index + 1, start)
                    if found is not None:
                        return found
        for nxt in self.g.sorted_neighbors(current):
            key = self.g.edge_key(current, nxt)
            if key in self.used or key in self.marked:
                continue
            found = self._advance(key, nxt, index, start)
            if found is not None:
                return found
        return None


def find_ordered_cycle(
    g, marks: Sequence[int], require_hamiltonian=False, budget=DEFAULT_BUDGET
) -> Optional[OrderedCycle]:
    """
    Search for a cycle of g meeting marks in order

    :param g: graph, digraph or bracelet
    :param marks: distinct vertices, in the order the cycle must meet them
    :param require_hamiltonian: only accept cycles through every vertex
    :param budget: maximum number of search nodes
    :return: a verified OrderedCycle, or None if none exists
    :raises BudgetExceeded: when the budget runs out first
    """
    g = as_graph(g)
    marks = check_marks(g, marks)
    if not marks:
        raise GraphError("at least one mark is required")
    found = _CycleSearch(g, marks, require_hamiltonian, budget).run()
    if found is None:
        return None
    return OrderedCycle.through(found, marks)


def find_ordered_tour(g, edge_marks, budget=DEFAULT_BUDGET) -> Optional[Tour]:
    """
    Search for a closed walk with distinct edges meeting edge_marks in order

    :raises BudgetExceeded: when the budget runs out first
    """
    g = as_graph(g)
    edge_marks = check_edge_marks(g, edge_marks)
    if not edge_marks:
        raise GraphError("at least one marked edge is required")
    found = _TourSearch(g, edge_marks, budget).run()
    if found is None:
        return None
    return Tour(found)


#### Sequence enumeration


def canonical_sequences(count: int, k: int, reflect: bool) -> Iterator[Tuple[int, ...]]:
    """
    Sequences of k distinct items out of range(count), one per rotation class

    The smallest item of each sequence comes first. With reflect, a sequence and its
    reversal are identified too, keeping the one whose second item is smaller than
    its last.
    """
    for chosen in combinations(range(count), k):
        first, rest = chosen[0], chosen[1:]
        for order in permutations(rest):
            if reflect and k >= 3 and order[0] > order[-1]:
                continue
            yield (first,) + order


def all_sequences(count: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Every sequence of k distinct items, no symmetry reduction"""
    return permutations(range(count), k)


def sample_sequences(count: int, k: int, samples: int, seed: int) -> List[Tuple[int, ...]]:
    """
    Seeded random sequences of k distinct items

    Uses random.Random (Mersenne Twister) and Random.sample, so a seed fixes the
    sample on every platform.
    """
    rng = random.Random(seed)
    return [tuple(rng.sample(range(count), k)) for _ in range(samples)]


#### Sweeps


def _search_one(task_mode, g, sequence, budget):
    if task_mode == MODE_EDGE_ORDERED:
        search = _TourSearch(g, sequence, budget)
        found = search.run()
        return (None if found is None else Tour(found)), search.nodes
    search = _CycleSearch(g, sequence, task_mode == MODE_ORDERED_HAM, budget)
    found = search.run()
    return (None if found is None else OrderedCycle.through(found, sequence)), search.nodes


def _sweep_chunk(task):
    """
    Check a chunk of sequences in order, stopping at the first one without witness

    Returns (status value, sequence, witness, nodes, sequences checked).
    """
    mode, g, sequences, budget = task
    nodes = 0
    first_witness = None
    for checked, sequence in enumerate(sequences, 1):
        try:
            witness, used = _search_one(mode, g, sequence, budget)
        except BudgetExceeded as err:
            return (VerdictStatus.RESOURCE_EXCEEDED.value, sequence, None, nodes + err.nodes, checked)
        nodes += used
        if witness is None:
            return (VerdictStatus.FAILS.value, sequence, None, nodes, checked)
        if first_witness is None:
            first_witness = (sequence, witness)
    return (VerdictStatus.HOLDS.value, first_witness, None, nodes, len(sequences))


def _chunks(iterable: Iterable, size: int) -> Iterator[list]:
    iterator = iter(iterable)
    while True:
        chunk = list(islice(iterator, size))
        if not chunk:
            return
        yield chunk


def _ordered_outcomes(pool, fn, tasks, window: int) -> Iterator:
    """fn over tasks in task order, with at most window tasks submitted ahead"""
    pending = deque()
    for task in tasks:
        pending.append(pool.submit(fn, task))
        if len(pending) >= window:
            yield pending.popleft().result()
    while pending:
        yield pending.popleft().result()


def _sweep(g, mode, order, sequences, budget, workers):
    started = time.perf_counter()
    tasks = ((mode, g, chunk, budget) for chunk in _chunks(sequences, CHUNK_SIZE))
    total_nodes = 0
    total_sequences = 0
    first = None
    decided = None
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        if pool:
            outcomes = _ordered_outcomes(pool, _sweep_chunk, tasks, 2 * workers)
        else:
            outcomes = map(_sweep_chunk, tasks)
        for status, payload, _, nodes, checked in outcomes:
            total_nodes += nodes
            total_sequences += checked
            if status == VerdictStatus.HOLDS.value:
                if first is None:
                    first = payload
                continue
            decided = (VerdictStatus(status), payload)
            break
    finally:
        if pool:
            pool.shutdown(wait=True, cancel_futures=True)
    stats = SearchStats(total_nodes, total_sequences, time.perf_counter() - started)
    if decided is not None:
        status, sequence = decided
        if status is VerdictStatus.RESOURCE_EXCEEDED:
            logging.warning("Budget %d exceeded on sequence %s", budget, sequence)
        else:
            logging.debug("Sequence %s admits no witness", sequence)
        return Verdict(status, order, mode, counterexample=sequence, stats=stats)
    witnessed, witness = first if first else (None, None)
    logging.debug("%s %d holds after %d sequences", mode, order, total_sequences)
    return Verdict(
        VerdictStatus.HOLDS, order, mode, witness, witnessed, stats=stats
    )


def is_k_ordered(
    g,
    k: int,
    require_hamiltonian=False,
    budget=DEFAULT_BUDGET,
    reduce=True,
    workers=1,
    sequences: Optional[Iterable[Sequence[int]]] = None,
) -> Verdict:
    """
    Decide whether every sequence of k distinct vertices lies on an ordered cycle

    :param g: graph, digraph or bracelet
    :param k: order to check, at most n
    :param require_hamiltonian: demand hamiltonian witnesses
    :param budget: node budget per sequence
    :param reduce: enumerate sequences up to rotation (and reflection for graphs)
    :param workers: number of processes; results merge in enumeration order
    :param sequences: explicit sequences to check instead of the full enumeration
    """
    g = as_graph(g)
    if not 1 <= k <= g.n:
        raise PreconditionError(f"order must lie in [1, {g.n}], got {k}")
    mode = MODE_ORDERED_HAM if require_hamiltonian else MODE_ORDERED
    if sequences is None:
        if reduce:
            sequences = canonical_sequences(g.n, k, reflect=not g.directed)
        else:
            sequences = all_sequences(g.n, k)
    else:
        sequences = [check_marks(g, s) for s in sequences]
    return _sweep(g, mode, k, sequences, budget, workers)


def is_k_edge_ordered(
    g,
    k: int,
    budget=DEFAULT_BUDGET,
    reduce=True,
    workers=1,
    sequences: Optional[Iterable[Sequence[Tuple[int, int]]]] = None,
) -> Verdict:
    """Decide whether every sequence of k distinct edges lies on an ordered tour"""
    g = as_graph(g)
    edges = g.edges()
    if not 1 <= k <= len(edges):
        raise PreconditionError(f"order must lie in [1, {len(edges)}], got {k}")
    if sequences is None:
        if reduce:
            indices = canonical_sequences(len(edges), k, reflect=not g.directed)
        else:
            indices = all_sequences(len(edges), k)
        sequences = (tuple(edges[i] for i in seq) for seq in indices)
    else:
        sequences = [check_edge_marks(g, s) for s in sequences]
    return _sweep(g, MODE_EDGE_ORDERED, k, sequences, budget, workers)


#### Obstructions


@dataclass(frozen=True)
class ObstructionCertificate:
    """
    Vertex set whose neighborhood is too small for some mark pattern

    alternating: marks alternate between the s vertices of subset and s vertices
    outside subset and its neighborhood; a cycle needs 2s distinct neighborhood
    vertices, so fewer than 2s refute 2s-orderedness.
    independent: subset is independent and every mark of it needs its own successor
    in the neighborhood, so fewer than |subset| refute |subset|-orderedness.
    """

    kind: str
    subset: Tuple[int, ...]
    neighborhood: Tuple[int, ...]
    outside: Tuple[int, ...]

    @property
    def s(self) -> int:
        """Size of the subset"""
        return len(self.subset)

    @property
    def neighborhood_size(self) -> int:
        """|N(subset)|"""
        return len(self.neighborhood)

    @property
    def outside_count(self) -> int:
        """Vertices in neither the subset nor its neighborhood"""
        return len(self.outside)

    @property
    def refuted_order(self) -> int:
        """Smallest order this certificate refutes"""
        return 2 * self.s if self.kind == "alternating" else self.s

    def sequence(self) -> Tuple[int, ...]:
        """Mark sequence the argument is built on"""
        if self.kind == "alternating":
            marks = []
            for inner, outer in zip(self.subset, self.outside):
                marks.extend((inner, outer))
            return tuple(marks)
        return self.subset

    def validate(self, g) -> Check:
        """Recompute the certificate's counts on g"""
        g = as_graph(g)
        subset = set(self.subset)
        neighborhood = set().union(*(g.neighbors(v) for v in subset)) - subset
        if neighborhood != set(self.neighborhood):
            return Check(False, "bad-neighborhood")
        if self.kind == "alternating":
            outside = set(range(g.n)) - subset - neighborhood
            if not set(self.outside) <= outside or len(self.outside) < self.s:
                return Check(False, "bad-outside")
            if len(neighborhood) >= 2 * self.s:
                return Check(False, "neighborhood-large")
            return PASSED
        if any(g.has_edge(u, v) for u in subset for v in subset):
            return Check(False, "not-independent")
        if self.s < 2 or len(neighborhood) >= self.s:
            return Check(False, "neighborhood-large")
        return PASSED


def _certificate(g, kind, subset, order):
    subset = tuple(subset)
    inside = set(subset)
    neighborhood = set().union(*(g.neighbors(v) for v in subset)) - inside
    s = len(subset)
    if kind == "alternating":
        if 2 * s > order or len(neighborhood) >= 2 * s:
            return None
        outside = [v for v in range(g.n) if v not in inside and v not in neighborhood]
        if len(outside) < s:
            return None
        return ObstructionCertificate(kind, subset, tuple(sorted(neighborhood)), tuple(outside[:s]))
    if s < 2 or s > order or len(neighborhood) >= s:
        return None
    if any(g.has_edge(u, v) for u in subset for v in subset):
        return None
    return ObstructionCertificate(kind, subset, tuple(sorted(neighborhood)), ())


def neighborhood_obstruction(
    g, k: int, scope="parts", size_bound: Optional[int] = None
) -> Optional[ObstructionCertificate]:
    """
    Look for a neighborhood certificate that g is not k-ordered

    :param g: undirected graph or bracelet
    :param k: order to refute
    :param scope: "parts" tries subsets of single bracelet parts (all vertices of a
        part share one neighborhood); "subsets" scans every vertex subset
    :param size_bound: largest subset size for the "subsets" scope (default k)
    :return: the first certificate found, or None
    """
    graph = as_graph(g)
    if graph.directed:
        raise GraphError("neighborhood certificates apply to undirected graphs")
    if scope == "parts":
        if not isinstance(g, BraceletGraph):
            raise GraphError("the parts scope needs a bracelet")
        for part in g.parts:
            for s in range(min(len(part), k // 2), 0, -1):
                found = _certificate(graph, "alternating", part[:s], k)
                if found:
                    return found
            for t in range(min(len(part), k), 1, -1):
                found = _certificate(graph, "independent", part[:t], k)
                if found:
                    return found
        return None
    if scope != "subsets":
        raise GraphError(f"unknown scope {scope!r}")
    bound = min(size_bound or k, k, graph.n)
    for size in range(1, bound + 1):
        for subset in combinations(range(graph.n), size):
            found = _certificate(graph, "alternating", subset, k) or _certificate(
                graph, "independent", subset, k
            )
            if found:
                return found
    return None


#### Parity


@dataclass(frozen=True)
class ParityReport:
    """Bipartiteness and vertex-parity audit of a bracelet"""

    part_count: int
    n: int
    applicable: bool
    bipartite: bool
    bipartite_by_parts: bool
    hamiltonian_cycle: Optional[OrderedCycle]
    searched: bool
    violations: Tuple[str, ...]
    message: str

    @property
    def ok(self) -> bool:
        """True if nothing contradicts the parity statements"""
        return not self.violations


def parity_audit(bg: BraceletGraph, budget=DEFAULT_BUDGET) -> ParityReport:
    """
    Check the parity statements for an even-part bracelet

    With an even number of parts the bracelet is bipartite (classes: even and odd
    part indices), so all cycles are even; with an odd vertex count as well no
    hamiltonian cycle exists, which is confirmed by exhaustive search.
    """
    if bg.directed:
        raise GraphError("parity audit applies to undirected bracelets")
    g = bg.graph
    if bg.m % 2:
        return ParityReport(
            bg.m, g.n, False, is_bipartite(g), False, None, False, (),
            f"odd-part bracelet ({bg.m} parts): audit not applicable",
        )
    violations = []
    by_parts = all(bg.part_of[u] % 2 != bg.part_of[v] % 2 for u, v in g.edges())
    bipartite = is_bipartite(g)
    if not (by_parts and bipartite):
        violations.append("even-part bracelet is not bipartite")
    cycle = None
    searched = False
    if g.n % 2:
        searched = True
        cycle = find_ordered_cycle(g, (0,), require_hamiltonian=True, budget=budget)
        if cycle is not None:
            violations.append("hamiltonian cycle found on an odd vertex count")
        message = "not hamiltonian-orderable for any k (odd vertex count)"
    else:
        message = "bipartite, even vertex count"
    return ParityReport(
        bg.m, g.n, True, bipartite, by_parts, cycle, searched, tuple(violations), message
    )
