# -*- coding: utf-8 -*-

"""\
Edge-disjoint paths, ordered tours built from them, and the greedy constructions

* A weakly 2k-linked graph is k-edge-ordered: join the marked edges e_i = v_i u_i by
  edge-disjoint paths v_1 -> u_1 -> v_2 -> ... -> u_k -> v_1, then swap each e_i into
  its own slot (:func:`linkage_to_edge_tour`).
* Conversely a 2k-edge-ordered graph of minimum degree 2k is weakly k-linked
  (:func:`tour_to_linkage`).
* Large enough connectivity relative to the diameter makes the shortest paths of
  successive rounds avoid each other (:func:`greedy_edge_tour`,
  :func:`greedy_vertex_cycle`, :func:`greedy_undirected`). These constructions
  measure their hypotheses on the input and refuse with PreconditionError when they
  fail.

Since every (k+2)-edge-connected graph is weakly k-linked, (2k+2)-edge-connectivity
already forces k-edge-orderedness. That bound is not searched for here.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from .graph_core import (
    BudgetExceeded,
    Check,
    ConstructionError,
    Edge,
    GraphError,
    OrderedCycle,
    PASSED,
    PreconditionError,
    Tour,
    as_graph,
    check_edge_marks,
    check_marks,
    verify_ordered_cycle,
    verify_tour,
)
from .metrics import diameter, edge_connectivity, vertex_connectivity
from .order_oracle import DEFAULT_BUDGET, find_ordered_tour

TerminalPairs = Tuple[Tuple[int, int], ...]
Path = Tuple[int, ...]


@dataclass(frozen=True)
class PathSystem:
    """Path i runs from pairs[i][0] to pairs[i][1]; a pair with equal ends gets (s,)"""

    pairs: TerminalPairs
    paths: Tuple[Path, ...]

    def edge_keys(self, g) -> List[Edge]:
        """Keys of every traversed edge, path by path"""
        g = as_graph(g)
        return [g.edge_key(p[j], p[j + 1]) for p in self.paths for j in range(len(p) - 1)]

    def validate(self, g) -> Check:
        """Endpoints match, every step is an edge, no edge is used twice"""
        g = as_graph(g)
        if len(self.pairs) != len(self.paths):
            return Check(False, "bad-system", "one path per pair expected")
        for (s, t), path in zip(self.pairs, self.paths):
            if not path or path[0] != s or path[-1] != t:
                return Check(False, "bad-endpoints", f"{path} for {s}->{t}")
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    return Check(False, "missing-edge", f"{u}-{v}")
        keys = self.edge_keys(g)
        if len(set(keys)) != len(keys):
            return Check(False, "repeated-edge")
        return PASSED


@dataclass
class GreedyTrace:
    """Gate values and per-round paths of a greedy construction"""

    mode: str = ""
    k: int = 0
    connectivity: int = 0
    diameter: Optional[int] = None
    required: int = 0
    rounds: List[Tuple[Tuple[int, int], Path]] = field(default_factory=list)
    swaps: int = 0


#### Edge-disjoint paths


class _LinkageSearch:
    """Backtracking over vertex-simple paths, pair after pair"""

    def __init__(self, g, pairs, budget):
        self.g = g
        self.pairs = pairs
        self.budget = budget
        self.nodes = 0
        self.used = set()
        self.paths: List[Path] = []

    def run(self) -> Optional[Tuple[Path, ...]]:
        """Paths for every pair, or None"""
        return self._pair(0)

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes, self.budget, self.pairs)

    def _reachable(self, source, target):
        seen = {source}
        stack = [source]
        while stack:
            v = stack.pop()
            if v == target:
                return True
            for w in self.g.adjacency[v]:
                if w not in seen and self.g.edge_key(v, w) not in self.used:
                    seen.add(w)
                    stack.append(w)
        return False

    def _pair(self, index):
        if index == len(self.pairs):
            return tuple(self.paths)
        s, t = self.pairs[index]
        if s == t:
            self.paths.append((s,))
            found = self._pair(index + 1)
            if found is None:
                self.paths.pop()
            return found
        return self._extend([s], {s}, t, index)

    def _extend(self, path, on_path, target, index):
        self._tick()
        current = path[-1]
        if current == target:
            self.paths.append(tuple(path))
            found = self._pair(index + 1)
            if found is None:
                self.paths.pop()
            return found
        if not self._reachable(current, target):
            return None
        for nxt in self.g.sorted_neighbors(current):
            key = self.g.edge_key(current, nxt)
            if nxt in on_path or key in self.used:
                continue
            self.used.add(key)
            path.append(nxt)
            on_path.add(nxt)
            found = self._extend(path, on_path, target, index)
            if found is not None:
                return found
            on_path.discard(nxt)
            path.pop()
            self.used.discard(key)
        return None


def find_edge_disjoint_paths(g, pairs, budget=DEFAULT_BUDGET) -> Optional[PathSystem]:
    """
    Pairwise edge-disjoint paths joining each (s_i, t_i)

    :return: a validated PathSystem, or None when the exhaustive search finds none
    :raises BudgetExceeded: when the node budget runs out first
    """
    g = as_graph(g)
    pairs = tuple((int(s), int(t)) for s, t in pairs)
    for s, t in pairs:
        if not (g.has_vertex(s) and g.has_vertex(t)):
            raise GraphError(f"terminal pair ({s}, {t}) is not in the graph")
    found = _LinkageSearch(g, pairs, budget).run()
    if found is None:
        return None
    return PathSystem(pairs, found)


def round_robin_pairs(edge_marks: Sequence[Edge]) -> TerminalPairs:
    """v_1 -> u_1, u_1 -> v_2, ..., u_k -> v_1 for marked edges e_i = (v_i, u_i)"""
    marks = tuple(tuple(e) for e in edge_marks)
    pairs = []
    for i, (v, u) in enumerate(marks):
        pairs.append((v, u))
        pairs.append((u, marks[(i + 1) % len(marks)][0]))
    return tuple(pairs)


def _substitute(path, u, v, replacement):
    """path with its step u -> v replaced by the walk replacement (u ... v)"""
    for j in range(len(path) - 1):
        if (path[j], path[j + 1]) == (u, v):
            return path[:j] + tuple(replacement) + path[j + 2 :]
    return None


def repair_path_system(g, edge_marks, system: PathSystem) -> Tuple[PathSystem, int]:
    """
    Move every marked edge into its own slot of a round-robin path system

    Slot 2i must become the single edge e_i. If e_i lies on no other path it simply
    replaces slot 2i; if another path traverses it, that occurrence is exchanged for
    the old slot 2i walk. Each step settles one slot for good, so at most k swaps are
    made.

    :return: the repaired system and the number of slots changed
    """
    g = as_graph(g)
    edge_marks = check_edge_marks(g, edge_marks)
    if system.pairs != round_robin_pairs(edge_marks):
        raise PreconditionError("path system does not follow the round-robin pairs")
    if not system.validate(g):
        raise PreconditionError(f"invalid path system: {system.validate(g).reason}")
    paths = list(system.paths)
    swaps = 0
    for i, (v, u) in enumerate(edge_marks):
        slot = 2 * i
        if paths[slot] == (v, u):
            continue
        key = g.edge_key(v, u)
        holder = None
        for j, path in enumerate(paths):
            if j != slot and key in {g.edge_key(a, b) for a, b in zip(path, path[1:])}:
                holder = j
                break
        if holder is not None:
            old = paths[slot]
            changed = _substitute(paths[holder], v, u, old)
            if changed is None:
                changed = _substitute(paths[holder], u, v, old[::-1])
            if changed is None:
                raise ConstructionError(f"edge {v}-{u} not found on path {holder}")
            paths[holder] = changed
            logging.debug("slot %d: exchanged with path %d", slot, holder)
        paths[slot] = (v, u)
        swaps += 1
    repaired = PathSystem(system.pairs, tuple(paths))
    if not repaired.validate(g) or swaps > len(edge_marks):
        raise ConstructionError("swap repair produced an invalid path system")
    return repaired, swaps


def _stitch(paths) -> Tour:
    walk = []
    for path in paths:
        walk.extend(path[:-1])
    return Tour(tuple(walk))


def linkage_to_edge_tour(g, edge_marks, system: PathSystem) -> Tour:
    """
    Ordered tour through edge_marks from a round-robin path system

    :param system: edge-disjoint paths for round_robin_pairs(edge_marks)
    :raises PreconditionError: when system does not fit edge_marks
    """
    g = as_graph(g)
    repaired, swaps = repair_path_system(g, edge_marks, system)
    logging.debug("swap repair changed %d slots", swaps)
    tour = _stitch(repaired.paths)
    check = verify_tour(g, tour, edge_marks)
    if not check:
        raise ConstructionError(f"stitched tour fails verification: {check.reason}")
    return tour


#### Greedy constructions


def _bfs_path(g, source, target, removed=frozenset(), blocked=frozenset(), banned=None):
    """Shortest path, ties broken towards the smallest next vertex id"""
    if source == target:
        return (source,)
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.sorted_neighbors(v):
            key = g.edge_key(v, w)
            if w in parent or key in removed or key == banned:
                continue
            if w in blocked and w != target:
                continue
            parent[w] = v
            if w == target:
                path = [w]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            queue.append(w)
    return None


def _gate(g, mode, k, factor, trace):
    d = diameter(g)
    if mode == "edge":
        measured = edge_connectivity(g)
        name = "edge connectivity"
    else:
        measured = vertex_connectivity(g)
        name = "vertex connectivity"
    if trace is not None:
        trace.mode, trace.k, trace.connectivity, trace.diameter = mode, k, measured, d
    if d is None:
        raise PreconditionError(f"{name} gate needs a finite diameter")
    required = factor(d)
    if trace is not None:
        trace.required = required
    if measured < required:
        raise PreconditionError(f"{name} {measured} < {required} (diameter {d}, k={k})")
    logging.info("gate passed: %s %d >= %d, diameter %d", name, measured, required, d)


def _greedy_edge(g, edge_marks, k, trace) -> Tour:
    edge_marks = check_edge_marks(g, edge_marks)
    if len(edge_marks) != k:
        raise GraphError(f"expected {k} marked edges, got {len(edge_marks)}")
    pairs = round_robin_pairs(edge_marks)
    removed = set()
    paths = []
    for number, (s, t) in enumerate(pairs, 1):
        path = _bfs_path(g, s, t, removed=removed)
        if path is None:
            raise ConstructionError(f"round {number}: no path {s} -> {t} left")
        logging.info("round %d: %d -> %d via %s", number, s, t, path)
        if trace is not None:
            trace.rounds.append(((s, t), path))
        removed.update(g.edge_key(a, b) for a, b in zip(path, path[1:]))
        paths.append(path)
    repaired, swaps = repair_path_system(g, edge_marks, PathSystem(pairs, tuple(paths)))
    if trace is not None:
        trace.swaps = swaps
    tour = _stitch(repaired.paths)
    check = verify_tour(g, tour, edge_marks)
    if not check:
        raise ConstructionError(f"greedy tour fails verification: {check.reason}")
    return tour


def _shortest_cycle_through(g, v) -> Optional[List[int]]:
    """Shortest cycle of length >= 3 through v, ties towards the smaller first step"""
    best = None
    for w in g.sorted_neighbors(v):
        path = _bfs_path(g, w, v, removed={g.edge_key(v, w)}, banned=g.edge_key(w, v))
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return None if best is None else [v] + list(best[:-1])


def _greedy_vertex(g, marks, k, trace) -> OrderedCycle:
    marks = check_marks(g, marks)
    if len(marks) != k:
        raise GraphError(f"expected {k} marks, got {len(marks)}")
    if k == 1:
        cycle = _shortest_cycle_through(g, marks[0])
        if cycle is None:
            raise ConstructionError(f"no cycle through {marks[0]}")
        logging.info("round 1: closed at %d via %s", marks[0], cycle)
        if trace is not None:
            trace.rounds.append(((marks[0], marks[0]), tuple(cycle + [marks[0]])))
    else:
        cycle = _greedy_rounds(g, marks, k, trace)
    result = OrderedCycle.through(cycle, marks)
    check = verify_ordered_cycle(g, result, marks)
    if not check:
        raise ConstructionError(f"greedy cycle fails verification: {check.reason}")
    return result


def _greedy_rounds(g, marks, k, trace) -> List[int]:
    deleted = set()
    removed = set()
    cycle: List[int] = []
    for i in range(k):
        s, t = marks[i], marks[(i + 1) % k]
        blocked = (set(marks) - {s, t}) | deleted
        banned = g.edge_key(s, t) if i == k - 1 and len(cycle) == 1 else None
        path = _bfs_path(g, s, t, removed=removed, blocked=blocked, banned=banned)
        if path is None:
            raise ConstructionError(f"round {i + 1}: no path {s} -> {t} left")
        logging.info("round %d: %d -> %d via %s", i + 1, s, t, path)
        if trace is not None:
            trace.rounds.append(((s, t), path))
        deleted.update(path[1:-1])
        removed.update(g.edge_key(a, b) for a, b in zip(path, path[1:]))
        cycle.extend(path[:-1])
    return cycle


def greedy_edge_tour(d, edge_marks, k: int, trace: Optional[GreedyTrace] = None) -> Tour:
    """
    Ordered tour in a digraph whose arc connectivity is at least (2k-1) * ceil(d/2) + 1

    2k rounds of breadth-first shortest paths along the round-robin pairs, deleting
    the arcs of each path, then the swap repair.
    """
    d = as_graph(d)
    if not d.directed:
        raise PreconditionError("greedy_edge_tour expects a digraph")
    _gate(d, "edge", k, lambda diam: (2 * k - 1) * math.ceil(diam / 2) + 1, trace)
    return _greedy_edge(d, edge_marks, k, trace)


def greedy_vertex_cycle(d, marks, k: int, trace: Optional[GreedyTrace] = None) -> OrderedCycle:
    """
    Ordered cycle in a digraph whose vertex connectivity is at least (k-1) * d

    Round i takes a shortest path from v_i to v_(i+1) avoiding the other marks and
    the interior vertices of earlier rounds.
    """
    d = as_graph(d)
    if not d.directed:
        raise PreconditionError("greedy_vertex_cycle expects a digraph")
    if k < 1:
        raise GraphError(f"need k >= 1, got k={k}")
    if d.n < 3:
        raise PreconditionError(f"cycles need n >= 3, got n={d.n}")
    _gate(d, "vertex", k, lambda diam: (k - 1) * diam, trace)
    return _greedy_vertex(d, marks, k, trace)


def greedy_undirected(g, marks_or_edges, k: int, mode: str = "edge", trace=None):
    """
    Undirected greedy construction, gated on (2k-1) * d + 1

    :param mode: "edge" for an ordered tour through k marked edges, "vertex" for an
        ordered cycle through k marked vertices
    """
    g = as_graph(g)
    if g.directed:
        raise PreconditionError("greedy_undirected expects an undirected graph")
    if mode not in ("edge", "vertex"):
        raise GraphError(f"unknown mode {mode!r}")
    if k < 1:
        raise GraphError(f"need k >= 1, got k={k}")
    if mode == "vertex" and g.n < 3:
        raise PreconditionError(f"cycles need n >= 3, got n={g.n}")
    _gate(g, mode, k, lambda diam: (2 * k - 1) * diam + 1, trace)
    if mode == "edge":
        return _greedy_edge(g, marks_or_edges, k, trace)
    return _greedy_vertex(g, marks_or_edges, k, trace)


#### Tours to linkages


def _pick_edges(g, terminals):
    """Distinct edges at s_i and t_i, far ends off the terminals where possible"""
    ends = {v for pair in terminals for v in pair}
    chosen = []
    taken = set()
    for s, t in terminals:
        if s == t:
            continue
        for x in (s, t):
            options = [w for w in g.sorted_neighbors(x) if g.edge_key(x, w) not in taken]
            options.sort(key=lambda w: (w in ends, w))
            w = options[0]
            taken.add(g.edge_key(x, w))
            chosen.append((x, w))
    return chosen


def _forward(tour, keys, g):
    steps = tour.steps()
    index = {g.edge_key(a, b): j for j, (a, b) in enumerate(steps)}
    positions = [index[key] for key in keys]
    offsets = [(p - positions[0]) % len(steps) for p in positions]
    return all(a < b for a, b in zip(offsets, offsets[1:]))


def _loop_erase(walk):
    path: List[int] = []
    for v in walk:
        if v in path:
            del path[path.index(v) + 1 :]
        else:
            path.append(v)
    return tuple(path)


def tour_to_linkage(
    g,
    terminals,
    provider: Optional[Callable] = None,
    budget=DEFAULT_BUDGET,
) -> Optional[PathSystem]:
    """
    Edge-disjoint s_i -> t_i paths read off an ordered tour

    Picks distinct edges at s_1, t_1, s_2, t_2, ..., asks provider for a tour through
    them in that order and cuts the tour between consecutive picks. Needs minimum
    degree 2k so the picks can be distinct.

    :param provider: callable (g, edge_marks, budget) -> Tour or None;
        find_ordered_tour by default
    :return: a validated PathSystem, or None if the provider found no tour
    """
    g = as_graph(g)
    if g.directed:
        raise PreconditionError("tour_to_linkage expects an undirected graph")
    terminals = tuple((int(s), int(t)) for s, t in terminals)
    k = len(terminals)
    for s, t in terminals:
        if not (g.has_vertex(s) and g.has_vertex(t)):
            raise GraphError(f"terminal pair ({s}, {t}) is not in the graph")
    low = min(g.degrees())
    if low < 2 * k:
        raise PreconditionError(f"minimum degree {low} < 2k = {2 * k}")
    provider = provider or find_ordered_tour
    picks = _pick_edges(g, terminals)
    if not picks:
        return PathSystem(terminals, tuple((s,) for s, _ in terminals))
    tour = provider(g, picks, budget)
    if tour is None:
        logging.warning("no ordered tour through %s", picks)
        return None
    keys = [g.edge_key(a, b) for a, b in picks]
    if not _forward(tour, keys, g):
        tour = tour.reversed()
    steps = tour.steps()
    index = {g.edge_key(a, b): j for j, (a, b) in enumerate(steps)}
    shift = index[keys[0]]
    walk = tour.walk[shift:] + tour.walk[:shift]
    walk = walk + walk[:1]
    index = {key: (j - shift) % len(steps) for key, j in index.items()}

    paths = []
    picked = iter(range(len(picks)))
    for s, t in terminals:
        if s == t:
            paths.append((s,))
            continue
        a, b = index[keys[next(picked)]], index[keys[next(picked)]]
        start = a if walk[a] == s else a + 1
        stop = b + 1 if walk[b + 1] == t else b
        paths.append(_loop_erase(walk[start : stop + 1]))
    system = PathSystem(terminals, tuple(paths))
    check = system.validate(g)
    if not check:
        raise ConstructionError(f"extracted linkage fails validation: {check.reason}")
    return system
