# -*- coding: utf-8 -*-

"""\
Connectivity, diameter and degree screens

Connectivities are exact: unit-capacity maximum flows (breadth-first augmenting
paths) over every required terminal pair, with the usual vertex splitting for the
vertex version.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .graph_core import BraceletGraph, PreconditionError, as_graph
from .order_oracle import Verdict


@dataclass(frozen=True)
class ConnectivityReport:
    """Exact connectivities, degree minima and diameter (None when infinite)"""

    vertex_connectivity: int
    edge_connectivity: int
    min_degree: int
    min_indeg: Optional[int]
    min_outdeg: Optional[int]
    diameter: Optional[int]
    directed: bool


def _flow_network(g, split):
    network = nx.DiGraph()
    for u, v in g.edges():
        arcs = [(u, v)] if g.directed else [(u, v), (v, u)]
        for tail, head in arcs:
            if split:
                network.add_edge((tail, "out"), (head, "in"), capacity=1)
            else:
                network.add_edge(tail, head, capacity=1)
    if split:
        for v in g.vertices():
            network.add_edge((v, "in"), (v, "out"), capacity=1)
    else:
        network.add_nodes_from(g.vertices())
    return network


def _flow(network, source, sink):
    return nx.maximum_flow_value(network, source, sink, flow_func=edmonds_karp)


def vertex_connectivity(g) -> int:
    """Smallest vertex cut, n-1 for complete (di)graphs"""
    g = as_graph(g)
    network = _flow_network(g, split=True)
    best = g.n - 1
    for s in g.vertices():
        targets = range(g.n) if g.directed else range(s + 1, g.n)
        for t in targets:
            if s == t or g.has_edge(s, t):
                continue
            best = min(best, _flow(network, (s, "out"), (t, "in")))
    return best


def edge_connectivity(g) -> int:
    """Smallest edge cut"""
    g = as_graph(g)
    network = _flow_network(g, split=False)
    best = None if g.n > 1 else 0
    for t in range(1, g.n):
        value = _flow(network, 0, t)
        if g.directed:
            value = min(value, _flow(network, t, 0))
        best = value if best is None else min(best, value)
    return best


def diameter(g) -> Optional[int]:
    """Largest distance over ordered pairs; None if some pair is unreachable"""
    g = as_graph(g)
    worst = 0
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        if len(lengths) != g.n:
            logging.debug("vertex %d does not reach every vertex", source)
            return None
        worst = max(worst, max(lengths.values()))
    return worst


def connectivity(g) -> ConnectivityReport:
    """Connectivity report of a graph, digraph or bracelet with n >= 2"""
    g = as_graph(g)
    if g.n < 2:
        raise PreconditionError("connectivity needs at least 2 vertices")
    if g.directed:
        min_in = min(g.in_degree(v) for v in g.vertices())
        min_out = min(g.out_degree(v) for v in g.vertices())
        min_degree = min(min_in, min_out)
    else:
        min_in = min_out = None
        min_degree = min(g.degrees())
    return ConnectivityReport(
        vertex_connectivity(g),
        edge_connectivity(g),
        min_degree,
        min_in,
        min_out,
        diameter(g),
        g.directed,
    )


def _connected(g, kept) -> bool:
    sub = g.to_networkx().subgraph(kept)
    if g.directed:
        return nx.is_strongly_connected(sub)
    return nx.is_connected(sub)


def exhaustive_connectivity(g) -> Tuple[int, int]:
    """
    Vertex and edge connectivity by enumerating every cut

    Exponential in n; meant as an independent check on small graphs.
    """
    g = as_graph(g)
    everything = set(g.vertices())
    vertex = g.n - 1
    for size in range(0, g.n - 1):
        if any(not _connected(g, everything - set(cut)) for cut in combinations(range(g.n), size)):
            vertex = size
            break
    edge = None
    for size in range(1, g.n):
        for side in combinations(range(g.n), size):
            inside = set(side)
            if g.directed:
                leaving = sum(1 for u, v in g.edges() if u in inside and v not in inside)
            else:
                leaving = sum(1 for u, v in g.edges() if (u in inside) != (v in inside))
            edge = leaving if edge is None else min(edge, leaving)
    return vertex, edge


#### Bounds


@dataclass(frozen=True)
class DiameterBoundReport:
    """Diameter against the bound implied by 2k- or (2k+1)-orderedness"""

    n: int
    k: int
    order: int
    diameter: Optional[int]
    bound: int
    family_bound: int
    applicable: bool
    satisfied: bool

    @property
    def slack(self) -> Optional[int]:
        """bound - diameter"""
        return None if self.diameter is None else self.bound - self.diameter


def check_diameter_bound(g, k: int, orderedness: Verdict) -> DiameterBoundReport:
    """
    Compare the diameter with (n-3) // 2k + 2

    The bound applies when orderedness certifies 2k- or (2k+1)-orderedness.
    family_bound, (n-3) // 2k + 1, is the diameter reached by the uniform family.
    """
    g = as_graph(g)
    d = diameter(g)
    bound = (g.n - 3) // (2 * k) + 2
    applicable = orderedness.holds and orderedness.order in (2 * k, 2 * k + 1)
    satisfied = not applicable or (d is not None and d <= bound)
    if not satisfied:
        logging.error("diameter %s exceeds the bound %d for order %d", d, bound, orderedness.order)
    return DiameterBoundReport(
        g.n, k, orderedness.order, d, bound, bound - 1, applicable, satisfied
    )


@dataclass(frozen=True)
class NecessaryReport:
    """Violations of the degree and cut conditions for a k-ordered digraph"""

    k: int
    vertex_connectivity: int
    violations: Tuple[str, ...]

    @property
    def passes(self) -> bool:
        """No violation found (necessary, not sufficient)"""
        return not self.violations


def check_directed_necessary(d, k: int) -> NecessaryReport:
    """Every in- and out-degree and the vertex connectivity must reach k-1"""
    d = as_graph(d)
    if not d.directed:
        raise PreconditionError("expected a digraph")
    need = k - 1
    violations = []
    for v in d.vertices():
        if d.out_degree(v) < need:
            violations.append(f"vertex {v}: outdeg {d.out_degree(v)} < {need}")
        if d.in_degree(v) < need:
            violations.append(f"vertex {v}: indeg {d.in_degree(v)} < {need}")
    kappa = vertex_connectivity(d) if d.n >= 2 else 0
    if kappa < need:
        violations.append(f"vertex connectivity {kappa} < {need}")
    return NecessaryReport(k, kappa, tuple(violations))


@dataclass(frozen=True)
class DegreeAudit:
    """Structural screens a 2k-ordered bracelet must pass"""

    k: int
    part_sizes: Tuple[int, ...]
    part_degrees: Tuple[int, ...]
    min_part: int
    min_degree: int
    max_degree: int
    distance_two_sums: Tuple[int, ...]
    nonadjacent_min: Optional[int]
    failures: Tuple[Tuple[str, str], ...]

    @property
    def passes(self) -> bool:
        """True if no screen failed"""
        return not self.failures


def bracelet_degree_audit(bg: BraceletGraph, k: int) -> DegreeAudit:
    """
    Screen a bracelet for 2k-orderedness

    min-degree: degree at least 2k-1.
    separator: deleting two non-adjacent parts disconnects the bracelet, so they must
    hold at least 2k-1 vertices together.
    part-neighborhood (more than 5 parts): no part B with |B| <= k and
    |N(B)| < 2|B|, and no part with |B| > k and |N(B)| < 2k.
    degree-window (more than 6 parts): minimum degree 2k-1 with maximum degree
    below 2k+2 is impossible.
    """
    sizes, m = bg.part_sizes, bg.m
    degrees = tuple(bg.neighborhood_size(j) for j in range(m))
    failures = []
    need = 2 * k - 1
    if min(degrees) < need:
        j = degrees.index(min(degrees))
        failures.append(("min-degree", f"part {j} has degree {degrees[j]} < {need}"))

    nonadjacent = [
        (sizes[i] + sizes[j], i, j)
        for i, j in combinations(range(m), 2)
        if bg.part_distance(i, j) >= 2
    ]
    nonadjacent_min = min(nonadjacent)[0] if nonadjacent else None
    if nonadjacent and nonadjacent_min < need:
        total, i, j = min(nonadjacent)
        failures.append(("separator", f"parts {i} and {j} hold {total} < {need} vertices"))

    if m > 5:
        for j, size in enumerate(sizes):
            if size <= k and degrees[j] < 2 * size and bg.n - size - degrees[j] >= size:
                failures.append(("part-neighborhood", f"part {j}: |N| = {degrees[j]} < {2 * size}"))
                break
            if size > k and degrees[j] < 2 * k and bg.n - k - degrees[j] >= k:
                failures.append(("part-neighborhood", f"part {j}: |N| = {degrees[j]} < {2 * k}"))
                break

    if m > 6 and min(degrees) == need and max(degrees) < 2 * k + 2:
        failures.append(
            ("degree-window", f"degrees in [{min(degrees)}, {max(degrees)}] with {m} parts")
        )
    return DegreeAudit(
        k,
        sizes,
        degrees,
        min(sizes),
        min(degrees),
        max(degrees),
        tuple(sizes[j] + sizes[(j + 2) % m] for j in range(m)),
        nonadjacent_min,
        tuple(failures),
    )
