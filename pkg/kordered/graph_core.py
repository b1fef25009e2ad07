#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""\
Graph model shared by every part of kordered

Simple undirected graphs and digraphs with dense integer vertices, the bracelet
partition structure, and the witness objects (ordered cycles and tours) together
with their independent verifiers.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple, Union

import networkx as nx

Vertex = int
Edge = Tuple[int, int]
MarkSequence = Tuple[int, ...]
EdgeSequence = Tuple[Edge, ...]


#### Errors


class KOrderedError(Exception):
    """Root of every error raised by kordered"""


class GraphError(KOrderedError, ValueError):
    """Malformed graph, bracelet spec, mark or edge sequence"""


class PreconditionError(KOrderedError, ValueError):
    """A hypothesis of a construction is not met by the measured input"""


class ConstructionError(KOrderedError, RuntimeError):
    """A constructor reached a state its case analysis excludes"""


class BudgetExceeded(KOrderedError):
    """The backtracking node budget ran out"""

    def __init__(self, nodes, budget, sequence=None):
        super().__init__(f"node budget {budget} exceeded after {nodes} nodes")
        self.nodes = nodes
        self.budget = budget
        self.sequence = sequence


#### Graphs


class _SimpleGraph:
    """
    Adjacency-set graph on the vertices 0..n-1

    Instances are immutable: the adjacency is stored as a tuple of frozensets and
    every derived structure is computed once in the constructor.
    """

    directed = False

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adjacency = [set() for _ in range(n)]
        seen = set()
        for edge in edges:
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = self._key(u, v)
            if key in seen:
                raise GraphError(f"multi-edge {key}")
            seen.add(key)
            adjacency[u].add(v)
            if not self.directed:
                adjacency[v].add(u)
        self.n = n
        self._adjacency = tuple(frozenset(s) for s in adjacency)
        self._sorted = tuple(tuple(sorted(s)) for s in adjacency)
        self._edges = tuple(sorted(seen))

    @classmethod
    def _key(cls, u: int, v: int) -> Edge:
        if cls.directed:
            return (u, v)
        return (u, v) if u < v else (v, u)

    def edge_key(self, u: int, v: int) -> Edge:
        """Canonical form of the edge uv: sorted pair, or the arc itself"""
        return self._key(u, v)

    @property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        """Out-neighborhoods indexed by vertex"""
        return self._adjacency

    def vertices(self) -> range:
        """All vertex ids"""
        return range(self.n)

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Neighbors (out-neighbors for digraphs)"""
        return self._adjacency[v]

    def sorted_neighbors(self, v: int) -> Tuple[int, ...]:
        """Neighbors in increasing id order, the tie-break used by every search"""
        return self._sorted[v]

    def has_edge(self, u: int, v: int) -> bool:
        """True if uv is an edge (the arc u->v for digraphs)"""
        return 0 <= u < self.n and v in self._adjacency[u]

    def has_vertex(self, v) -> bool:
        """True if v is a vertex id of this graph"""
        return isinstance(v, int) and 0 <= v < self.n

    def edges(self) -> Tuple[Edge, ...]:
        """Canonical edge keys in sorted order"""
        return self._edges

    @property
    def edge_count(self) -> int:
        """Number of edges (arcs)"""
        return len(self._edges)

    def degree(self, v: int) -> int:
        """Degree (out-degree for digraphs)"""
        return len(self._adjacency[v])

    def degrees(self) -> Tuple[int, ...]:
        """Degree of every vertex"""
        return tuple(len(s) for s in self._adjacency)

    def relabel(self, permutation: Sequence[int]):
        """Copy with vertex v renamed to permutation[v]"""
        if sorted(permutation) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return type(self)(
            self.n, ((permutation[u], permutation[v]) for u, v in self._edges)
        )

    def induced(self, vertices: Iterable[int]):
        """
        Induced subgraph on the given vertices

        Returns the subgraph, relabeled densely in increasing id order, and the tuple
        mapping each new id to the original one.
        """
        kept = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[v])
            for u, v in self._edges
            if u in index and v in index
        ]
        return type(self)(len(kept), edges), kept

    def without_edges(self, removed: Iterable[Edge]):
        """Copy with the given edges deleted"""
        dropped = {self._key(u, v) for u, v in removed}
        return type(self)(self.n, (e for e in self._edges if e not in dropped))

    def to_networkx(self):
        """Same graph as a networkx Graph or DiGraph"""
        result = nx.DiGraph() if self.directed else nx.Graph()
        result.add_nodes_from(range(self.n))
        result.add_edges_from(self._edges)
        return result

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((type(self).__name__, self.n, self._edges))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={len(self._edges)})"


class Graph(_SimpleGraph):
    """Finite simple undirected graph"""

    directed = False


class Digraph(_SimpleGraph):
    """Finite simple digraph: no loops, at most one arc per ordered pair"""

    directed = True

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        super().__init__(n, edges)
        predecessors = [set() for _ in range(n)]
        for u, v in self._edges:
            predecessors[v].add(u)
        self._predecessors = tuple(frozenset(s) for s in predecessors)

    def predecessors(self, v: int) -> FrozenSet[int]:
        """In-neighbors of v"""
        return self._predecessors[v]

    def out_degree(self, v: int) -> int:
        """Number of arcs leaving v"""
        return len(self._adjacency[v])

    def in_degree(self, v: int) -> int:
        """Number of arcs entering v"""
        return len(self._predecessors[v])


AnyGraph = Union[Graph, Digraph]


def complete_graph(n: int) -> Graph:
    """K_n"""
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_digraph(n: int) -> Digraph:
    """Complete digraph: both arcs between every pair"""
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v))


def cycle_graph(n: int, directed: bool = False) -> AnyGraph:
    """The cycle 0-1-...-(n-1)-0"""
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    cls = Digraph if directed else Graph
    return cls(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """The path 0-1-...-(n-1), a tree"""
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


#### Bracelets


@dataclass(frozen=True)
class BraceletSpec:
    """Cyclic sequence of part sizes"""

    part_sizes: Tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.part_sizes)
        object.__setattr__(self, "part_sizes", sizes)
        if len(sizes) < 3:
            raise GraphError(f"a bracelet needs at least 3 parts, got {len(sizes)}")
        if min(sizes) < 1:
            raise GraphError(f"bracelet parts must be nonempty, got {sizes}")

    @property
    def m(self) -> int:
        """Number of parts"""
        return len(self.part_sizes)

    @property
    def n(self) -> int:
        """Number of vertices"""
        return sum(self.part_sizes)


@dataclass(frozen=True)
class BraceletGraph:
    """A graph together with its bracelet partition"""

    spec: BraceletSpec
    graph: AnyGraph
    part_of: Tuple[int, ...]
    parts: Tuple[Tuple[int, ...], ...]
    family: str = "bracelet"
    params: Tuple[int, ...] = ()
    special_part: Optional[int] = None

    @property
    def n(self) -> int:
        """Number of vertices"""
        return self.graph.n

    @property
    def m(self) -> int:
        """Number of parts"""
        return len(self.parts)

    @property
    def directed(self) -> bool:
        """True for the directed variant"""
        return self.graph.directed

    @property
    def part_sizes(self) -> Tuple[int, ...]:
        """Part sizes in part order"""
        return self.spec.part_sizes

    def part_distance(self, i: int, j: int) -> int:
        """Number of part hops between parts i and j, the shorter way round"""
        step = (i - j) % self.m
        return min(step, self.m - step)

    def neighborhood_size(self, part: int) -> int:
        """Size of N(B) for any nonempty subset B of the given part"""
        return (
            self.part_sizes[(part - 1) % self.m] + self.part_sizes[(part + 1) % self.m]
        )

    def with_metadata(self, family: str, params: Sequence[int], special_part=None):
        """Same bracelet tagged with its family name and parameters"""
        return BraceletGraph(
            self.spec,
            self.graph,
            self.part_of,
            self.parts,
            family,
            tuple(params),
            special_part,
        )


def build_bracelet(spec: BraceletSpec, directed: bool = False) -> BraceletGraph:
    """
    Build the bracelet graph of a BraceletSpec

    Vertices are numbered part by part in the order of the part sizes. Consecutive parts (cyclically)
    are completely joined; in the directed variant every arc goes from part i to
    part i+1.
    """
    if not isinstance(spec, BraceletSpec):
        spec = BraceletSpec(tuple(spec))
    parts = []
    part_of = []
    start = 0
    for index, size in enumerate(spec.part_sizes):
        parts.append(tuple(range(start, start + size)))
        part_of.extend([index] * size)
        start += size
    edges = []
    m = spec.m
    for index in range(m):
        following = parts[(index + 1) % m]
        for u in parts[index]:
            for v in following:
                edges.append((u, v))
    cls = Digraph if directed else Graph
    return BraceletGraph(spec, cls(spec.n, edges), tuple(part_of), tuple(parts))


def as_graph(obj) -> AnyGraph:
    """The underlying graph of a graph or bracelet"""
    if isinstance(obj, BraceletGraph):
        return obj.graph
    return obj


#### Witnesses


@dataclass(frozen=True)
class Check:
    """Outcome of a verifier: truthy iff ok, with a machine-readable reason"""

    ok: bool
    reason: str = "ok"
    detail: str = ""

    def __bool__(self):
        return self.ok


PASSED = Check(True)


def _fail(reason, detail=""):
    return Check(False, reason, detail)


@dataclass(frozen=True)
class OrderedCycle:
    """Cycle as a vertex sequence; the closing edge joins the last and first vertex"""

    vertices: Tuple[int, ...]
    marked_positions: Tuple[int, ...] = field(default=())

    @classmethod
    def through(cls, vertices: Sequence[int], marks: Sequence[int]) -> "OrderedCycle":
        """Cycle with the positions of the given marks recorded"""
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        return cls(vertices, tuple(index[v] for v in marks if v in index))

    def __len__(self):
        return len(self.vertices)

    def rotated(self, shift: int) -> "OrderedCycle":
        """Same cycle listed from position shift onwards"""
        length = len(self.vertices)
        shift %= length
        return OrderedCycle(
            self.vertices[shift:] + self.vertices[:shift],
            tuple((p - shift) % length for p in self.marked_positions),
        )

    def reflected(self) -> "OrderedCycle":
        """Same cycle traversed the other way round"""
        length = len(self.vertices)
        return OrderedCycle(
            tuple(reversed(self.vertices)),
            tuple(length - 1 - p for p in self.marked_positions),
        )

    def edges(self) -> Tuple[Edge, ...]:
        """Consecutive pairs, closing pair last"""
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


@dataclass(frozen=True)
class Tour:
    """Closed walk given by its vertex sequence; edge i joins walk[i] and walk[i+1]"""

    walk: Tuple[int, ...]

    def __len__(self):
        return len(self.walk)

    def steps(self) -> Tuple[Edge, ...]:
        """Traversed (tail, head) pairs in order"""
        w = self.walk
        return tuple((w[i], w[(i + 1) % len(w)]) for i in range(len(w)))

    def reversed(self) -> "Tour":
        """Same closed walk traversed backwards"""
        return Tour(tuple(reversed(self.walk)))


def check_marks(g, marks: Sequence[int]) -> MarkSequence:
    """Validate a mark sequence against g and return it as a tuple"""
    g = as_graph(g)
    marks = tuple(marks)
    for v in marks:
        if not g.has_vertex(v):
            raise GraphError(f"mark {v} is not a vertex")
    if len(set(marks)) != len(marks):
        raise GraphError(f"marks must be distinct, got {marks}")
    return marks


def check_edge_marks(g, edge_marks: Sequence[Edge]) -> EdgeSequence:
    """Validate an edge sequence against g and return it as a tuple of pairs"""
    g = as_graph(g)
    edge_marks = tuple((int(u), int(v)) for u, v in edge_marks)
    keys = []
    for u, v in edge_marks:
        if not g.has_edge(u, v):
            raise GraphError(f"marked edge ({u}, {v}) is not in the graph")
        keys.append(g.edge_key(u, v))
    if len(set(keys)) != len(keys):
        raise GraphError("marked edges must be distinct")
    return edge_marks


def _in_cyclic_order(positions: Sequence[int], length: int) -> bool:
    offsets = [(p - positions[0]) % length for p in positions]
    return all(a < b for a, b in zip(offsets, offsets[1:]))


def verify_ordered_cycle(
    g, cycle: OrderedCycle, marks: Sequence[int], require_hamiltonian: bool = False
) -> Check:
    """
    Check that cycle is a simple cycle of g meeting marks in cyclic order

    Undirected cycles may be traversed either way; digraph cycles only along their
    arcs. Never raises.
    """
    g = as_graph(g)
    vertices = tuple(cycle.vertices)
    marks = tuple(marks)
    if len(vertices) < 3:
        return _fail("too-short", f"length {len(vertices)}")
    for v in vertices:
        if not g.has_vertex(v):
            return _fail("unknown-vertex", str(v))
    if len(set(vertices)) != len(vertices):
        return _fail("repeated-vertex")
    for u, v in cycle.edges():
        if not g.has_edge(u, v):
            return _fail("missing-edge", f"{u}-{v}")
    if len(set(marks)) != len(marks):
        return _fail("bad-marks", "repeated mark")
    index = {v: i for i, v in enumerate(vertices)}
    missing = [v for v in marks if v not in index]
    if missing:
        return _fail("mark-missing", str(missing[0]))
    positions = [index[v] for v in marks]
    length = len(vertices)
    ordered = _in_cyclic_order(positions, length)
    if not ordered and not g.directed:
        ordered = _in_cyclic_order([-p for p in positions], length)
    if not ordered:
        return _fail("order-violated")
    if require_hamiltonian and length != g.n:
        return _fail("not-hamiltonian", f"{length} of {g.n} vertices")
    return PASSED


def verify_tour(g, tour: Tour, edge_marks: Sequence[Edge]) -> Check:
    """
    Check that tour is a closed walk with distinct edges meeting edge_marks in order

    An undirected marked edge may be traversed either way, and an undirected tour may
    be read in either direction. Never raises.
    """
    g = as_graph(g)
    steps = tour.steps()
    if len(steps) < 2:
        return _fail("too-short", f"length {len(steps)}")
    keys = []
    for u, v in steps:
        if not (g.has_vertex(u) and g.has_vertex(v)):
            return _fail("unknown-vertex", f"{u}-{v}")
        if not g.has_edge(u, v):
            return _fail("missing-edge", f"{u}-{v}")
        keys.append(g.edge_key(u, v))
    if len(set(keys)) != len(keys):
        return _fail("repeated-edge")
    wanted = []
    for u, v in edge_marks:
        if not (g.has_vertex(u) and g.has_vertex(v)):
            return _fail("bad-marks", f"{u}-{v}")
        wanted.append(g.edge_key(u, v))
    if len(set(wanted)) != len(wanted):
        return _fail("bad-marks", "repeated marked edge")
    index: Dict[Edge, int] = {key: i for i, key in enumerate(keys)}
    missing = [key for key in wanted if key not in index]
    if missing:
        return _fail("mark-missing", str(missing[0]))
    positions = [index[key] for key in wanted]
    length = len(steps)
    ordered = _in_cyclic_order(positions, length)
    if not ordered and not g.directed:
        ordered = _in_cyclic_order([-p for p in positions], length)
    if not ordered:
        return _fail("order-violated")
    return PASSED


def is_bipartite(g) -> bool:
    """Bipartiteness of the underlying undirected graph"""
    return nx.is_bipartite(as_graph(g).to_networkx().to_undirected())
