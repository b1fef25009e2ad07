# -*- coding: utf-8 -*-

"""\
Polynomial-time builders of ordered cycles in bracelet families

The uniform builders work by induction on k: a transversal of "free" vertices
(one per part, exactly two of them marked and consecutive in the mark sequence)
is peeled off, a cycle is built in what remains, and the transversal is spliced
back in. Every returned cycle is re-verified before it leaves this module.

The recursion works on lists of still-active vertices per part of the original
bracelet, so vertex ids never change and witnesses need no lifting.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .graph_core import (
    BraceletGraph,
    ConstructionError,
    OrderedCycle,
    PreconditionError,
    check_marks,
    verify_ordered_cycle,
)
from .order_oracle import DEFAULT_BUDGET, find_ordered_cycle

SKELETON_WIDTH = 2


@dataclass(frozen=True)
class FreeVertexSelection:
    """One vertex per part; exactly two of them are marks, consecutive in the sequence"""

    free: Tuple[int, ...]
    pair: Tuple[int, int]
    pair_vertices: Tuple[int, int]


@dataclass(frozen=True)
class StarCertificate:
    """For each adjacent part pair (j, j+1 mod m), one cycle edge crossing it"""

    crossings: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]

    def covers(self, m: int) -> bool:
        """True if every adjacent pair of an m-part bracelet is crossed"""
        wanted = {(j, (j + 1) % m) for j in range(m)}
        return wanted <= {pair for pair, _ in self.crossings}


#### Cycle list helpers


def _start_at(cycle: List[int], vertex: int) -> List[int]:
    i = cycle.index(vertex)
    return cycle[i:] + cycle[:i]


def _respects_order(cycle: Sequence[int], marks: Sequence[int]) -> bool:
    """cycle starts at marks[0]; True if it meets the marks forwards in order"""
    index = {v: i for i, v in enumerate(cycle)}
    if any(v not in index for v in marks):
        return False
    positions = [index[v] for v in marks]
    return all(a < b for a, b in zip(positions, positions[1:]))


def _orient(cycle: List[int], marks: Sequence[int]) -> List[int]:
    cycle = _start_at(cycle, marks[0])
    if _respects_order(cycle, marks):
        return cycle
    backwards = [cycle[0]] + cycle[:0:-1]
    if _respects_order(backwards, marks):
        return backwards
    raise ConstructionError(f"no traversal of {cycle} meets {marks} in order")


def _rotate_pair_last(marks: Sequence[int], i: int) -> List[int]:
    """Rotate marks so that marks[i], marks[i+1] become the last two"""
    r = (i + 2) % len(marks)
    return list(marks[r:]) + list(marks[:r])


def _detour(cycle: List[int], i: int, part_of, free) -> List[int]:
    """Replace the cycle edge at position i by a path through two free vertices"""
    p, q = cycle[i], cycle[(i + 1) % len(cycle)]
    return cycle[: i + 1] + [free[part_of[q]], free[part_of[p]]] + cycle[i + 1 :]


def _crossing_position(cycle, part_of, first, second) -> Optional[int]:
    for i, p in enumerate(cycle):
        q = cycle[(i + 1) % len(cycle)]
        if {part_of[p], part_of[q]} == {first, second}:
            return i
    return None


#### Free vertices


def _free_pair(parts, part_of, marks) -> Optional[int]:
    """
    Smallest i such that marks i and i+1 lie in different parts and every fully
    marked part is one of those two
    """
    mark_set = set(marks)
    full = {j for j, part in enumerate(parts) if part and mark_set.issuperset(part)}
    length = len(marks)
    for i in range(length):
        pa, pb = part_of[marks[i]], part_of[marks[(i + 1) % length]]
        if pa != pb and full <= {pa, pb}:
            return i
    return None


def _transversal(parts, part_of, marks, x, y) -> List[int]:
    """x and y in their own parts, the lowest unmarked active vertex elsewhere"""
    mark_set = set(marks)
    free = []
    for j, part in enumerate(parts):
        if j == part_of[x]:
            free.append(x)
        elif j == part_of[y]:
            free.append(y)
        else:
            candidates = [v for v in part if v not in mark_set]
            if not candidates:
                raise ConstructionError(f"part {j} has no unmarked vertex left")
            free.append(candidates[0])
    return free


def _uniform_shape(bg: BraceletGraph, even_parts: bool) -> int:
    sizes = bg.part_sizes
    if bg.directed or len(set(sizes)) != 1:
        raise PreconditionError(f"expected a uniform undirected bracelet, got {sizes}")
    if bg.m < 4 or (even_parts and bg.m % 2):
        raise PreconditionError(f"unsupported part count {bg.m}")
    return sizes[0]


def select_free_vertices(bg: BraceletGraph, marks: Sequence[int]) -> FreeVertexSelection:
    """
    Pick free vertices for 2k+1 marks in a uniform bracelet

    At most two parts can be fully marked; the consecutive marked pair is the first
    one whose two parts differ and include every fully marked part. The remaining
    parts contribute their lowest unmarked vertex. With k = 1 every part is a single
    vertex, so the selection is the whole vertex set.
    """
    k = _uniform_shape(bg, even_parts=False)
    marks = check_marks(bg, marks)
    if len(marks) != 2 * k + 1:
        raise PreconditionError(f"expected {2 * k + 1} marks, got {len(marks)}")
    length = len(marks)
    if k == 1:
        i = next(
            j
            for j in range(length)
            if bg.part_of[marks[j]] != bg.part_of[marks[(j + 1) % length]]
        )
        free = [part[0] for part in bg.parts]
    else:
        i = _free_pair(bg.parts, bg.part_of, marks)
        if i is None:
            raise ConstructionError(f"no free-vertex pair for {marks}")
        free = _transversal(bg.parts, bg.part_of, marks, marks[i], marks[(i + 1) % length])
    pair = (i, (i + 1) % length)
    return FreeVertexSelection(tuple(free), pair, (marks[pair[0]], marks[pair[1]]))


#### Splicing


def _splice(part_of, m, inner, free, marks, reroute):
    """
    Insert the free transversal into the inner cycle

    inner starts at marks[0] and meets marks[:-2] in order; free[j] is the free
    vertex of part j and contains the last two marks x, y. a is the last inner mark
    and u its successor on inner.
    """
    a, x, y = marks[-3], marks[-2], marks[-1]
    ia = inner.index(a)
    head, tail = inner[: ia + 1], inner[ia + 1 :]
    u = tail[0] if tail else inner[0]
    pa, px, py, pu = (part_of[v] for v in (a, x, y, u))

    def at(j):
        return free[j % m]

    if pa != px:
        for direction in (1, -1):
            trip = [at(pa + direction * s) for s in range(1, m + 1)]
            candidate = head + trip + tail
            if _respects_order(candidate, marks):
                logging.debug("splice: x off a's part, direction %d", direction)
                return candidate
        raise ConstructionError("neither direction around the free cycle keeps the order")

    e = 1 if (pu - pa) % m == 1 else -1
    if pu != py:
        logging.debug("splice: x in a's part, u outside y's part")
        trip = [at(px - e * s) for s in range(1, m - 1)]
        return head + [at(pu), x] + trip + tail

    logging.debug("splice: x in a's part, u in y's part")
    cycle = head + [at(px - e), x, y, at(px + 2 * e)] + tail
    if reroute:
        for step in range(3, m - 2, 2):
            first, second = (px + step * e) % m, (px + (step + 1) * e) % m
            i = _crossing_position(cycle, part_of, first, second)
            if i is None:
                raise ConstructionError(f"no cycle edge crosses parts {first}, {second}")
            cycle = _detour(cycle, i, part_of, free)
    return cycle


def _uniform_cycle(parts, part_of, m, marks, reroute) -> List[int]:
    """Ordered cycle through 2k+1 marks in the uniform bracelet given by parts"""
    k = len(parts[0])
    if k == 1:
        return _orient([part[0] for part in parts], marks)
    i = _free_pair(parts, part_of, marks)
    if i is None:
        raise ConstructionError(f"no free-vertex pair for {marks}")
    rotated = _rotate_pair_last(marks, i)
    free = _transversal(parts, part_of, marks, rotated[-2], rotated[-1])
    inner_parts = [[v for v in part if v != free[j]] for j, part in enumerate(parts)]
    inner = _uniform_cycle(inner_parts, part_of, m, rotated[:-2], reroute)
    cycle = _splice(part_of, m, inner, free, rotated, reroute)
    return _start_at(cycle, marks[0])


def _finish(bg, vertices, marks, hamiltonian) -> OrderedCycle:
    cycle = OrderedCycle.through(_start_at(list(vertices), marks[0]), marks)
    check = verify_ordered_cycle(bg.graph, cycle, marks, hamiltonian)
    if not check:
        raise ConstructionError(
            f"built cycle fails verification ({check.reason} {check.detail})"
        )
    return cycle


def star_certificate(bg: BraceletGraph, cycle: OrderedCycle) -> StarCertificate:
    """Crossing edge of every adjacent part pair; ConstructionError if one is missing"""
    m = bg.m
    crossings = {}
    for u, v in cycle.edges():
        pu, pv = bg.part_of[u], bg.part_of[v]
        if (pv - pu) % m == 1:
            crossings.setdefault((pu, pv), (u, v))
        elif (pu - pv) % m == 1:
            crossings.setdefault((pv, pu), (u, v))
    missing = [(j, (j + 1) % m) for j in range(m) if (j, (j + 1) % m) not in crossings]
    if missing:
        raise ConstructionError(f"parts {missing[0]} are not crossed by the cycle")
    return StarCertificate(tuple(sorted(crossings.items())))


def reroute_alpha(bg: BraceletGraph, cycle: OrderedCycle, edge, c: int, d: int) -> OrderedCycle:
    """
    Replace the cycle edge ab by the path a-d-c-b

    c must share a's part and d must share b's part; neither may be on the cycle.
    """
    a, b = edge
    vertices = list(cycle.vertices)
    length = len(vertices)
    position = next(
        (
            i
            for i in range(length)
            if {vertices[i], vertices[(i + 1) % length]} == {a, b}
        ),
        None,
    )
    if position is None:
        raise PreconditionError(f"({a}, {b}) is not an edge of the cycle")
    if c in vertices or d in vertices:
        raise PreconditionError("detour vertices must be off the cycle")
    if bg.part_of[c] != bg.part_of[a] or bg.part_of[d] != bg.part_of[b]:
        raise PreconditionError("c must share a's part and d must share b's part")
    g = bg.graph
    if not (g.has_edge(a, d) and g.has_edge(d, c) and g.has_edge(c, b)):
        raise PreconditionError("a-d-c-b is not a path of the graph")
    if vertices[position] == a:
        detour = [d, c]
    else:
        detour = [c, d]
    rerouted = vertices[: position + 1] + detour + vertices[position + 1 :]
    marks = [vertices[p] for p in cycle.marked_positions]
    return OrderedCycle.through(rerouted, marks)


#### Uniform bracelets


def construct_G_hamiltonian(bg: BraceletGraph, marks: Sequence[int]):  # pylint: disable=invalid-name
    """
    Hamiltonian cycle through 2k+1 marks of G_{k,2m} in order

    :return: the cycle and the certificate that it crosses every adjacent part pair
    """
    k = _uniform_shape(bg, even_parts=True)
    marks = check_marks(bg, marks)
    if len(marks) != 2 * k + 1:
        raise PreconditionError(f"expected {2 * k + 1} marks, got {len(marks)}")
    vertices = _uniform_cycle([list(p) for p in bg.parts], bg.part_of, bg.m, marks, True)
    cycle = _finish(bg, vertices, marks, hamiltonian=True)
    return cycle, star_certificate(bg, cycle)


def construct_G_cycle(bg: BraceletGraph, marks: Sequence[int]) -> OrderedCycle:  # pylint: disable=invalid-name
    """Ordered (not necessarily hamiltonian) cycle through 2k+1 marks of G_{k,m}, m >= 4"""
    k = _uniform_shape(bg, even_parts=False)
    marks = check_marks(bg, marks)
    if len(marks) != 2 * k + 1:
        raise PreconditionError(f"expected {2 * k + 1} marks, got {len(marks)}")
    vertices = _uniform_cycle([list(p) for p in bg.parts], bg.part_of, bg.m, marks, False)
    return _finish(bg, vertices, marks, hamiltonian=False)


#### General bracelets


def _two_in_part(parts, part_of, m, marks, big) -> List[int]:
    """Three marks, two of them in part big"""
    i = next(
        j for j in range(3) if part_of[marks[j]] == big and part_of[marks[(j + 1) % 3]] != big
    )
    a, x, y = _rotate_pair_last(marks, i)
    other = part_of[y]
    if (other - big) % m in (1, m - 1):
        e = 1 if (other - big) % m == 1 else -1
        cycle = [a, parts[(big - e) % m][0], x, y]
    else:
        if len(parts[(big + 1) % m]) >= 2:
            s = 1
        elif len(parts[(big - 1) % m]) >= 2:
            s = -1
        else:
            raise PreconditionError(f"the parts next to part {big} hold fewer than 3 vertices")
        z1, z2 = parts[(big + s) % m][:2]
        trip = []
        for t in range(1, m - 1):
            j = (big - s * t) % m
            trip.append(y if j == other else parts[j][0])
        cycle = [a, z1, x] + trip + [z2]
    return _start_at(cycle, marks[0])


def _bracelet_cycle(parts, part_of, m, marks) -> List[int]:
    length = len(marks)
    k = (length - 1) // 2
    marked = [[v for v in marks if part_of[v] == j] for j in range(m)]
    if all(len(group) <= k for group in marked):
        mark_set = set(marks)
        chosen = []
        for j, part in enumerate(parts):
            fill = [v for v in part if v not in mark_set][: k - len(marked[j])]
            chosen.append(sorted(marked[j] + fill))
        return _uniform_cycle(chosen, part_of, m, marks, reroute=False)

    big = next(j for j, group in enumerate(marked) if len(group) > k)
    if len(marked[big]) == length:
        pool = parts[(big - 1) % m] + parts[(big + 1) % m]
        if len(pool) < length:
            raise PreconditionError(f"the parts next to part {big} hold fewer than {length} vertices")
        cycle = []
        for mark, between in zip(marks, pool):
            cycle.extend((mark, between))
        return cycle
    if k == 1:
        return _two_in_part(parts, part_of, m, marks, big)

    i = next(
        j
        for j in range(length)
        if part_of[marks[j]] == big and part_of[marks[(j + 1) % length]] != big
    )
    rotated = _rotate_pair_last(marks, i)
    free = _transversal(parts, part_of, marks, rotated[-2], rotated[-1])
    inner_parts = [[v for v in part if v != free[j]] for j, part in enumerate(parts)]
    inner = _bracelet_cycle(inner_parts, part_of, m, rotated[:-2])
    cycle = _splice(part_of, m, inner, free, rotated, reroute=False)
    return _start_at(cycle, marks[0])


def construct_bracelet_cycle(bg: BraceletGraph, marks: Sequence[int]) -> OrderedCycle:
    """
    Ordered cycle through 2k+1 marks of a bracelet with large enough parts

    Needs at least 4 parts and k vertices per part. When some part holds more than k
    marks, every two parts at distance 2 must also hold 2k+1 vertices together.
    """
    if bg.directed:
        raise PreconditionError("expected an undirected bracelet")
    marks = check_marks(bg, marks)
    length = len(marks)
    if length < 3 or length % 2 == 0:
        raise PreconditionError(f"expected an odd number (>= 3) of marks, got {length}")
    k = (length - 1) // 2
    sizes = bg.part_sizes
    if bg.m < 4:
        raise PreconditionError(f"need at least 4 parts, got {bg.m}")
    if min(sizes) < k:
        raise PreconditionError(f"every part needs at least {k} vertices, got {sizes}")
    crowded = any(sum(1 for v in marks if bg.part_of[v] == j) > k for j in range(bg.m))
    if crowded:
        for j in range(bg.m):
            total = sizes[j] + sizes[(j + 2) % bg.m]
            if total < length:
                raise PreconditionError(
                    f"parts {j} and {(j + 2) % bg.m} hold {total} < {length} vertices"
                )
    vertices = _bracelet_cycle([list(p) for p in bg.parts], bg.part_of, bg.m, marks)
    return _finish(bg, vertices, marks, hamiltonian=False)


#### Low-degree family


def _skeleton_search(g, parts, marks, budget) -> List[int]:
    """
    Ordered cycle by backtracking inside the active vertices

    The search first runs on the marks plus a few unmarked vertices per part, then on
    every active vertex.
    """
    mark_set = set(marks)
    skeleton = set(marks)
    for part in parts:
        skeleton.update([v for v in part if v not in mark_set][:SKELETON_WIDTH])
    active = {v for part in parts for v in part}
    for allowed in (skeleton, active):
        sub, kept = g.induced(allowed)
        index = {v: i for i, v in enumerate(kept)}
        found = find_ordered_cycle(sub, [index[v] for v in marks], budget=budget)
        if found is not None:
            logging.debug("skeleton search succeeded on %d vertices", len(kept))
            return [kept[v] for v in found.vertices]
    raise ConstructionError(f"no ordered cycle through {marks} among the active vertices")


def _mark_runs(part_of, marks) -> List[List[int]]:
    """Maximal runs of cyclically consecutive marks sharing a part"""
    length = len(marks)
    start = next((i for i in range(length) if part_of[marks[i - 1]] != part_of[marks[i]]), 0)
    runs = []
    for v in list(marks[start:]) + list(marks[:start]):
        if runs and part_of[runs[-1][-1]] == part_of[v]:
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def _bounce_allocation(spare, homes, runs, m) -> Optional[dict]:
    """
    Neighbor parts lending the unmarked vertices between consecutive marks of a run

    Maximum flow from the runs to the parts next to them; a part the walk passes
    through keeps one vertex back for it.
    """
    need = sum(len(run) - 1 for run in runs)
    if need == 0:
        return {}
    network = nx.DiGraph()
    network.add_nodes_from(["source", "sink"])
    for r, run in enumerate(runs):
        if len(run) > 1:
            network.add_edge("source", ("run", r), capacity=len(run) - 1)
            for j in {(homes[r] + 1) % m, (homes[r] - 1) % m}:
                network.add_edge(("run", r), ("part", j), capacity=len(run) - 1)
    for j in range(m):
        room = len(spare[j]) - (0 if j in homes else 1)
        if room > 0:
            network.add_edge(("part", j), "sink", capacity=room)
    value, flow = nx.maximum_flow(network, "source", "sink", flow_func=edmonds_karp)
    if value < need:
        return None
    return flow


def _winding_cycle(parts, part_of, m, marks) -> Optional[List[int]]:
    """
    Cycle winding once around the bracelet, or None if the marks do not allow one

    The marks must form runs in pairwise different parts, met in one rotational
    direction. Consecutive marks of a run are joined through unmarked vertices of the
    neighboring parts; every part between two runs gives one vertex to the walk.
    """
    runs = _mark_runs(part_of, marks)
    homes = [part_of[run[0]] for run in runs]
    if len(set(homes)) != len(homes):
        return None
    direction = next(
        (
            d
            for d in (1, -1)
            if all(
                (d * (a - homes[0])) % m < (d * (b - homes[0])) % m
                for a, b in zip(homes[1:], homes[2:])
            )
        ),
        None,
    )
    if direction is None:
        return None
    mark_set = set(marks)
    spare = [[v for v in part if v not in mark_set] for part in parts]
    if any(not spare[j] for j in range(m) if j not in homes):
        return None
    flow = _bounce_allocation(spare, homes, runs, m)
    if flow is None:
        return None
    pools = [iter(vertices) for vertices in spare]
    cycle = []
    for r, run in enumerate(runs):
        lenders = [
            j
            for (_, j), amount in sorted(flow.get(("run", r), {}).items())
            for _ in range(amount)
        ]
        cycle.append(run[0])
        for v, j in zip(run[1:], lenders):
            cycle += [next(pools[j]), v]
        target = homes[(r + 1) % len(runs)]
        j = (homes[r] + direction) % m
        while j != target:
            cycle.append(next(pools[j]))
            j = (j + direction) % m
    logging.debug("winding cycle through %d runs, direction %d", len(runs), direction)
    return _start_at(cycle, marks[0])


def _p_full_pair(parts, part_of, m, marks) -> Optional[List[int]]:
    """
    Both (k-1)-vertex parts fully marked, no consecutive marks between them

    Up to rotation the marks read v_1, a block filling one small part, v_{k+1}, a
    block filling the other. Each block zigzags through its outer neighbor part and
    two paths across parts 2 .. m-1 carry v_{k+1} and v_1 from one block to the other.
    None if the marks are not laid out that way.
    """
    length = len(marks)
    k = length // 2
    small = {0, 1}
    r = next(
        (
            i
            for i in range(length)
            if part_of[marks[i]] not in small and part_of[marks[(i + 1) % length]] in small
        ),
        None,
    )
    if r is None:
        return None
    rotated = list(marks[r:]) + list(marks[:r])
    first, block_x, middle, block_y = rotated[0], rotated[1:k], rotated[k], rotated[k + 1 :]
    px, py = part_of[block_x[0]], part_of[block_y[0]]
    if (
        {px, py} != small
        or part_of[middle] in small
        or set(block_x) != set(parts[px])
        or set(block_y) != set(parts[py])
    ):
        return None
    outer = {0: m - 1, 1: 2}
    nx_part, ny_part = outer[px], outer[py]
    mark_set = set(marks)
    spare = {j: [v for v in parts[j] if v not in mark_set] for j in range(2, m)}

    def take(j, mark):
        if part_of[mark] == j:
            return mark
        if not spare[j]:
            raise ConstructionError(f"part {j} ran out of unmarked vertices")
        return spare[j].pop(0)

    def zigzag(block, j):
        path = [block[0]]
        for v in block[1:]:
            path += [take(j, v), v]
        return path

    step = 1 if ny_part > nx_part else -1
    line = list(range(nx_part, ny_part + step, step))
    cycle = zigzag(block_x, nx_part)
    cycle += [take(j, middle) for j in line]
    cycle += zigzag(block_y, ny_part)
    cycle += [take(j, first) for j in reversed(line)]
    logging.debug("both small parts fully marked, blocks %s and %s", block_x, block_y)
    return _start_at(cycle, marks[0])


def _p_base(g, parts, part_of, m, marks, budget) -> List[int]:
    """Four marks in a bracelet sized (1, 1, 2, 3, ..., 3)"""
    cycle = _winding_cycle(parts, part_of, m, marks)
    if cycle is None:
        cycle = _p_full_pair(parts, part_of, m, marks)
    if cycle is None:
        logging.debug("marks %s alternate between parts, searching", marks)
        cycle = _skeleton_search(g, parts, marks, budget)
    return cycle


def _p_cycle(g, parts, part_of, m, marks, budget) -> List[int]:
    k = len(marks) // 2
    if k == 2:
        return _p_base(g, parts, part_of, m, marks, budget)
    i = _free_pair(parts, part_of, marks)
    if i is None:
        cycle = _p_full_pair(parts, part_of, m, marks)
        if cycle is None:
            raise ConstructionError(f"no free-vertex pair for {marks}")
        return cycle
    rotated = _rotate_pair_last(marks, i)
    free = _transversal(parts, part_of, marks, rotated[-2], rotated[-1])
    inner_parts = [[v for v in part if v != free[j]] for j, part in enumerate(parts)]
    inner = _p_cycle(g, inner_parts, part_of, m, rotated[:-2], budget)
    cycle = _splice(part_of, m, inner, free, rotated, reroute=False)
    return _start_at(cycle, marks[0])


def construct_P_cycle(bg: BraceletGraph, marks: Sequence[int], budget=DEFAULT_BUDGET) -> OrderedCycle:  # pylint: disable=invalid-name
    """
    Ordered cycle through 2k marks of the bracelet sized (k-1, k-1, k, k+1, ..., k+1)

    Four marks are routed by a cycle winding once around the bracelet, or by the
    zigzag through both fully marked small parts; marks that alternate between parts
    in any other way fall back to a bounded backtracking search over the active
    vertices. Larger k peels a free transversal off and recurses.

    :raises BudgetExceeded: if that fallback search runs out of budget
    """
    sizes = bg.part_sizes
    k = sizes[2] if len(sizes) > 2 else 0
    expected = (k - 1, k - 1, k) + (k + 1,) * (bg.m - 3)
    if bg.directed or bg.m < 5 or k < 2 or sizes != expected:
        raise PreconditionError(f"expected sizes (k-1, k-1, k, k+1, ...), got {sizes}")
    marks = check_marks(bg, marks)
    if len(marks) != 2 * k:
        raise PreconditionError(f"expected {2 * k} marks, got {len(marks)}")
    parts = [list(p) for p in bg.parts]
    vertices = _p_cycle(bg.graph, parts, bg.part_of, bg.m, marks, budget)
    return _finish(bg, vertices, marks, hamiltonian=False)


#### Directed bracelets


def directed_grid(bg: BraceletGraph, marks: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """
    Lay the vertices of a directed uniform bracelet out in k-1 rows

    Column c holds the part c steps after the part of the first mark of the rotated
    sequence; row 0 holds the two leading marks, row j the mark j+1; every other cell
    gets an unmarked vertex of its part in increasing id order.
    """
    sizes = bg.part_sizes
    if not bg.directed or len(set(sizes)) != 1:
        raise PreconditionError(f"expected a uniform directed bracelet, got {sizes}")
    k = sizes[0] + 1
    marks = check_marks(bg, marks)
    if len(marks) != k:
        raise PreconditionError(f"expected {k} marks, got {len(marks)}")
    part_of, l = bg.part_of, bg.m
    i = next(
        (j for j in range(k) if part_of[marks[j]] != part_of[marks[(j + 1) % k]]), None
    )
    if i is None:
        raise ConstructionError(f"all marks {marks} share a part")
    rotated = list(marks[i:]) + list(marks[:i])
    origin = part_of[rotated[0]]
    grid = [[None] * l for _ in range(k - 1)]
    for j, v in enumerate(rotated):
        grid[max(j - 1, 0)][(part_of[v] - origin) % l] = v
    mark_set = set(marks)
    for column in range(l):
        spare = iter(v for v in bg.parts[(origin + column) % l] if v not in mark_set)
        for row in grid:
            if row[column] is None:
                row[column] = next(spare)
    return tuple(tuple(row) for row in grid)


def construct_directed_hamiltonian(bg: BraceletGraph, marks: Sequence[int]) -> OrderedCycle:
    """Directed hamiltonian cycle through k marks of a (k-1)-diregular bracelet, row by row"""
    grid = directed_grid(bg, marks)
    vertices = [v for row in grid for v in row]
    return _finish(bg, vertices, tuple(marks), hamiltonian=True)


def construct_cycle(bg: BraceletGraph, marks: Sequence[int], budget=DEFAULT_BUDGET) -> OrderedCycle:
    """Pick the builder matching the bracelet's family"""
    if bg.directed:
        return construct_directed_hamiltonian(bg, marks)
    if bg.family == "P":
        return construct_P_cycle(bg, marks, budget)
    if bg.family == "G":
        return construct_G_hamiltonian(bg, marks)[0]
    return construct_bracelet_cycle(bg, marks)
