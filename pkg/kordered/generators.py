# -*- coding: utf-8 -*-

"""\
Named graph families

Every generator returns a BraceletGraph tagged with its family and parameters.
"""

import enum
from itertools import product
from typing import Iterator, Sequence, Tuple

from .graph_core import (
    BraceletGraph,
    BraceletSpec,
    GraphError,
    build_bracelet,
    complete_digraph,
    complete_graph,
    cycle_graph,
)


class FamilyId(enum.Enum):
    """Graph families known to the command line"""

    G_UNIFORM = "G"
    H_PATTERN = "H"
    P_LOWDEG = "P"
    DIRECTED_BRACELET = "directed"
    COUNTEREXAMPLE = "counterexample"
    BRACELET = "bracelet"
    COMPLETE = "complete"
    CYCLE = "cycle"


def family_from_name(name: str) -> FamilyId:
    """Look a family up by its command-line name"""
    try:
        return FamilyId(name)
    except ValueError as err:
        choices = ", ".join(f.value for f in FamilyId)
        raise GraphError(f"unknown family {name!r}, expected one of {choices}") from err


def gen_G(k: int, parts: int) -> BraceletGraph:  # pylint: disable=invalid-name
    """
    Uniform bracelet: an even number of parts, each of size k

    The result is 2k-regular with n = k * parts.
    """
    if k < 1:
        raise GraphError(f"G needs k >= 1, got {k}")
    if parts < 4 or parts % 2:
        raise GraphError(f"G needs an even number of parts >= 4, got {parts}")
    return build_bracelet(BraceletSpec((k,) * parts)).with_metadata("G", (k, parts))


def gen_H(k: int, m: int) -> BraceletGraph:  # pylint: disable=invalid-name
    """
    4m parts sized (k-1, k-1, k, k) repeating

    The result is (2k-1)-regular; for m = 1 it is the complete bipartite graph
    K_{2k-1,2k-1}.
    """
    if k < 2 or m < 1:
        raise GraphError(f"H needs k >= 2 and m >= 1, got k={k}, m={m}")
    sizes = (k - 1, k - 1, k, k) * m
    return build_bracelet(BraceletSpec(sizes)).with_metadata("H", (k, m))


def gen_P(k: int, m: int) -> BraceletGraph:  # pylint: disable=invalid-name
    """
    m parts sized (k-1, k-1, k, k+1, ..., k+1)

    Minimum degree 2k-1 in the second part; maximum degree 2k+2 once m >= 6
    (only 2k+1 for m = 5).
    """
    if k < 2 or m < 5:
        raise GraphError(f"P needs k >= 2 and m >= 5, got k={k}, m={m}")
    sizes = (k - 1, k - 1, k) + (k + 1,) * (m - 3)
    return build_bracelet(BraceletSpec(sizes)).with_metadata("P", (k, m))


def gen_directed(k: int, l: int) -> BraceletGraph:  # pylint: disable=invalid-name
    """l parts of size k-1 with arcs from each part to the next: (k-1)-diregular"""
    if k < 2 or l < 3:
        raise GraphError(f"directed bracelet needs k >= 2 and l >= 3, got k={k}, l={l}")
    spec = BraceletSpec((k - 1,) * l)
    return build_bracelet(spec, directed=True).with_metadata("directed", (k, l))


def gen_counterexample(k: int, filler_parts: Sequence[int]) -> BraceletGraph:
    """
    Parts (k, 2k+1, k, *filler_parts)

    The middle part is independent with only 2k neighbors, so the bracelet is not
    (2k+1)-ordered. Its index is recorded as special_part.
    """
    filler = tuple(int(s) for s in filler_parts)
    if k < 1:
        raise GraphError(f"counterexample needs k >= 1, got {k}")
    if any(s < k for s in filler):
        raise GraphError(f"filler parts must hold at least k={k} vertices, got {filler}")
    spec = BraceletSpec((k, 2 * k + 1, k) + filler)
    return build_bracelet(spec).with_metadata("counterexample", (k,) + filler, 1)


def gen_bracelet(sizes: Sequence[int], directed: bool = False) -> BraceletGraph:
    """Bracelet with explicit part sizes"""
    spec = BraceletSpec(tuple(sizes))
    return build_bracelet(spec, directed).with_metadata("bracelet", spec.part_sizes)


def gen_complete(n: int, directed: bool = False):
    """Complete graph or complete digraph"""
    if n < 2:
        raise GraphError(f"complete graph needs n >= 2, got {n}")
    return complete_digraph(n) if directed else complete_graph(n)


def gen_cycle(n: int, directed: bool = False):
    """Cycle on n vertices"""
    return cycle_graph(n, directed)


def canonical_spec(sizes: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least rotation or reflection of a part-size cycle"""
    sizes = tuple(sizes)
    images = []
    for seq in (sizes, sizes[::-1]):
        for shift in range(len(seq)):
            images.append(seq[shift:] + seq[:shift])
    return min(images)


def bracelet_specs(parts: int, max_size: int, min_size: int = 1) -> Iterator[BraceletSpec]:
    """All bracelet specs with the given part count, up to rotation and reflection"""
    for sizes in product(range(min_size, max_size + 1), repeat=parts):
        if canonical_spec(sizes) == sizes:
            yield BraceletSpec(sizes)
