# -*- coding: utf-8 -*-

"""\
Graph interchange formats

Two formats are supported:

* a plain edge list, with a ``n m directed:{0|1}`` header line followed by one
  ``u v`` line per edge;
* an XML document that also carries the bracelet part sizes, so the part structure
  survives a round trip.
"""

import logging
import os

from lxml import etree

from .graph_core import (
    BraceletGraph,
    BraceletSpec,
    Digraph,
    Graph,
    GraphError,
    as_graph,
    build_bracelet,
)

XML_ROOT = "kordered-graph"


def _int_attribute(element, name) -> int:
    value = element.get(name)
    try:
        return int(value)
    except (TypeError, ValueError) as err:
        raise GraphError(f"<{element.tag}> needs an integer {name}, got {value!r}") from err


def write_edge_list(obj) -> str:
    """Edge-list text of a graph or bracelet"""
    g = as_graph(obj)
    lines = [f"{g.n} {g.edge_count} directed:{int(g.directed)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str):
    """Parse edge-list text into a Graph or Digraph"""
    rows = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    rows = [row for row in rows if row]
    if not rows:
        raise GraphError("empty edge list")
    header = rows[0].split()
    if len(header) != 3 or not header[2].startswith("directed:"):
        raise GraphError(f"bad edge-list header {rows[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
        directed = header[2].split(":", 1)[1] == "1"
        edges = [tuple(int(x) for x in row.split()) for row in rows[1:]]
    except ValueError as err:
        raise GraphError(f"bad edge list: {err}") from err
    if any(len(e) != 2 for e in edges):
        raise GraphError("every edge line needs exactly two vertex ids")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    cls = Digraph if directed else Graph
    return cls(n, edges)


def write_graph_xml(obj) -> bytes:
    """XML document for a graph or bracelet"""
    g = as_graph(obj)
    root = etree.Element(XML_ROOT, n=str(g.n), directed=str(int(g.directed)))
    if isinstance(obj, BraceletGraph):
        bracelet = etree.SubElement(
            root,
            "bracelet",
            family=obj.family,
            params=",".join(str(p) for p in obj.params),
        )
        if obj.special_part is not None:
            bracelet.set("special-part", str(obj.special_part))
        for size in obj.part_sizes:
            etree.SubElement(bracelet, "part", size=str(size))
    edges = etree.SubElement(root, "edges")
    for u, v in g.edges():
        etree.SubElement(edges, "edge", u=str(u), v=str(v))
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding="utf-8")


def read_graph_xml(data):
    """Parse an XML document back into a Graph, Digraph or BraceletGraph"""
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        root = etree.fromstring(data)
    except etree.XMLSyntaxError as err:
        raise GraphError(f"malformed graph document: {err}") from err
    if root.tag != XML_ROOT:
        raise GraphError(f"expected <{XML_ROOT}>, got <{root.tag}>")
    n = _int_attribute(root, "n")
    directed = root.get("directed") == "1"
    edges = [(_int_attribute(e, "u"), _int_attribute(e, "v")) for e in root.iter("edge")]
    cls = Digraph if directed else Graph
    graph = cls(n, edges)

    bracelet = root.find("bracelet")
    if bracelet is None:
        return graph
    sizes = tuple(_int_attribute(p, "size") for p in bracelet.iter("part"))
    result = build_bracelet(BraceletSpec(sizes), directed=directed)
    if result.graph != graph:
        raise GraphError("edge list does not match the bracelet part sizes")
    try:
        params = [int(p) for p in bracelet.get("params", "").split(",") if p]
    except ValueError as err:
        raise GraphError(f"bad bracelet params: {err}") from err
    special = None
    if bracelet.get("special-part") is not None:
        special = _int_attribute(bracelet, "special-part")
    return result.with_metadata(bracelet.get("family", "bracelet"), params, special)


def save_graph(obj, path: str):
    """Write obj to path, as XML if the name ends in .xml, else as an edge list"""
    if path.endswith(".xml"):
        with open(path, "wb") as handle:
            handle.write(write_graph_xml(obj))
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(write_edge_list(obj))
    logging.debug("Wrote %s", path)


def load_graph(path: str):
    """Read a graph file written by save_graph"""
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    if path.endswith(".xml"):
        with open(path, "rb") as handle:
            return read_graph_xml(handle.read())
    with open(path, "rb") as handle:
        data = handle.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as err:
        raise GraphError(f"{path} is not UTF-8 text: {err}") from err
    return read_edge_list(text)
