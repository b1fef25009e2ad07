"""
Export main functions from kordered to be easily accessible from the package
"""
from .cli import __version__, run, RunConfig
from .constructive import construct_cycle
from .generators import gen_bracelet, gen_counterexample, gen_directed, gen_G, gen_H, gen_P
from .graph_core import (
    BraceletGraph,
    Digraph,
    Graph,
    OrderedCycle,
    Tour,
    verify_ordered_cycle,
    verify_tour,
)
from .graph_io import load_graph, save_graph
from .metrics import connectivity
from .order_oracle import find_ordered_cycle, find_ordered_tour, is_k_edge_ordered, is_k_ordered
