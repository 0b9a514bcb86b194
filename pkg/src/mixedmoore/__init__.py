"""Exact Moore bounds for mixed graphs and tools to test graphs against them."""

from .bounds import (
    BoundReport,
    MixedParams,
    bound_report,
    characteristic_data,
    directed_moore,
    level_sequence,
    moore_bound,
    moore_bound_closed,
    nearest_integer_estimate,
    old_bound,
    undirected_moore,
)
from .exactq import QuadElem
from .mixedgraph import MixedGraph, check_moore, kautz_mixed, moore_tree

__version__ = "0.1.0"
