"""Cover suffix trees and quasiperiodicity queries.

Build a coverage-annotated suffix tree (every square-half locus explicit,
each explicit node carrying occ / ov / nov / cv), solve the all-alpha
shortest partial cover problem, and answer bounded-gap overlapping
consecutive-occurrence queries from a linear-size index.
"""

from .covertree import CoverSuffixTree, build_cover_suffix_tree
from .ovocc import OvOccIndex, OvOccResult, build_ovocc_index, query_ovocc
from .partial import ShortestTable, all_partial_covers, shortest_alpha_covers
from .runs import Run, SquareOcc, compute_runs, enumerate_distinct_squares
from .suffixes import (
    LcpArray,
    PreorderIndex,
    RmqStructure,
    SuffixArray,
    SuffixLinkTree,
    SuffixTree,
    build_lcp_array,
    build_suffix_array,
    build_suffix_link_tree,
    build_suffix_tree,
    compute_suffix_links,
    lce,
    preorder_index,
    rmq_build,
    rmq_query,
    weighted_ancestor,
)
from .text import Fragment, Text, fragment_equal, load_text

__all__ = [
    "CoverSuffixTree",
    "Fragment",
    "LcpArray",
    "OvOccIndex",
    "OvOccResult",
    "PreorderIndex",
    "RmqStructure",
    "Run",
    "ShortestTable",
    "SquareOcc",
    "SuffixArray",
    "SuffixLinkTree",
    "SuffixTree",
    "Text",
    "all_partial_covers",
    "build_cover_suffix_tree",
    "build_lcp_array",
    "build_ovocc_index",
    "build_suffix_array",
    "build_suffix_link_tree",
    "build_suffix_tree",
    "compute_runs",
    "compute_suffix_links",
    "enumerate_distinct_squares",
    "fragment_equal",
    "lce",
    "load_text",
    "preorder_index",
    "query_ovocc",
    "rmq_build",
    "rmq_query",
    "shortest_alpha_covers",
    "weighted_ancestor",
]

__version__ = "0.1.0"
