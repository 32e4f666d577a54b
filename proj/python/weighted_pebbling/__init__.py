# Copyright (c) weighted-pebbling contributors.
# SPDX-License-Identifier: Apache-2.0
"""Weighted graph pebbling with exact rational weights."""

from ._wpeb import (
    BudgetExceeded,
    Graph,
    ParseError,
    chung_number,
    complete_graph,
    connected_graphs,
    is_p_solvable,
    max_path_partition,
    min_weight_function,
    one_way_weight,
    parse_graph,
    path_lower_bound,
    path_weight_search,
    pebbling_number,
    solve,
    star_graph,
    tree_wp,
    tree_wp_target,
    trees,
    uniform_path,
    weighted_pebbling_number,
    wp2_closed_form,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "ParseError",
    "chung_number",
    "complete_graph",
    "connected_graphs",
    "is_p_solvable",
    "max_path_partition",
    "min_weight_function",
    "one_way_weight",
    "parse_graph",
    "path_lower_bound",
    "path_weight_search",
    "pebbling_number",
    "solve",
    "star_graph",
    "tree_wp",
    "tree_wp_target",
    "trees",
    "uniform_path",
    "weighted_pebbling_number",
    "wp2_closed_form",
]
