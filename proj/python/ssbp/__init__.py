"""Single-source bottleneck paths with a randomized recursive solver."""

from ._core import (
    Graph,
    ParseError,
    default_k,
    dijkstra_csssbp,
    dijkstra_ssbp,
    format_graph,
    generate,
    oracle_csssbp,
    oracle_paths_ssbp,
    parse_graph,
    solve_csssbp,
    solve_ssbp,
)

__all__ = [
    "Graph",
    "ParseError",
    "default_k",
    "dijkstra_csssbp",
    "dijkstra_ssbp",
    "format_graph",
    "generate",
    "oracle_csssbp",
    "oracle_paths_ssbp",
    "parse_graph",
    "solve_csssbp",
    "solve_ssbp",
]
