"""Balanced 2-median and 2-maxian location on weighted trees."""

from ._baltree import (
    ConfigError,
    ParseError,
    PreconditionError,
    Tree,
    allocation_deviations,
    generate,
    lambda_sweep,
    load_tree,
    pareto_front,
    parse_tree,
    solve,
)

__all__ = [
    "ConfigError",
    "ParseError",
    "PreconditionError",
    "Tree",
    "allocation_deviations",
    "generate",
    "lambda_sweep",
    "load_tree",
    "pareto_front",
    "parse_tree",
    "solve",
]
