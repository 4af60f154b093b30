"""Finite topological space calculator."""

from ._core import (
    ParseError,
    PointSet,
    Space,
    TopocheckError,
    check,
    classify,
    classify_map,
    closure,
    count,
    enumerate,
    interior,
    kernel,
    nd_singletons,
    product,
    properties,
    search,
    semi_closure,
    semi_interior,
    subspace,
    sum,
    tail_classify,
    verify,
)

__all__ = [
    "ParseError",
    "PointSet",
    "Space",
    "TopocheckError",
    "check",
    "classify",
    "classify_map",
    "closure",
    "count",
    "enumerate",
    "interior",
    "kernel",
    "nd_singletons",
    "product",
    "properties",
    "search",
    "semi_closure",
    "semi_interior",
    "subspace",
    "sum",
    "tail_classify",
    "verify",
]
