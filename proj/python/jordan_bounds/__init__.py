"""Exact bounds for abelian normal subgroups of finite linear groups."""

from ._jmb import (
    Catalog,
    DomainError,
    NotFoundError,
    ParseError,
    ResourceError,
    ValidationError,
    alpha_exponent,
    best_pair,
    bound_table,
    discrepancies,
    factorial,
    pair_value,
    primitive_bound,
    sci_string,
    threshold,
    verify,
    weisfeiler,
)

__all__ = [
    "Catalog",
    "DomainError",
    "NotFoundError",
    "ParseError",
    "ResourceError",
    "ValidationError",
    "alpha_exponent",
    "best_pair",
    "bound_table",
    "discrepancies",
    "factorial",
    "pair_value",
    "primitive_bound",
    "sci_string",
    "threshold",
    "verify",
    "weisfeiler",
]
