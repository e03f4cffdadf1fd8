"""Simplicial words, Eilenberg-MacLane transforms and Steenrod-type operations over F2."""

from ._simpdelta import (
    BadRange,
    Error,
    NotNormalizedCycle,
    OutOfRange,
    ParseError,
    TruncationOverflow,
    UnknownRelation,
    check_relation,
    delta,
    dump_transform,
    enumerate_U,
    enumerate_V,
    homology,
    normalize,
    reduce,
    relation_catalog,
    run_cli,
    suspend,
)

__all__ = [
    "BadRange",
    "Error",
    "NotNormalizedCycle",
    "OutOfRange",
    "ParseError",
    "TruncationOverflow",
    "UnknownRelation",
    "check_relation",
    "delta",
    "dump_transform",
    "enumerate_U",
    "enumerate_V",
    "homology",
    "normalize",
    "reduce",
    "relation_catalog",
    "run_cli",
    "suspend",
]
