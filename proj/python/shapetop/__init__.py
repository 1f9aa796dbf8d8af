"""Finite topologies on shapes, with exact rational arithmetic."""

from ._shapetop import (
    Mapping,
    ParseError,
    Shape,
    ShapeError,
    Topology,
    boundary,
    check_isomorphism,
    classify,
    closure,
    compare,
    find_separation,
    generate_from_basis,
    generate_topology,
    image,
    interior,
    is_connected_part,
    is_continuous,
    is_topology,
    is_totally_disconnected,
    part_of,
    preimage,
    reduced_basis,
    report,
    star_topology,
    subshape_topology,
    touches,
    visually_connected,
)

__all__ = [
    "Mapping",
    "ParseError",
    "Shape",
    "ShapeError",
    "Topology",
    "boundary",
    "check_isomorphism",
    "classify",
    "closure",
    "compare",
    "find_separation",
    "generate_from_basis",
    "generate_topology",
    "image",
    "interior",
    "is_connected_part",
    "is_continuous",
    "is_topology",
    "is_totally_disconnected",
    "part_of",
    "preimage",
    "reduced_basis",
    "report",
    "star_topology",
    "subshape_topology",
    "touches",
    "visually_connected",
]
