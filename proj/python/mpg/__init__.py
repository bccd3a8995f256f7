"""Maximal planar graphs: 4-colorings, Kempe classes, unchanged bichromatic
cycles, base modules and the wheel operators."""

from ._mpg import (
    PlaneGraph,
    PreconditionError,
    TheoremAlarm,
    apply,
    base_module,
    classify_ubcmpg,
    colorings,
    generate,
    icosahedron,
    identity_module,
    is_proper,
    k4,
    kempe_classes,
    octahedron,
    replay,
    transform,
    ubc_order8,
)

__all__ = [
    "PlaneGraph",
    "PreconditionError",
    "TheoremAlarm",
    "apply",
    "base_module",
    "classify_ubcmpg",
    "colorings",
    "generate",
    "icosahedron",
    "identity_module",
    "is_proper",
    "k4",
    "kempe_classes",
    "octahedron",
    "replay",
    "transform",
    "ubc_order8",
]
