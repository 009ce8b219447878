"""Matroid coloring games: rank oracles, union/partition machinery,
indicated-coloring strategies, exhaustive solvers, and play frontends."""

from matroidcolor.matroids import (
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    MatroidError,
    MinorMatroid,
    PartitionMatroid,
    UniformMatroid,
)
from matroidcolor.union import (
    Cover,
    Violator,
    chromatic_number,
    find_proper_tight_set,
    partition_ground_set,
    surplus,
    verify_cover,
)

__all__ = [
    "Matroid",
    "MatroidError",
    "UniformMatroid",
    "GraphicMatroid",
    "LinearMatroid",
    "PartitionMatroid",
    "MinorMatroid",
    "Cover",
    "Violator",
    "surplus",
    "partition_ground_set",
    "verify_cover",
    "chromatic_number",
    "find_proper_tight_set",
]
