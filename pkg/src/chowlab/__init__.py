"""Exact Chow polynomials, coefficient moments and Chern numbers of loopless matroids."""

from .chow import chow_via_flags, chow_via_recursion, eulerian_polynomial, gamma_vector
from .errors import ChowlabError
from .flags import block_sizes, boolean_flag_count, flag_count, flag_table, pg_flag_count
from .matroid import (
    FlatLattice,
    Matroid,
    contract,
    delete,
    flats,
    from_bases,
    make_boolean,
    make_projective_geometry,
    make_uniform,
    restrict,
    simplification,
    truncation,
)
from .poly import TruncatedSeries, UniPoly

__all__ = [
    "ChowlabError",
    "FlatLattice",
    "Matroid",
    "TruncatedSeries",
    "UniPoly",
    "block_sizes",
    "boolean_flag_count",
    "chow_via_flags",
    "chow_via_recursion",
    "contract",
    "delete",
    "eulerian_polynomial",
    "flag_count",
    "flag_table",
    "flats",
    "from_bases",
    "gamma_vector",
    "make_boolean",
    "make_projective_geometry",
    "make_uniform",
    "pg_flag_count",
    "restrict",
    "simplification",
    "truncation",
]
