"""Exact k-colored and plane partition counts."""

from ._core import (
    InconsistencyError,
    UnsupportedSizeError,
    __version__,
    binomial,
    complete_bell,
    count,
    dense_det,
    divisor_sums,
    factorial,
    hessenberg_det,
    oracle_enumerate_colored,
    oracle_enumerate_plane,
    oracle_series,
    partial_bell_explicit,
    partial_bell_table,
    pentagonal_lambda,
    pk,
    pp,
    rising_factorial,
    table,
)

__all__ = [
    "InconsistencyError",
    "UnsupportedSizeError",
    "__version__",
    "binomial",
    "complete_bell",
    "count",
    "dense_det",
    "divisor_sums",
    "factorial",
    "hessenberg_det",
    "oracle_enumerate_colored",
    "oracle_enumerate_plane",
    "oracle_series",
    "partial_bell_explicit",
    "partial_bell_table",
    "pentagonal_lambda",
    "pk",
    "pp",
    "rising_factorial",
    "table",
]
