"""Exact K_-1 obstructions and certificates for nodal and cA_n varieties."""

from ._ksod import (
    KsodError,
    UnsupportedError,
    ade_table,
    blowup,
    branch_count,
    classify,
    curve_k_minus_one,
    decide,
    del_pezzo_table,
    newton_polygon,
    parse_polynomial,
    quiver,
    run_cli,
    smith_normal_form,
    surface,
    threefold,
)

__all__ = [
    "KsodError",
    "UnsupportedError",
    "ade_table",
    "blowup",
    "branch_count",
    "classify",
    "curve_k_minus_one",
    "decide",
    "del_pezzo_table",
    "newton_polygon",
    "parse_polynomial",
    "quiver",
    "run_cli",
    "smith_normal_form",
    "surface",
    "threefold",
]
