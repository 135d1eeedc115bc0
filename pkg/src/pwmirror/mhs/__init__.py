"""Graded mixed Hodge tables, PW polynomials, the mirror transform and Hodge grids."""

from pwmirror.mhs.grids import (
    DiamondParams,
    GridReport,
    HodgeGrid,
    check_grid_equality,
    fpq_diamond,
    grid_transform,
    hodge_numbers,
    k_Y_from_fibers,
)
from pwmirror.mhs.pw import (
    PW_VARS,
    MirrorReport,
    OutOfConeError,
    PWPolynomial,
    mirror_transform,
    pw_polynomial,
    verify_mirror_pair,
)
from pwmirror.mhs.tables import (
    HodgePiece,
    PerverseHodgeTable,
    TableError,
    TateSummand,
    affine_perverse,
    merge_pieces,
    poincare_dual,
    table_from_tate,
    tate_twist,
)

__all__ = [
    "DiamondParams",
    "GridReport",
    "HodgeGrid",
    "HodgePiece",
    "MirrorReport",
    "OutOfConeError",
    "PWPolynomial",
    "PW_VARS",
    "PerverseHodgeTable",
    "TableError",
    "TateSummand",
    "affine_perverse",
    "check_grid_equality",
    "fpq_diamond",
    "grid_transform",
    "hodge_numbers",
    "k_Y_from_fibers",
    "merge_pieces",
    "mirror_transform",
    "poincare_dual",
    "pw_polynomial",
    "table_from_tate",
    "tate_twist",
    "verify_mirror_pair",
]
