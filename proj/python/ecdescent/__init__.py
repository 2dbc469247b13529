# Copyright (c) 2026 the ecdescent authors
# Licensed under the Apache License, Version 2.0 (see LICENSE or
# https://www.apache.org/licenses/LICENSE-2.0). This file may not be
# copied, modified, or distributed except according to those terms.
"""Exact 2-descent and even-class-number certificates.

Thin re-export of the compiled core.  All arithmetic is exact: integers
cross the boundary losslessly in both directions.
"""

from ._core import (
    Certificate,
    ClassEstimate,
    Curve,
    FamilyEntry,
    Field,
    Point,
    QuadClass,
    SelmerGroup,
    add,
    alpha_certificate,
    biquad_estimate,
    build_field,
    class_in_qs2,
    compute_selmer,
    count_points_mod,
    double_family,
    double_point,
    h_quadratic,
    is_torsion,
    local_verdicts,
    make_affine,
    make_curve,
    multiply,
    negate,
    on_curve,
    phi,
    run,
    squarefree_part,
)

__all__ = [
    "Certificate",
    "ClassEstimate",
    "Curve",
    "FamilyEntry",
    "Field",
    "Point",
    "QuadClass",
    "SelmerGroup",
    "add",
    "alpha_certificate",
    "biquad_estimate",
    "build_field",
    "class_in_qs2",
    "compute_selmer",
    "count_points_mod",
    "double_family",
    "double_point",
    "h_quadratic",
    "is_torsion",
    "local_verdicts",
    "make_affine",
    "make_curve",
    "multiply",
    "negate",
    "on_curve",
    "phi",
    "run",
    "squarefree_part",
]
