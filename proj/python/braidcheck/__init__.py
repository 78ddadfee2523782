"""Exact verification of braided R-matrix structures, generalized Yangians,
and braided KZ systems.

Thin wrapper over the C++ core; check functions return JSON report strings
(see the README for the schema)."""

from braidcheck._core import (
    BraidcheckError,
    baxterized_at,
    braiding_matrix,
    catalog_names,
    check_all,
    check_baxter,
    check_bethe,
    check_braiding,
    check_compat,
    check_kz,
    check_newton,
    check_qkz,
    check_rstructs,
    constant_r,
    matrix_json_roundtrip,
    scalar_eval,
    scalar_roundtrip,
)

__all__ = [
    "BraidcheckError",
    "baxterized_at",
    "braiding_matrix",
    "catalog_names",
    "check_all",
    "check_baxter",
    "check_bethe",
    "check_braiding",
    "check_compat",
    "check_kz",
    "check_newton",
    "check_qkz",
    "check_rstructs",
    "constant_r",
    "matrix_json_roundtrip",
    "scalar_eval",
    "scalar_roundtrip",
]
