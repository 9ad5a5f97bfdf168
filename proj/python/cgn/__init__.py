"""Exact arithmetic and ideal calculus for Colombeau generalized numbers."""

from ._cgn import (
    Error,
    GenNum,
    IndexSet,
    bezout,
    classify,
    clean_idempotent,
    closure_witness,
    eval_script,
    gallery_names,
    in_closure,
    in_principal,
    in_radical,
    in_z_closure,
    inv_subset,
    invert,
    level_set,
    leq,
    meet,
    oracle_val,
    run_suite,
    skeleton,
    split_zero_divisors,
    stationary,
    suite_names,
    valuation,
)

eps = GenNum.eps

__all__ = [
    "Error",
    "GenNum",
    "IndexSet",
    "bezout",
    "classify",
    "clean_idempotent",
    "closure_witness",
    "eps",
    "eval_script",
    "gallery_names",
    "in_closure",
    "in_principal",
    "in_radical",
    "in_z_closure",
    "inv_subset",
    "invert",
    "level_set",
    "leq",
    "meet",
    "oracle_val",
    "run_suite",
    "skeleton",
    "split_zero_divisors",
    "stationary",
    "suite_names",
    "valuation",
]
