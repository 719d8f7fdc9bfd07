"""Exact q-series for eta-quotients and theta series of binary quadratic forms."""

from ._core import (
    a47,
    a71,
    class_group,
    classify,
    coefficient,
    eta_quotient,
    hecke_theta,
    levels,
    oracle_coefficient,
    run_cli,
    run_suite,
    suite_names,
    theta_f,
    theta_form,
)

__all__ = [
    "a47",
    "a71",
    "class_group",
    "classify",
    "coefficient",
    "eta_quotient",
    "hecke_theta",
    "levels",
    "oracle_coefficient",
    "run_cli",
    "run_suite",
    "suite_names",
    "theta_f",
    "theta_form",
]
