"""Exact TQFT computations for the local Gromov-Witten theory of curves.

Series are returned as lists of ``fractions.Fraction``; entry i is the
coefficient of t^i.
"""

from ._gwtqft import (
    DEFAULT_ORDER,
    Error,
    ParseError,
    cap,
    centralizer_order,
    character_table,
    class_algebra_json,
    connected,
    d1_relative,
    d2_closed,
    d2_eigenvalues,
    domain_genus,
    fp_genus0,
    gauge_invariant,
    hurwitz,
    lift_eigenvalues,
    partitions,
    relative,
    run_cli,
    verify,
)

__all__ = [
    "DEFAULT_ORDER",
    "Error",
    "ParseError",
    "cap",
    "centralizer_order",
    "character_table",
    "class_algebra_json",
    "connected",
    "d1_relative",
    "d2_closed",
    "d2_eigenvalues",
    "domain_genus",
    "fp_genus0",
    "gauge_invariant",
    "hurwitz",
    "lift_eigenvalues",
    "partitions",
    "relative",
    "run_cli",
    "verify",
]
