"""Exact super-Moyal star products, Poisson brackets and Sp(2n|a,b) checks."""

from ._superstar import (
    MathError,
    ParseError,
    Signature,
    SuperPolynomial,
    bd1_defect,
    bracket,
    classical_limit,
    commutator,
    format,
    is_sp_member,
    iso_check,
    jet_flatness_defect,
    normal_order,
    parse,
    run_command,
    star,
    taylor_jet,
)

__all__ = [
    "MathError",
    "ParseError",
    "Signature",
    "SuperPolynomial",
    "bd1_defect",
    "bracket",
    "classical_limit",
    "commutator",
    "format",
    "is_sp_member",
    "iso_check",
    "jet_flatness_defect",
    "normal_order",
    "parse",
    "run_command",
    "star",
    "taylor_jet",
]
