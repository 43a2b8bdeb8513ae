"""Exact Ramanujan-sum polynomials, cyclotomic polynomials and identity checks."""

from .family import (
    phi_poly,
    psi_poly,
    p_poly,
    q_poly,
    r_poly,
    t_poly,
    v_poly,
)
from .numtheory import divisors, factorize, mobius, omega, radical, t_weight, totient
from .polyring import IntPoly, divides, divide_exact
from .ramanujan import c_holder, c_mobius, c_multiplicative, ramanujan_sum, row
from .theorems import CLAIMS, run_suite

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "divides",
    "divide_exact",
    "factorize",
    "mobius",
    "totient",
    "radical",
    "omega",
    "divisors",
    "t_weight",
    "c_mobius",
    "c_holder",
    "c_multiplicative",
    "ramanujan_sum",
    "row",
    "phi_poly",
    "psi_poly",
    "r_poly",
    "t_poly",
    "v_poly",
    "p_poly",
    "q_poly",
    "CLAIMS",
    "run_suite",
]
