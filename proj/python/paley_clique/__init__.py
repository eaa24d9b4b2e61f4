"""Exact clique data for quadratic-residue graphs over finite fields."""

from ._core import (
    PaleyError,
    admissible_orders,
    analyze,
    classify,
    clique_number,
    improvement_fraction,
    is_clique,
    isqrt,
    max_clique,
    phi_profile,
    theorem_bound,
    verify,
)

__version__ = "1.0.0"

__all__ = [
    "PaleyError",
    "admissible_orders",
    "analyze",
    "classify",
    "clique_number",
    "improvement_fraction",
    "is_clique",
    "isqrt",
    "max_clique",
    "phi_profile",
    "theorem_bound",
    "verify",
]
