"""Travelling waves of the fourth-order Hertz-chain equation."""

from ._hertzwave import (
    C1_star,
    QuadratureError,
    classify,
    closed_form_value,
    conserved,
    g_star,
    jet_sweep,
    periodic_from_roots,
    potential,
    profile,
    s_n,
    solitary_from_asymptote,
)

__all__ = [
    "C1_star",
    "QuadratureError",
    "classify",
    "closed_form_value",
    "conserved",
    "g_star",
    "jet_sweep",
    "periodic_from_roots",
    "potential",
    "profile",
    "s_n",
    "solitary_from_asymptote",
]
