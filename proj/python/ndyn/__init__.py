"""Normal forms, fixed points and stability regions of Newton-like operators on z^d - c."""

from ._ndyn import (
    NdynError,
    catalog,
    critical_points,
    dynamical_plane,
    fixed_points,
    form_coefficients_to_map,
    moebius_sum,
    normal_form,
    operator,
    run_cli,
    stability,
    strange_multiplier,
    verify,
)

__all__ = [
    "NdynError",
    "catalog",
    "critical_points",
    "dynamical_plane",
    "fixed_points",
    "form_coefficients_to_map",
    "moebius_sum",
    "normal_form",
    "operator",
    "run_cli",
    "stability",
    "strange_multiplier",
    "verify",
]
