"""Fixed-point data toolkit for almost complex circle actions on 6-manifolds."""

from fractions import Fraction

from ._circact import (
    Error,
    FixedPointData,
    build_multigraphs,
    chern_report,
    chi_y_profile,
    classify,
    connectivity_verdict,
    dataset_json,
    equivariant_normal_framing_class,
    generate,
    kustarev_admissible,
    kustarev_sum,
    parse_dataset,
    rotation_loop_class,
    run_cli,
    stable_pi_so_mod_u,
    todd_genus,
    validate,
    verify_gluing,
)
from ._circact import _c1_cubed_parts


def c1_cubed(data):
    """Exact localized c1^3 as a Fraction (non-integral values are returned as is)."""
    num, den = _c1_cubed_parts(data)
    return Fraction(num, den)


__all__ = [
    "Error",
    "FixedPointData",
    "build_multigraphs",
    "c1_cubed",
    "chern_report",
    "chi_y_profile",
    "classify",
    "connectivity_verdict",
    "dataset_json",
    "equivariant_normal_framing_class",
    "generate",
    "kustarev_admissible",
    "kustarev_sum",
    "parse_dataset",
    "rotation_loop_class",
    "run_cli",
    "stable_pi_so_mod_u",
    "todd_genus",
    "validate",
    "verify_gluing",
]
