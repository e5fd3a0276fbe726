"""Quadratic harmonic morphisms between Euclidean spaces.

Thin Python layer over the C++ core. Maps are built from symmetric component
matrices (floats, or rational strings for exact arithmetic) or parsed from the
map file format; see the README for the format and the report dict schemas.
"""

from qhm._core import (
    CliffordSystem,
    Error,
    QuadraticMap,
    check_clifford,
    classify,
    clifford_from_umbilical,
    complete_lift,
    conformality_oracle,
    delta,
    dilation,
    direct_sum,
    equivalence_invariants,
    equivalence_witness_check,
    evaluate,
    format_map,
    gram_gradients,
    hopf_construction,
    hopf_standard,
    irreducible,
    is_umbilical,
    jacobian,
    make_map,
    make_map_exact,
    normal_form,
    parse_map,
    phi_t,
    q_rank,
    qhm_from_clifford,
    split_singular,
    sphere_restriction_check,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "CliffordSystem",
    "Error",
    "QuadraticMap",
    "check_clifford",
    "classify",
    "clifford_from_umbilical",
    "complete_lift",
    "conformality_oracle",
    "delta",
    "dilation",
    "direct_sum",
    "equivalence_invariants",
    "equivalence_witness_check",
    "evaluate",
    "format_map",
    "gram_gradients",
    "hopf_construction",
    "hopf_standard",
    "irreducible",
    "is_umbilical",
    "jacobian",
    "make_map",
    "make_map_exact",
    "normal_form",
    "parse_map",
    "phi_t",
    "q_rank",
    "qhm_from_clifford",
    "split_singular",
    "sphere_restriction_check",
    "verify",
]
