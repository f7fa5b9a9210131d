"""Exact lattice, group and fan computations for Burniat surface moduli."""

from .cases import CaseId, boundary_divisors, build_case_fan, case_spec, relabeling_group
from .fans import Fan, classify_ray, cone_type_census, is_complete, validate_fan
from .groups import gamma6, identify_small_group
from .lattice import N_6, Covector, Sublattice, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "CaseId",
    "Covector",
    "Fan",
    "N_6",
    "Sublattice",
    "boundary_divisors",
    "build_case_fan",
    "case_spec",
    "classify_ray",
    "cone_type_census",
    "gamma6",
    "identify_small_group",
    "is_complete",
    "relabeling_group",
    "smith_normal_form",
    "validate_fan",
]
