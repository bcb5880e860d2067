"""Integer polynomials nilpotent at a point: orbits, enumeration and bounded forms."""

from nilpoly.bounded import BoundedForm, EventualOrbit, classify_bounded, classify_orbit_of, recurring_pattern_check, scan_bounded_orbits, witness_for_form
from nilpoly.interpolation import SequenceFamily, family_from_sequence, family_member, integral_part, lagrange, realizable_by_int_poly
from nilpoly.orbit import Divergent, EventuallyPeriodic, Nilpotent, OrbitReport, escape_bound, nilpotency_index, orbit_classify
from nilpoly.poly import IntPoly, RatPoly, compose, format_poly, negate_reflect, parse_poly, scale_reduce
from nilpoly.search import SearchConfig, brute_force_oracle, c_r, enumerate_nilpotent_sequences, m_max_formula, max_index_families

__all__ = [
    "BoundedForm", "EventualOrbit", "classify_bounded", "classify_orbit_of", "recurring_pattern_check",
    "scan_bounded_orbits", "witness_for_form", "SequenceFamily", "family_from_sequence", "family_member",
    "integral_part", "lagrange", "realizable_by_int_poly", "Divergent", "EventuallyPeriodic", "Nilpotent",
    "OrbitReport", "escape_bound", "nilpotency_index", "orbit_classify", "IntPoly", "RatPoly", "compose",
    "format_poly", "negate_reflect", "parse_poly", "scale_reduce", "SearchConfig", "brute_force_oracle", "c_r",
    "enumerate_nilpotent_sequences", "m_max_formula", "max_index_families",
]
