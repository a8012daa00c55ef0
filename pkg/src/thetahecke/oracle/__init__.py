"""Brute-force ground truth over F_q."""

from .census import census_checks, dimension_checks
from .convolution import CheckResult, OrbitFunction, compare, convolve
from .groups import coset_count, coset_reps
from .ic import closure_char, verify_ic_cases
from .jacquet import verify_jacquet
from .orbits import enumerate_orbits, expected_orbit_table, orbit_dimension_fit
