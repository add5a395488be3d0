"""
Coefficient specializations of the fourth skein relation.
"""

from skein4.app.services.coeff.specs import CoeffSpec, builtin_spec, spec_names
from skein4.app.services.coeff.conditions import (
    check_conditions,
    disjoint_union_factor,
    trivial_link_resolution,
    trivial_link_value,
)
from skein4.app.services.coeff.homomorphism import bracket_check, h_annihilates, h_invariant
