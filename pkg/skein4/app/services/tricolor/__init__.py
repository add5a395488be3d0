"""
Tricolor package for skein4

Fox 3-colorings of tangles and links over GF(3).
"""

from skein4.app.services.tricolor.coloring import (
    ColoringSpace,
    boundary_image,
    coloring_record,
    coloring_space,
    threemove_invariance_check,
)
