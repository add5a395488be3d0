"""
Burau checker package for skein4

Alexander-Burau matrices of braids and their reduction modulo ideals.
"""

from skein4.app.services.burau.matrices import (
    BurauMatrix,
    IdealSpec,
    braid_burau,
    crossing_matrix,
    reduce_mod_ideal,
)
from skein4.app.services.burau.battery import burau_record, delta_checks
