"""
Skein engine package for skein4

Evaluation of tangles and links in the fourth skein module.
"""

from skein4.app.services.engine.vectors import MemoTable, SkeinVector
from skein4.app.services.engine.twist import characteristic_polynomial, twist_matrix, twist_power
from skein4.app.services.engine.two_tangle import close_2tangle, eval_2tangle, multiplication_table
from skein4.app.services.engine.basis3 import Basis3, Key3, enumerate_basis3, g
from skein4.app.services.engine.three_braid import reduce_3braid
from skein4.app.services.engine.tangle3 import close_3tangle, eval_3tangle, eval_tokens, multiply_keys
from skein4.app.services.engine.rotation3 import rotate_key, rotate_vector, rotation_table
from skein4.app.services.engine.closed_braid import eval_closed_3braid
from skein4.app.services.engine.family_values import family_value
from skein4.app.services.engine.evaluator import eval_link_2algebraic, evaluate, link_value
from skein4.app.services.engine.kauffman_oracle import compare_with_engine, kauffman_oracle
from skein4.app.services.engine.invariants import InvariantValue, invariant
