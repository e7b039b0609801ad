"""
Checking the braiding laws
==========================

A diagonal braiding always satisfies the Yang-Baxter equation and has an
inverse, and it is realized by a Yetter-Drinfeld module over Z^n. A design
rule v_i -> v_j slides through crossings exactly when rows and columns i and
j of the braiding matrix agree.
"""

import numpy as np

from qdesign import BoxMorphism, check_box_naturality, check_inverse, check_ybe, fixtures
from qdesign import yd_braiding_equals_diagonal, yd_module_from_q
from qdesign.diagram import dense_operator, parse_diagram

Q = fixtures.load_qmatrix("coca")
print(check_ybe(Q))
print(check_inverse(Q))
print(yd_braiding_equals_diagonal(yd_module_from_q(Q), Q))
print(check_box_naturality(Q, BoxMorphism("f", 1, 5)))
print(check_box_naturality(Q, BoxMorphism("f", 1, 2), force=True).violations[0])

# The same law as an identity of explicit 27 x 27 matrices.
small = fixtures.load_qmatrix("ship").window(1, 3)
lhs = dense_operator(parse_diagram("diagram v1\nname l\ninputs 1 1 1\nlayer x id\nlayer id x\nlayer x id\n"), small, numeric=True)
rhs = dense_operator(parse_diagram("diagram v1\nname r\ninputs 1 1 1\nlayer id x\nlayer x id\nlayer id x\n"), small, numeric=True)
print("dense YBE residual:", np.abs(lhs - rhs).max())
