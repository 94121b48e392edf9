"""
Circulant states: the structure behind X states
===============================================

A circulant operator is block-supported on subspaces spanned by shifted
product vectors |e_k (x) f_{pi(k)+i}>. For n = m = 2 the two blocks land
exactly on the diagonal and anti-diagonal of a 4x4 matrix: the X shape.
"""

import numpy as np

from nonloc import (
    CirculantSpec,
    XState,
    build_operator,
    is_circulant_state,
    subspace_basis,
    verify_direct_sum,
)

# The two coefficient blocks of an X state, written out by hand.
x = XState(0.35, 0.15, 0.2, 0.3, 0.1 + 0.05j, 0.08)
blocks = [
    [[x.a, x.w], [np.conj(x.w), x.d]],
    [[x.b, x.z], [np.conj(x.z), x.c]],
]
spec = CirculantSpec(2, 2, (0, 1), blocks)
print("n = m = 2 circulant operator equals the X-state matrix:",
      np.allclose(build_operator(spec), x.matrix()))
print("and it is a state:", is_circulant_state(spec))

# The shifted subspaces tile the full product space: their stacked bases
# form a complete orthonormal system.
spec3 = CirculantSpec(3, 3, (0, 2, 1), np.zeros((3, 3, 3)))
print("direct-sum decomposition verified for n = 3, pi = (0, 2, 1):",
      verify_direct_sum(spec3))
for i in range(3):
    rows = subspace_basis(spec3, i)
    print(f"  subspace {i}: basis vectors at flat indices",
          [int(np.argmax(row)) for row in rows])

# Uniform diagonal blocks with trace 1/n^2 each give the maximally mixed
# state of the n x n system.
mixed = CirculantSpec(3, 3, (0, 1, 2), np.stack([np.eye(3) / 9.0] * 3))
print("uniform blocks give a state:", is_circulant_state(mixed))

# Breaking positivity of one block breaks the whole state.
bad_blocks = [
    [[x.a, 0.9], [0.9, x.d]],  # |w| far above sqrt(a d)
    [[x.b, x.z], [np.conj(x.z), x.c]],
]
bad = CirculantSpec(2, 2, (0, 1), bad_blocks)
print("oversized coupling is rejected:", not is_circulant_state(bad))
