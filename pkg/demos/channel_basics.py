"""
Qubit channels, Bloch vectors, and Choi states
==============================================

A channel is stored by its canonical affine action on the Bloch vector,
r_k -> lambda_k * r_k + t_k. This walk-through builds a few channels,
applies them, finds their fixed points, and inspects their Choi states.
"""

import numpy as np

from nonloc import (
    QubitChannel,
    apply,
    choi,
    is_completely_positive,
    is_psd,
    stationary_state,
    xstate_from_channel,
)

# A depolarizing channel shrinks every Bloch component by the same factor.
dep = QubitChannel((0.5, 0.5, 0.5))
r = np.array([0.0, 0.0, 1.0])
print("depolarizing(0.5) maps +z to", apply(dep, r))

# Adding a translation along the third axis models energy exchange with an
# environment; the fixed point moves away from the maximally mixed state.
gad = QubitChannel((0.6, 0.6, 0.36), (0.0, 0.0, 0.64))
fixed, unique = stationary_state(gad)
print("amplitude-damping-like fixed point:", fixed, "unique:", unique)
print("residual after one more application:", apply(gad, fixed) - fixed)

# Complete positivity is a queryable predicate, not a constructor rule.
# The closed form and the numeric Choi-spectrum route always agree.
flip = QubitChannel((1.0, 1.0, -1.0))
print("lambda = (1, 1, -1) closed-form CP:", is_completely_positive(flip))
print("lambda = (1, 1, -1) numeric PSD:  ", is_psd(choi(flip)))

# The Choi state of the identity channel is the maximally entangled state.
identity = QubitChannel((1.0, 1.0, 1.0))
print("identity Choi matrix:")
print(np.real_if_close(choi(identity)))

# Choi states of canonical channels are X-shaped; the parameter
# identification runs in both directions.
x = xstate_from_channel(dep)
print("X-state parameters of depolarizing(0.5):")
print(f"  a={x.a} b={x.b} c={x.c} d={x.d} w={x.w} z={x.z}")
print("valid as a physical state:", x.is_valid())
