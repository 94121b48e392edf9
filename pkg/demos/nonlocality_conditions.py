"""
CHSH nonlocality of Choi states: two deliberately different verdicts
====================================================================

For a channel's Choi state, the Horodecki criterion decides a direct CHSH
violation from the eigenvalues s1, s2, s3 of T^dag T, where T is the Pauli
correlation matrix. The generation conditions CH1/CH2 are a different,
stricter pair of inequalities. classify() reports both so their mismatch is
visible instead of hidden.
"""

import numpy as np

from nonloc import (
    QubitChannel,
    choi,
    classify,
    correlation_matrix_generic,
    hermitian_eigenvalues,
    s_values_channel,
)

# The identity channel: its Choi state is maximally entangled and violates
# CHSH maximally (s = 2 sqrt 2), yet it satisfies neither CH condition.
identity = QubitChannel((1.0, 1.0, 1.0))
c = classify(identity)
print("identity channel:")
print("  ch1 =", c.ch1, " ch2 =", c.ch2, " paper_generating =", c.paper_generating)
print("  horodecki_m =", c.horodecki_m, " chsh_s =", c.chsh_s)
print("  breaks_chsh_direct =", c.breaks_chsh_direct)

# s-values three ways: channel closed form, X-state closed form (inside
# classify), and the numeric spectrum of T^dag T. classify() raises an
# InternalConsistencyError if the routes ever drift apart.
ch = QubitChannel((0.9, 0.3, 0.5), (0.0, 0.0, 0.2))
sv = s_values_channel(ch)
t = correlation_matrix_generic(choi(ch))
numeric = hermitian_eigenvalues(t.T @ t)
print("closed-form s-values:", sorted(sv, reverse=True))
print("numeric    s-values:", list(numeric))

# A channel satisfying CH1: strong shrink towards an axis.
print("depolarizing(0.5):", classify(QubitChannel((0.5, 0.5, 0.5))).to_json())

# A channel satisfying CH2 instead: the gap condition flips once the
# transverse eigenvalues dominate the longitudinal one.
print("gad(0.9, p=1):")
gad = QubitChannel((0.9, 0.9, 0.81), (0.0, 0.0, 0.19))
print(" ", classify(gad).to_json())

# CH1 and CH2 are mutually exclusive by construction; scan a line through
# parameter space and watch the verdict switch.
print("verdicts along lambda3 at lambda1 = lambda2 = 0.6:")
for l3 in np.linspace(-1.0, 1.0, 9):
    k = classify(QubitChannel((0.6, 0.6, float(l3))))
    tag = "CH1" if k.ch1 else ("CH2" if k.ch2 else "neither")
    print(f"  lambda3 = {l3:+.2f}: cp = {k.cp}, {tag}")
