"""
Named channel families and their generating ranges
===================================================

Every one-parameter family has a closed-form range of parameters whose
channels satisfy CH1 or CH2. The library exposes the range as a predicate
plus a printable description, and a grid cross-check that re-derives the
range point by point from the conditions themselves.
"""

from nonloc import (
    FAMILY_KINDS,
    FamilySpec,
    analytic_generating_range,
    family_channel,
    family_cross_check,
    paper_conditions,
)

# Tour the analytic ranges and verify each against a 201-point grid.
for kind in FAMILY_KINDS:
    info = analytic_generating_range(kind)
    checked, mismatches, cp_failures = family_cross_check(kind, 201)
    verdict = "PASS" if mismatches == 0 and cp_failures == 0 else "FAIL"
    print(f"{kind:21s} range: {info.description}")
    print(f"{'':21s} cross-check {verdict} ({checked} points)")

# Individual members are plain channels; inspect a few.
print()
print("two_pauli(0.25) eigenvalues:", family_channel(FamilySpec("two_pauli", 0.25)).lam)
print("gad(0.9, p=0.5):", family_channel(FamilySpec("gad", 0.9, p=0.5)).to_json())

# Dephasing never generates, no matter how weak the dephasing is. One
# eigenvalue pinned to 1 kills both conditions.
for lam in (0.0, 0.5, 0.99):
    ch = family_channel(FamilySpec("dephasing", lam))
    print(f"dephasing({lam}): conditions = {paper_conditions(ch)}")

# The depolarizing range has a hard edge at 1/sqrt(2); the endpoint itself
# (here the correctly rounded double) is excluded by the strict inequality.
for lam in (0.70, 0.7071067811865476, 0.71):
    ch = family_channel(FamilySpec("depolarizing", lam))
    c1, c2 = paper_conditions(ch)
    print(f"depolarizing({lam}): generating = {c1 or c2}")
