"""
Parameter-region sweeps and CSV output
======================================

Sweeps evaluate the classification flags on a uniform grid and return a
columnar dataset; with an output path they also write the 10-column CSV
consumed by the plotting component. Output is deterministic: canonical row
order, 17-significant-digit reals, 0/1 booleans.
"""

import os
import tempfile

from nonloc import SweepRequest, region_summary, run_sweep

# A coarse cube over (lambda1, lambda2, lambda3) at t3 = 0.
ds = run_sweep(SweepRequest("cube3d", 21, t3=0.0))
print("nodes:", len(ds))
print("summary:", region_summary(ds))

# The generating region shrinks as the shift t3 grows, and collapses to the
# lone maximally depolarizing point at t3 = 1.
for t3 in (0.0, 0.25, 0.5, 0.75, 1.0):
    ds = run_sweep(SweepRequest("cube3d", 21, t3=t3))
    gen = int((ds.cp & ds.paper_generating).sum())
    print(f"t3 = {t3:4.2f}: cp & generating nodes = {gen}")

# The phase-covariant plane (lambda2 = lambda1): the 2D region of Fig.-2
# style plots.
pc = run_sweep(SweepRequest("phase_covariant_2d", 101))
print("phase-covariant plane summary:", region_summary(pc))

# CSV round trip: first rows of the written file.
with tempfile.TemporaryDirectory() as tmp:
    out = os.path.join(tmp, "cube.csv")
    run_sweep(SweepRequest("cube3d", 3, out=out))
    with open(out) as fh:
        for line in list(fh)[:5]:
            print(line.rstrip())

# One-parameter family sweeps reuse the same row contract.
gad = run_sweep(SweepRequest("family_1d", 11, family="gad", p=1.0))
for i in range(len(gad)):
    row = gad.row(i)
    print(f"lambda = {row.lambda1:+.1f}  cp = {row.cp}  generating = {row.paper_generating}")
