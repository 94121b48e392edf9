"""Named one-parameter channel families and their generating ranges.

Each family maps a scalar parameter (plus a shift weight p or an axis where
applicable) to canonical channel eigenvalues. For every family the range of
parameters satisfying CH1 or CH2 has a closed form; those ranges are exposed
as predicates so grid evaluations of the conditions can be cross-checked
against them point by point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

from nonloc.channels import QubitChannel, cp_closed_form
from nonloc.nonlocality import ch_conditions

INV_SQRT2 = 1.0 / math.sqrt(2.0)

#: Printed parameter domain of each one-parameter family.
FAMILY_DOMAINS: dict[str, tuple[float, float]] = {
    "linear": (-1.0, 1.0),
    "dephasing": (-1.0, 1.0),
    "depolarizing": (-1.0 / 3.0, 1.0),
    "two_pauli": (0.0, 1.0),
    "gad": (-1.0, 1.0),
    "shifted_depolarizing": (0.0, 1.0),
}

FAMILY_KINDS = tuple(FAMILY_DOMAINS) + ("phase_covariant",)

#: Shift weights used when cross-checking the p-dependent families.
CROSS_CHECK_P = (-1.0, -0.5, 0.0, 0.5, 1.0)


@dataclass(frozen=True)
class FamilySpec:
    """Family selector plus parameters; unused fields stay at defaults."""

    kind: str
    lam: float
    p: float = 0.0
    axis: int = 3
    lam3: float | None = None
    t3: float | None = None

    def to_json(self) -> dict:
        data: dict = {"kind": self.kind, "lambda": self.lam}
        if self.kind in ("gad", "shifted_depolarizing"):
            data["p"] = self.p
        if self.kind in ("linear", "dephasing") and self.axis != 3:
            data["axis"] = self.axis
        if self.kind == "phase_covariant":
            data["lambda3"] = self.lam3
            data["t3"] = self.t3
        return data

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        return cls(
            kind=data["kind"],
            lam=float(data["lambda"]),
            p=float(data.get("p", 0.0)),
            axis=int(data.get("axis", 3)),
            lam3=data.get("lambda3"),
            t3=data.get("t3"),
        )


def channel_from_pauli(probs) -> QubitChannel:
    """Unital channel mixing the three Pauli rotations with weights probs.

    The eigenvalues are lambda_k = 2 (p0 + pk) - 1; such mixtures are CP by
    construction, which is verified before returning.
    """
    probs = tuple(float(v) for v in probs)
    if len(probs) != 4:
        raise ValueError("need four probabilities (identity plus three axes)")
    if min(probs) < -1e-12 or abs(sum(probs) - 1.0) > 1e-12:
        raise ValueError("probabilities must be nonnegative and sum to 1")
    p0 = probs[0]
    ch = QubitChannel(tuple(2.0 * (p0 + pk) - 1.0 for pk in probs[1:]))
    if not pauli_cp(ch):
        raise RuntimeError(f"Pauli mixture unexpectedly failed the CP check: {probs}")
    return ch


def pauli_cp(ch: QubitChannel) -> bool:
    """CP condition for unital channels: |1 +- l3| >= |l1 +- l2|."""
    if not ch.is_unital:
        raise ValueError("this check applies to unital channels only")
    l1, l2, l3 = ch.lam
    return abs(1.0 + l3) >= abs(l1 + l2) and abs(1.0 - l3) >= abs(l1 - l2)


def phase_covariant_cp(l1: float, l3: float, t3: float) -> bool:
    """CP condition for the lambda2 = lambda1 slice with a third-axis shift."""
    return abs(l3) + abs(t3) <= 1.0 and 4.0 * l1 * l1 + t3 * t3 <= (1.0 + l3) ** 2


def _check_domain(spec: FamilySpec) -> None:
    if spec.kind in FAMILY_DOMAINS:
        lo, hi = FAMILY_DOMAINS[spec.kind]
        if not lo <= spec.lam <= hi:
            raise ValueError(f"{spec.kind}: lambda {spec.lam} outside [{lo}, {hi}]")
    if spec.kind in ("gad", "shifted_depolarizing") and abs(spec.p) > 1.0:
        raise ValueError(f"{spec.kind}: shift weight p must satisfy |p| <= 1")
    if spec.kind in ("linear", "dephasing") and spec.axis not in (1, 2, 3):
        raise ValueError("axis must be 1, 2 or 3")
    if spec.kind == "phase_covariant":
        if spec.lam3 is None or spec.t3 is None:
            raise ValueError("phase_covariant needs lambda3 and t3")
        if abs(spec.lam) > 1.0 or abs(spec.lam3) > 1.0:
            raise ValueError("phase_covariant: |lambda1|, |lambda3| <= 1 required")


def family_channel(spec: FamilySpec) -> QubitChannel:
    """Instantiate a family member; out-of-domain parameters are rejected."""
    if spec.kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {spec.kind!r}")
    _check_domain(spec)
    lam = spec.lam
    if spec.kind == "linear":
        eig = [0.0, 0.0, 0.0]
        eig[spec.axis - 1] = lam
        return QubitChannel(tuple(eig))
    if spec.kind == "dephasing":
        eig = [lam, lam, lam]
        eig[spec.axis - 1] = 1.0
        return QubitChannel(tuple(eig))
    if spec.kind == "depolarizing":
        return QubitChannel((lam, lam, lam))
    if spec.kind == "two_pauli":
        return QubitChannel((lam, lam, 2.0 * lam - 1.0))
    if spec.kind == "gad":
        lsq = lam * lam
        return QubitChannel((lam, lam, lsq), (0.0, 0.0, spec.p * (1.0 - lsq)))
    if spec.kind == "shifted_depolarizing":
        return QubitChannel((lam, lam, lam), (0.0, 0.0, spec.p * (1.0 - lam)))
    return QubitChannel((lam, lam, spec.lam3), (0.0, 0.0, spec.t3))


class GeneratingRange(NamedTuple):
    """Closed-form generating range: printable description + membership."""

    description: str
    contains: Callable[..., bool]


def _pc_range(l1: float, l3: float) -> bool:
    return (
        l1 * l1 < min(l3 * l3, 1.0 - l3 * l3)
        or (abs(l1) == abs(l3) and abs(l1) < INV_SQRT2)
        or abs(l3) < abs(l1) < 1.0
    )


_RANGES: dict[str, GeneratingRange] = {
    "linear": GeneratingRange("|lambda| < 1", lambda lam: abs(lam) < 1.0),
    "dephasing": GeneratingRange("empty", lambda lam: False),
    "depolarizing": GeneratingRange(
        "-1/3 <= lambda < 1/sqrt(2)", lambda lam: abs(lam) < INV_SQRT2
    ),
    "two_pauli": GeneratingRange("0 < lambda < 1", lambda lam: 0.0 < lam < 1.0),
    "gad": GeneratingRange("|lambda| < 1 (any p)", lambda lam, p=0.0: abs(lam) < 1.0),
    "shifted_depolarizing": GeneratingRange(
        "0 <= lambda < 1/sqrt(2) (any p)", lambda lam, p=0.0: lam < INV_SQRT2
    ),
    "phase_covariant": GeneratingRange(
        "lambda1^2 < min(lambda3^2, 1 - lambda3^2)"
        " or |lambda1| = |lambda3| < 1/sqrt(2) or |lambda3| < |lambda1| < 1",
        _pc_range,
    ),
}


def analytic_generating_range(kind: str) -> GeneratingRange:
    """Closed-form range of parameters satisfying CH1 or CH2."""
    try:
        return _RANGES[kind]
    except KeyError:
        raise ValueError(f"unknown family kind {kind!r}") from None


def _grid(lo: float, hi: float, n: int) -> list[float]:
    step = (hi - lo) / (n - 1)
    pts = [lo + step * k for k in range(n)]
    pts[0], pts[-1] = lo, hi
    return pts


def family_cross_check(kind: str, resolution: int) -> tuple[int, int, int]:
    """Grid-evaluate the conditions against the closed-form range.

    Returns (points checked, range mismatches, CP failures). The CP column
    counts domain points whose channel fails its family CP check; for the
    one-parameter families the printed domains are CP throughout, so any
    nonzero count is a defect.
    """
    rng = analytic_generating_range(kind)
    checked = mismatches = cp_failures = 0

    if kind == "phase_covariant":
        axis = _grid(-1.0, 1.0, resolution)
        for l1 in axis:
            for l3 in axis:
                c1, c2 = ch_conditions(l1, l1, l3)
                checked += 1
                if bool(c1 or c2) != rng.contains(l1, l3):
                    mismatches += 1
        return checked, mismatches, cp_failures

    lo, hi = FAMILY_DOMAINS[kind]
    weights = CROSS_CHECK_P if kind in ("gad", "shifted_depolarizing") else (0.0,)
    for p in weights:
        for lam in _grid(lo, hi, resolution):
            ch = family_channel(FamilySpec(kind, lam, p=p))
            c1, c2 = ch_conditions(ch.lam[0], ch.lam[1], ch.lam[2])
            got = bool(c1 or c2)
            want = rng.contains(lam, p) if len(weights) > 1 else rng.contains(lam)
            checked += 1
            if got != want:
                mismatches += 1
            if not cp_closed_form(ch.lam[0], ch.lam[1], ch.lam[2], ch.t[2]):
                cp_failures += 1
    return checked, mismatches, cp_failures
