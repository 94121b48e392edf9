"""Qubit channels in the canonical affine form and their Choi states.

A channel is stored by its Bloch action r_k -> lambda_k * r_k + t_k. That
form covers every channel considered here (the general case differs only by
fixed local unitaries, which never affect positivity or nonlocality). The
Choi state of such a channel is an X-shaped two-qubit density matrix, and
the identification between the two parameter sets is exposed in both
directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from nonloc.numerics import is_psd

#: Tolerance for the X-state trace constraint a+b+c+d = 1.
TRACE_ATOL = 1e-12

#: Tolerance for preconditions of channel_from_xstate.
SLICE_ATOL = 1e-10

#: Boundary slack of the closed-form CP check, matching the numeric PSD
#: tolerance so both routes agree on channel-set boundary points.
CP_ATOL = 1e-10


@dataclass(frozen=True)
class QubitChannel:
    """Affine qubit map with eigenvalues ``lam`` and translation ``t``.

    The constructor enforces |lambda_k| <= 1 (necessary for positivity of
    the map) but not complete positivity, which remains a queryable
    predicate; non-CP parameter points are legitimate inputs everywhere.
    """

    lam: tuple[float, float, float]
    t: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        lam = tuple(float(v) for v in self.lam)
        t = tuple(float(v) for v in self.t)
        if len(lam) != 3 or len(t) != 3:
            raise ValueError("lam and t must both have three components")
        if any(abs(v) > 1.0 for v in lam):
            raise ValueError(f"eigenvalues must satisfy |lambda_k| <= 1, got {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "t", t)

    @property
    def is_unital(self) -> bool:
        return self.t == (0.0, 0.0, 0.0)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "t": list(self.t)}

    @classmethod
    def from_json(cls, data: dict) -> "QubitChannel":
        return cls(tuple(data["lambda"]), tuple(data.get("t", (0.0, 0.0, 0.0))))


@dataclass(frozen=True)
class XState:
    """Two-qubit X-shaped state: diagonal (a, b, c, d), anti-diagonal w, z.

    Only the trace constraint a+b+c+d = 1 is enforced on construction.
    Positivity is a predicate (``is_valid``) because images of non-CP
    channels are represented by the same type and are exactly the invalid
    ones.
    """

    a: float
    b: float
    c: float
    d: float
    w: complex
    z: complex

    def __post_init__(self):
        if abs(self.a + self.b + self.c + self.d - 1.0) > TRACE_ATOL:
            raise ValueError("diagonal of an X state must sum to 1")

    def is_valid(self, atol: float = 1e-12) -> bool:
        """Positivity: nonnegative diagonal, sqrt(ad) >= |w|, sqrt(bc) >= |z|."""
        if min(self.a, self.b, self.c, self.d) < -atol:
            return False
        ad = math.sqrt(max(self.a * self.d, 0.0))
        bc = math.sqrt(max(self.b * self.c, 0.0))
        return ad >= abs(self.w) - atol and bc >= abs(self.z) - atol

    def matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.a, self.b, self.c, self.d
        m[0, 3], m[3, 0] = self.w, np.conj(self.w)
        m[1, 2], m[2, 1] = self.z, np.conj(self.z)
        return m


def apply(ch: QubitChannel, r) -> np.ndarray:
    """Image of the Bloch vector r under the channel."""
    r = np.asarray(r, dtype=float)
    return np.array(ch.lam) * r + np.array(ch.t)


def stationary_state(ch: QubitChannel) -> tuple[np.ndarray, bool]:
    """Fixed point of the channel and whether it is unique.

    The k-th component is t_k / (1 - lambda_k). A unit eigenvalue with zero
    shift leaves a whole axis fixed: that component is reported as 0 and
    uniqueness as False. A unit eigenvalue with nonzero shift admits no
    fixed point at all.
    """
    x = np.zeros(3)
    unique = True
    for k in range(3):
        if ch.lam[k] == 1.0:
            if ch.t[k] != 0.0:
                raise ValueError(
                    "no stationary state: unit eigenvalue with nonzero shift"
                )
            unique = False
        else:
            x[k] = ch.t[k] / (1.0 - ch.lam[k])
    residual = np.abs(apply(ch, x) - x).max()
    if residual > 1e-12 * max(1.0, np.abs(x).max()):
        raise RuntimeError(f"stationary state failed to verify: residual {residual}")
    return x, unique


def cp_closed_form(l1, l2, l3, t3):
    """Complete positivity of the t1 = t2 = 0 slice, elementwise.

    Equivalent to sqrt((1 +- l3)^2 - t3^2) >= |l1 +- l2| with a negative
    radicand counting as a violation; squaring both sides keeps the decision
    identical while avoiding the NaN branch, and works on scalars and numpy
    arrays alike.  The comparison carries the same slack as the numeric PSD
    oracle: the channel-set boundary classifies as CP, and several named
    families sit exactly on it, where rounding would otherwise flip the
    verdict node by node.
    """
    plus = (1.0 + l3) ** 2 - t3 * t3
    minus = (1.0 - l3) ** 2 - t3 * t3
    return (plus >= (l1 + l2) ** 2 - CP_ATOL) & (minus >= (l1 - l2) ** 2 - CP_ATOL)


def is_completely_positive(ch: QubitChannel) -> bool:
    """Closed-form CP verdict for channels shifted along the third axis only."""
    if ch.t[0] != 0.0 or ch.t[1] != 0.0:
        raise ValueError(
            "closed form requires t1 = t2 = 0; use is_psd(choi(ch)) instead"
        )
    l1, l2, l3 = ch.lam
    return bool(cp_closed_form(l1, l2, l3, ch.t[2]))


def choi(ch: QubitChannel) -> np.ndarray:
    """Choi state of the channel: (1 (x) ch) on the maximally entangled state."""
    l1, l2, l3 = ch.lam
    t1, t2, t3 = ch.t
    tp = (t1 - 1j * t2) / 4.0
    tm = (t1 + 1j * t2) / 4.0
    w = (l1 + l2) / 4.0
    z = (l1 - l2) / 4.0
    return np.array(
        [
            [(1.0 + l3 + t3) / 4.0, tp, 0.0, w],
            [tm, (1.0 - l3 - t3) / 4.0, z, 0.0],
            [0.0, z, (1.0 - l3 + t3) / 4.0, tp],
            [w, 0.0, tm, (1.0 + l3 - t3) / 4.0],
        ],
        dtype=complex,
    )


def choi_is_psd(ch: QubitChannel, tol: float = 1e-10) -> bool:
    """Numeric CP check via positivity of the Choi matrix; works for any t."""
    return is_psd(choi(ch), tol)


def xstate_from_channel(ch: QubitChannel) -> XState:
    """X-state parameters of the Choi state (t1 = t2 = 0 slice).

    The result is a valid state exactly when the channel is CP.
    """
    if ch.t[0] != 0.0 or ch.t[1] != 0.0:
        raise ValueError("the X-state identification requires t1 = t2 = 0")
    l1, l2, l3 = ch.lam
    t3 = ch.t[2]
    return XState(
        a=(1.0 + l3 + t3) / 4.0,
        b=(1.0 - l3 - t3) / 4.0,
        c=(1.0 - l3 + t3) / 4.0,
        d=(1.0 + l3 - t3) / 4.0,
        w=(l1 + l2) / 4.0,
        z=(l1 - l2) / 4.0,
    )


def channel_from_xstate(x: XState) -> QubitChannel:
    """Inverse identification; exact round trip with xstate_from_channel.

    Only X states lying in the image of the t1 = t2 = 0 channel slice are
    accepted: the diagonal must pair up as a+b = c+d = 1/2 and the
    anti-diagonal entries must be real (phases are absorbable by local
    unitaries and are not represented here).
    """
    if abs(x.a + x.b - 0.5) > SLICE_ATOL or abs(x.c + x.d - 0.5) > SLICE_ATOL:
        raise ValueError("not in the channel slice: need a+b = c+d = 1/2")
    if abs(complex(x.w).imag) > SLICE_ATOL or abs(complex(x.z).imag) > SLICE_ATOL:
        raise ValueError("not in the channel slice: w and z must be real")
    w = complex(x.w).real
    z = complex(x.z).real
    return QubitChannel(
        (2.0 * (w + z), 2.0 * (w - z), 2.0 * (x.a + x.d) - 1.0),
        (0.0, 0.0, 2.0 * (x.a + x.c) - 1.0),
    )
