"""CHSH nonlocality of Choi states and the closed-form generation criteria.

For a two-qubit state rho the correlation matrix T_jk = Tr[rho sigma_j (x)
sigma_k] determines the maximal CHSH value: with M the largest sum of two
eigenvalues of T^dag T, the optimum is S = 2 sqrt(M) and a violation exists
iff M > 1. For X states (hence for Choi states of the channels here) the
eigenvalues of T^dag T have closed forms, the s-values.

Two verdicts about a channel are deliberately reported side by side:

* ``paper_generating`` -- the disjunction of the closed-form criteria CH1
  and CH2 over the channel eigenvalues, evaluated exactly as printed
  (strict and non-strict comparisons preserved);
* ``breaks_chsh_direct`` -- M > 1 for the channel's own Choi state.

They are not equivalent; the identity channel breaks CHSH maximally yet
satisfies neither CH1 nor CH2, and classify() makes no attempt to hide the
disagreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from nonloc.channels import (
    QubitChannel,
    XState,
    choi,
    is_completely_positive,
    xstate_from_channel,
)
from nonloc.numerics import SIGMA1, SIGMA2, SIGMA3, hermitian_eigenvalues, is_psd

#: Agreement required between the closed-form and numeric s-value routes.
ORACLE_ATOL = 1e-10


class InternalConsistencyError(RuntimeError):
    """Closed-form and numeric routes disagreed beyond tolerance."""


class SValues(NamedTuple):
    """Eigenvalues of T^dag T for an X state; s3 >= s2 by construction."""

    s1: float
    s2: float
    s3: float


class Horodecki(NamedTuple):
    m: float
    s: float
    breaks: bool


_PAULI_PAIRS = [
    [np.kron(a, b) for b in (SIGMA1, SIGMA2, SIGMA3)]
    for a in (SIGMA1, SIGMA2, SIGMA3)
]


def correlation_matrix_xstate(x: XState) -> np.ndarray:
    """Correlation matrix of an X state; third row and column stay diagonal."""
    w = complex(x.w)
    z = complex(x.z)
    return np.array(
        [
            [2.0 * (w.real + z.real), 2.0 * (z.imag - w.imag), 0.0],
            [-2.0 * (w.imag + z.imag), 2.0 * (z.real - w.real), 0.0],
            [0.0, 0.0, x.a - x.b - x.c + x.d],
        ]
    )


def correlation_matrix_generic(rho: np.ndarray) -> np.ndarray:
    """Correlation matrix of any two-qubit state via Pauli traces.

    This is the numeric route: it knows nothing about X structure and is
    used to cross-check the closed forms. Translation parameters of a
    channel never show up here, only sigma (x) sigma components do.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("expected a 4x4 density matrix")
    if abs(np.trace(rho) - 1.0) > 1e-10:
        raise ValueError("not a state: trace differs from 1 beyond 1e-10")
    if np.abs(rho - rho.conj().T).max() > 1e-10:
        raise ValueError("not a state: not Hermitian within 1e-10")
    t = np.empty((3, 3))
    for j in range(3):
        for k in range(3):
            t[j, k] = np.einsum("ij,ji->", rho, _PAULI_PAIRS[j][k]).real
    return t


def s_values_closed_form(x: XState) -> SValues:
    """Closed-form eigenvalues of T^dag T from X-state parameters."""
    aw = abs(complex(x.w))
    az = abs(complex(x.z))
    return SValues(
        (x.a - x.b - x.c + x.d) ** 2,
        4.0 * (aw - az) ** 2,
        4.0 * (aw + az) ** 2,
    )


def s_values_channel(ch: QubitChannel) -> SValues:
    """Closed-form s-values from channel eigenvalues; independent of t.

    (|l1+l2| -+ |l1-l2|)^2 / 4 collapses to min/max of the squares, which is
    the form used: it evaluates the boundary identities exactly instead of
    up to cancellation noise.
    """
    l1, l2, l3 = ch.lam
    return SValues(l3 * l3, min(l1 * l1, l2 * l2), max(l1 * l1, l2 * l2))


def horodecki(sv: SValues) -> Horodecki:
    """Largest two-eigenvalue sum M, the CHSH optimum 2 sqrt(M), and M > 1."""
    m = max(sv.s1 + sv.s2, sv.s2 + sv.s3, sv.s3 + sv.s1)
    return Horodecki(m, 2.0 * math.sqrt(m), m > 1.0)


def ch_conditions(l1, l2, l3):
    """The CH1 and CH2 criteria, elementwise over scalars or arrays.

    CH1: |l1+l2| + |l1-l2| < 2 sqrt(1 - l3^2)  and  (|l1+l2| - |l1-l2|)^2 <= 4 l3^2
    CH2: |l1+l2| < 2                           and  (|l1+l2| - |l1-l2|)^2 >  4 l3^2

    The first CH1 inequality is evaluated with both sides squared (decision
    identical: both sides are nonnegative, and a negative radicand fails
    either way), and the (|l1+l2| -+ |l1-l2|)^2 terms via their exact
    collapse 4 min(l1^2, l2^2) / 4 max(l1^2, l2^2).  Both rewrites keep the
    decision identical in exact arithmetic while avoiding the cancellation
    noise that would otherwise break boundary identities such as
    (|1+l| - |1-l|)^2 = 4 l^2.  The common factor 4 is dropped (exact
    scaling).  The second comparisons make ch1 and ch2 mutually exclusive.
    """
    l3sq = l3 * l3
    lo = np.minimum(l1 * l1, l2 * l2)
    hi = np.maximum(l1 * l1, l2 * l2)
    ch1 = (hi < 1.0 - l3sq) & (lo <= l3sq)
    ch2 = (abs(l1 + l2) < 2.0) & (lo > l3sq)
    return ch1, ch2


def paper_conditions(ch: QubitChannel) -> tuple[bool, bool]:
    """(CH1, CH2) for the channel; never both true."""
    c1, c2 = ch_conditions(*ch.lam)
    return bool(c1), bool(c2)


@dataclass(frozen=True)
class Classification:
    """Full verdict for one channel; see the module docstring for the two
    intentionally coexisting nonlocality flags."""

    cp: bool
    ch1: bool
    ch2: bool
    paper_generating: bool
    horodecki_m: float
    chsh_s: float
    breaks_chsh_direct: bool

    def to_json(self) -> dict:
        return {
            "cp": self.cp,
            "ch1": self.ch1,
            "ch2": self.ch2,
            "paper_generating": self.paper_generating,
            "horodecki_m": self.horodecki_m,
            "chsh_s": self.chsh_s,
            "breaks_chsh_direct": self.breaks_chsh_direct,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Classification":
        return cls(**{k: data[k] for k in cls.__dataclass_fields__})


def classify(ch: QubitChannel) -> Classification:
    """Classify one channel, cross-checking every closed form numerically.

    The s-values are computed twice (channel closed form and the Jacobi
    spectrum of T^dag T from the numerically built Choi matrix; on the
    t1 = t2 = 0 slice additionally from X-state parameters) and must agree
    within 1e-10, otherwise an InternalConsistencyError is raised.
    """
    on_slice = ch.t[0] == 0.0 and ch.t[1] == 0.0
    if on_slice:
        cp = is_completely_positive(ch)
    else:
        cp = is_psd(choi(ch), 1e-10)

    sv = s_values_channel(ch)
    t = correlation_matrix_generic(choi(ch))
    numeric = hermitian_eigenvalues(t.T @ t)
    closed = np.sort(np.asarray(sv))[::-1]
    if np.abs(closed - numeric).max() > ORACLE_ATOL:
        raise InternalConsistencyError(
            f"s-values disagree: closed form {tuple(closed)}, numeric {tuple(numeric)}"
        )
    if on_slice:
        sv_x = s_values_closed_form(xstate_from_channel(ch))
        if max(abs(a - b) for a, b in zip(sv, sv_x)) > ORACLE_ATOL:
            raise InternalConsistencyError(
                f"s-values disagree: channel form {sv}, X-state form {sv_x}"
            )

    c1, c2 = paper_conditions(ch)
    m, s, breaks = horodecki(sv)
    return Classification(
        cp=cp,
        ch1=c1,
        ch2=c2,
        paper_generating=c1 or c2,
        horodecki_m=m,
        chsh_s=s,
        breaks_chsh_direct=breaks,
    )
