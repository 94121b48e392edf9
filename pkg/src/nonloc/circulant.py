"""Block-circulant two-party operators built from shifted subspaces.

The bipartite space C^n (x) C^m decomposes into m subspaces: the i-th is
spanned by |e_k (x) f_{pi(k)+i mod m}> with pi a permutation fixing 0.
Operators assembled block-wise from that decomposition carry at most one
coefficient per matrix entry; the n = m = 2 case reproduces exactly the
X-shaped states, which is how the construction is cross-checked.

Only the square case n = m is supported: the shift that generates the
subspaces acts on the second factor, and rectangular variants would need a
different bookkeeping that nothing here requires.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from nonloc.numerics import is_psd


@dataclass(frozen=True, eq=False)
class CirculantSpec:
    """Dimensions, the subspace permutation, and m coefficient blocks.

    ``coeffs[alpha][i][j]`` multiplies |e_i (x) f_{pi(i)+alpha}><e_j (x)
    f_{pi(j)+alpha}| (second indices mod m).
    """

    n: int
    m: int
    pi: tuple[int, ...]
    coeffs: np.ndarray

    def __post_init__(self):
        if self.n != self.m:
            raise ValueError("only square specs (n = m) are supported")
        pi = tuple(int(v) for v in self.pi)
        if sorted(pi) != list(range(self.m)):
            raise ValueError(f"pi must be a permutation of 0..{self.m - 1}")
        if pi[0] != 0:
            raise ValueError("pi must fix 0")
        coeffs = np.asarray(self.coeffs, dtype=complex)
        if coeffs.shape != (self.m, self.n, self.n):
            raise ValueError(
                f"coeffs must have shape {(self.m, self.n, self.n)}, got {coeffs.shape}"
            )
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "coeffs", coeffs)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "pi": list(self.pi),
            "coeffs": [
                [[[v.real, v.imag] for v in row] for row in block]
                for block in self.coeffs
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CirculantSpec":
        coeffs = np.array(
            [
                [[complex(re, im) for re, im in row] for row in block]
                for block in data["coeffs"]
            ]
        )
        return cls(int(data["n"]), int(data["m"]), tuple(data["pi"]), coeffs)


def subspace_basis(spec: CirculantSpec, i: int) -> np.ndarray:
    """Rows are the basis vectors |e_k (x) f_{pi(k)+i mod m}> of subspace i."""
    if not 0 <= i < spec.m:
        raise ValueError(f"subspace index must lie in 0..{spec.m - 1}")
    basis = np.zeros((spec.n, spec.n * spec.m))
    for k in range(spec.n):
        basis[k, k * spec.m + (spec.pi[k] + i) % spec.m] = 1.0
    return basis


def build_operator(spec: CirculantSpec) -> np.ndarray:
    """Assemble the full nm x nm operator from the coefficient blocks."""
    n, m, pi = spec.n, spec.m, spec.pi
    op = np.zeros((n * m, n * m), dtype=complex)
    for alpha in range(m):
        block = spec.coeffs[alpha]
        for i in range(n):
            row = i * m + (pi[i] + alpha) % m
            for j in range(n):
                op[row, j * m + (pi[j] + alpha) % m] = block[i, j]
    return op


def is_circulant_state(spec: CirculantSpec) -> bool:
    """Whether the assembled operator is a density matrix.

    PSD within 1e-10 (which presupposes Hermiticity) and unit trace within
    1e-12.
    """
    op = build_operator(spec)
    if np.abs(op - op.conj().T).max() > 1e-10:
        return False
    if abs(np.trace(op).real - 1.0) > 1e-12:
        return False
    return is_psd((op + op.conj().T) / 2.0, 1e-10)


def verify_direct_sum(spec: CirculantSpec) -> bool:
    """Whether the m shifted subspaces tile the whole space orthogonally."""
    stacked = np.vstack([subspace_basis(spec, i) for i in range(spec.m)])
    if stacked.shape[0] != spec.n * spec.m:
        return False
    gram = stacked @ stacked.T
    return bool(np.allclose(gram, np.eye(spec.n * spec.m), atol=1e-12))
