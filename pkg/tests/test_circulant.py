"""Shifted-subspace decompositions and block-circulant operators."""

import itertools

import numpy as np
import pytest

from nonloc.channels import XState
from nonloc.circulant import (
    CirculantSpec,
    build_operator,
    is_circulant_state,
    subspace_basis,
    verify_direct_sum,
)


def xstate_spec(a, b, c, d, w, z):
    # Independent of build_operator's indexing: the two coefficient blocks
    # of the n = m = 2 construction, written out by hand.
    blocks = [
        [[a, w], [np.conj(w), d]],
        [[b, z], [np.conj(z), c]],
    ]
    return CirculantSpec(2, 2, (0, 1), blocks)


def test_spec_validation():
    with pytest.raises(ValueError):
        CirculantSpec(2, 3, (0, 1, 2), np.zeros((3, 2, 2)))  # rectangular
    with pytest.raises(ValueError):
        CirculantSpec(2, 2, (1, 0), np.zeros((2, 2, 2)))  # does not fix 0
    with pytest.raises(ValueError):
        CirculantSpec(3, 3, (0, 1, 1), np.zeros((3, 3, 3)))  # not a bijection
    with pytest.raises(ValueError):
        CirculantSpec(2, 2, (0, 1), np.zeros((2, 3, 3)))  # wrong block shape


def test_subspace_basis_shifted():
    spec = CirculantSpec(3, 3, (0, 1, 2), np.zeros((3, 3, 3)))
    basis = subspace_basis(spec, 2)
    # |0 2>, |1 0>, |2 1> as flat indices 2, 3, 7
    want = np.zeros((3, 9))
    want[0, 2] = want[1, 3] = want[2, 7] = 1.0
    assert np.array_equal(basis, want)
    with pytest.raises(ValueError):
        subspace_basis(spec, 3)


def test_build_operator_uniform_diagonal():
    coeffs = np.stack([np.eye(3) / 3.0] * 3)
    spec = CirculantSpec(3, 3, (0, 1, 2), coeffs)
    assert np.allclose(build_operator(spec), np.eye(9) / 3.0)
    # unit-trace version is the maximally mixed state
    mixed = CirculantSpec(3, 3, (0, 1, 2), np.stack([np.eye(3) / 9.0] * 3))
    assert is_circulant_state(mixed)


def test_x_state_pattern_at_n2():
    x = XState(0.4, 0.1, 0.2, 0.3, 0.2 + 0.05j, 0.1)
    spec = xstate_spec(x.a, x.b, x.c, x.d, x.w, x.z)
    assert np.allclose(build_operator(spec), x.matrix())


def test_zero_coefficients_not_a_state():
    spec = CirculantSpec(2, 2, (0, 1), np.zeros((2, 2, 2)))
    assert not is_circulant_state(spec)  # trace 0


def test_non_hermitian_not_a_state():
    blocks = np.zeros((2, 2, 2), dtype=complex)
    blocks[0] = [[0.5, 0.3], [0.0, 0.5]]  # upper coupling without mirror
    spec = CirculantSpec(2, 2, (0, 1), blocks)
    assert not is_circulant_state(spec)


def test_is_circulant_state_matches_x_state_closed_form():
    rng = np.random.default_rng(41)
    for _ in range(300):
        diag = rng.dirichlet(np.ones(4))
        a, b, c, d = diag
        w = rng.uniform(0.0, 0.8) * np.sqrt(max(a * d, 0.0)) * np.exp(
            2j * np.pi * rng.uniform()
        )
        z = rng.uniform(0.0, 1.6) * np.sqrt(max(b * c, 0.0)) * np.exp(
            2j * np.pi * rng.uniform()
        )
        closed = (
            min(a, b, c, d) >= 0.0
            and np.sqrt(a * d) >= abs(w)
            and np.sqrt(b * c) >= abs(z)
        )
        assert is_circulant_state(xstate_spec(a, b, c, d, w, z)) == closed


def test_direct_sum_all_permutations_n3():
    for tail in itertools.permutations((1, 2)):
        pi = (0,) + tail
        spec = CirculantSpec(3, 3, pi, np.zeros((3, 3, 3)))
        assert verify_direct_sum(spec)


def test_json_roundtrip():
    x = xstate_spec(0.4, 0.1, 0.2, 0.3, 0.2 + 0.05j, 0.1j)
    data = x.to_json()
    assert data["n"] == 2 and data["m"] == 2 and data["pi"] == [0, 1]
    assert data["coeffs"][0][0][1] == [0.2, 0.05]
    back = CirculantSpec.from_json(data)
    assert np.allclose(build_operator(back), build_operator(x))
