"""Correlation matrices, s-values, CHSH quantities, generation criteria.

The s-values have three routes that must agree: closed form from X-state
parameters, closed form from channel eigenvalues, and Jacobi eigenvalues of
T^dag T with T extracted from the numerically built Choi matrix.
"""

import math

import numpy as np
import pytest

from nonloc.channels import QubitChannel, XState, choi, xstate_from_channel
from nonloc.nonlocality import (
    Classification,
    InternalConsistencyError,
    classify,
    correlation_matrix_generic,
    correlation_matrix_xstate,
    horodecki,
    paper_conditions,
    s_values_channel,
    s_values_closed_form,
)
from nonloc.numerics import hermitian_eigenvalues, is_psd

BELL = XState(0.5, 0.0, 0.0, 0.5, 0.5, 0.0)


def random_channel(rng):
    return QubitChannel(tuple(rng.uniform(-1, 1, 3)), (0.0, 0.0, rng.uniform(-1, 1)))


def test_correlation_matrix_bell():
    assert np.allclose(correlation_matrix_xstate(BELL), np.diag([1.0, -1.0, 1.0]))


def test_correlation_matrix_channel_form():
    x = xstate_from_channel(QubitChannel((0.6, 0.2, 0.4), (0.0, 0.0, 0.2)))
    assert np.allclose(
        correlation_matrix_xstate(x), np.diag([0.6, -0.2, 0.4]), atol=1e-15
    )


def test_correlation_matrix_third_row_column_zero():
    rng = np.random.default_rng(2)
    for _ in range(100):
        x = xstate_from_channel(random_channel(rng))
        t = correlation_matrix_xstate(x)
        assert np.all(t[2, :2] == 0.0) and np.all(t[:2, 2] == 0.0)


def test_generic_correlation_matrix_ignores_shift():
    ch = QubitChannel((0.5, 0.3, 0.1), (0.1, 0.2, 0.3))
    got = correlation_matrix_generic(choi(ch))
    assert np.allclose(got, np.diag([0.5, -0.3, 0.1]), atol=1e-14)


def test_generic_correlation_matrix_rejects_non_state():
    with pytest.raises(ValueError):
        correlation_matrix_generic(np.eye(4, dtype=complex))


def test_s_values_bell():
    assert s_values_closed_form(BELL) == (1.0, 1.0, 1.0)


def test_s_values_channel_example():
    sv = s_values_channel(QubitChannel((0.9, 0.3, 0.5)))
    assert np.allclose(sv, (0.25, 0.09, 0.81), atol=1e-15)
    assert sv.s3 >= sv.s2


def test_s_values_three_routes_agree():
    rng = np.random.default_rng(31)
    for _ in range(300):
        ch = random_channel(rng)
        sv_ch = np.sort(s_values_channel(ch))
        sv_x = np.sort(s_values_closed_form(xstate_from_channel(ch)))
        t = correlation_matrix_generic(choi(ch))
        sv_num = np.sort(hermitian_eigenvalues(t.T @ t))
        assert np.abs(sv_ch - sv_x).max() <= 1e-10
        assert np.abs(sv_ch - sv_num).max() <= 1e-10


def test_horodecki_identity():
    m, s, breaks = horodecki(s_values_channel(QubitChannel((1.0, 1.0, 1.0))))
    assert m == 2.0
    assert abs(s - 2.0 * math.sqrt(2.0)) <= 1e-12
    assert breaks


def test_horodecki_examples():
    m, s, breaks = horodecki(s_values_channel(QubitChannel((0.9, 0.9, 0.1))))
    assert abs(m - 1.62) <= 1e-12 and breaks
    assert abs(s - 2.0 * math.sqrt(1.62)) <= 1e-12
    m, _, breaks = horodecki(s_values_channel(QubitChannel((0.5, 0.5, 0.5))))
    assert m == 0.75 * 0.5 + 0.25 * 0.5  # 0.5
    assert not breaks


def test_conditions_identity_satisfies_neither():
    assert paper_conditions(QubitChannel((1.0, 1.0, 1.0))) == (False, False)


def test_conditions_depolarizing_half():
    assert paper_conditions(QubitChannel((0.5, 0.5, 0.5))) == (True, False)


def test_conditions_amplitude_damping_like():
    # lambda1 = lambda2 = 0.9, lambda3 = 0.81: first branch fails, second holds
    assert paper_conditions(QubitChannel((0.9, 0.9, 0.81))) == (False, True)


def test_conditions_never_both():
    rng = np.random.default_rng(37)
    for _ in range(2000):
        ch1, ch2 = paper_conditions(random_channel(rng))
        assert not (ch1 and ch2)


def test_classify_depolarizing_half():
    c = classify(QubitChannel((0.5, 0.5, 0.5)))
    assert c.cp and c.ch1 and not c.ch2 and c.paper_generating
    assert abs(c.horodecki_m - 0.5) <= 1e-15
    assert not c.breaks_chsh_direct


def test_classify_identity_discrepancy():
    # Maximal direct CHSH violation, yet neither closed-form criterion holds;
    # both verdicts are reported side by side on purpose.
    c = classify(QubitChannel((1.0, 1.0, 1.0)))
    assert c.cp and not c.ch1 and not c.ch2 and not c.paper_generating
    assert c.horodecki_m == 2.0
    assert abs(c.chsh_s - 2.0 * math.sqrt(2.0)) <= 1e-12
    assert c.breaks_chsh_direct


def test_classify_fully_shifted_depolarizing():
    # t3 = 1 leaves a single CP channel on the lambda grid; its flags follow
    # the closed forms exactly (ch1 holds at the origin: 0 < 2 and 0 <= 0).
    c = classify(QubitChannel((0.0, 0.0, 0.0), (0.0, 0.0, 1.0)))
    assert c.cp
    assert c.horodecki_m == 0.0 and c.chsh_s == 0.0
    assert c.ch1 and not c.ch2
    assert not c.breaks_chsh_direct


def test_classify_generic_shift_uses_psd_path():
    ch = QubitChannel((0.5, 0.3, 0.1), (0.1, 0.2, 0.3))
    c = classify(ch)
    assert c.cp == is_psd(choi(ch), 1e-10)
    # conditions and s-values are shift-independent
    unshifted = classify(QubitChannel((0.5, 0.3, 0.1)))
    assert (c.ch1, c.ch2, c.horodecki_m) == (
        unshifted.ch1,
        unshifted.ch2,
        unshifted.horodecki_m,
    )


def test_classification_json_roundtrip():
    c = classify(QubitChannel((0.6, 0.2, 0.4), (0.0, 0.0, 0.2)))
    data = c.to_json()
    assert set(data) == {
        "cp",
        "ch1",
        "ch2",
        "paper_generating",
        "horodecki_m",
        "chsh_s",
        "breaks_chsh_direct",
    }
    assert Classification.from_json(data) == c


def test_internal_consistency_error_is_raised_on_bad_oracle():
    # Sanity check that the error type exists and derives from RuntimeError.
    assert issubclass(InternalConsistencyError, RuntimeError)
