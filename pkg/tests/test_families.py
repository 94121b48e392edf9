"""Named channel families, their CP conditions, and generating ranges."""

import math

import numpy as np
import pytest

from nonloc.channels import QubitChannel, is_completely_positive
from nonloc.families import (
    FAMILY_DOMAINS,
    FamilySpec,
    analytic_generating_range,
    channel_from_pauli,
    family_channel,
    family_cross_check,
    pauli_cp,
    phase_covariant_cp,
)
from nonloc.nonlocality import paper_conditions


def test_pauli_mixture_eigenvalues():
    ch = channel_from_pauli((0.5, 0.5, 0.0, 0.0))
    assert ch.lam == (1.0, 0.0, 0.0) and ch.t == (0.0, 0.0, 0.0)


def test_pauli_mixture_validation():
    with pytest.raises(ValueError):
        channel_from_pauli((0.5, 0.5, 0.5, -0.5))
    with pytest.raises(ValueError):
        channel_from_pauli((0.3, 0.3, 0.3, 0.3))


def test_pauli_mixtures_always_cp():
    rng = np.random.default_rng(43)
    for _ in range(500):
        ch = channel_from_pauli(rng.dirichlet(np.ones(4)))
        assert pauli_cp(ch)
        assert is_completely_positive(ch)


def test_pauli_cp_examples():
    assert not pauli_cp(QubitChannel((0.9, -0.9, 0.3)))  # 0.7 < 1.8
    assert pauli_cp(QubitChannel((0.5, -0.5, -0.5)))
    with pytest.raises(ValueError):
        pauli_cp(QubitChannel((0.5, 0.5, 0.5), (0.0, 0.0, 0.1)))


def test_family_channel_parametrizations():
    assert family_channel(FamilySpec("linear", 0.7)).lam == (0.0, 0.0, 0.7)
    assert family_channel(FamilySpec("linear", 0.7, axis=1)).lam == (0.7, 0.0, 0.0)
    assert family_channel(FamilySpec("dephasing", 0.3)).lam == (0.3, 0.3, 1.0)
    assert family_channel(FamilySpec("depolarizing", -0.2)).lam == (-0.2, -0.2, -0.2)
    assert family_channel(FamilySpec("two_pauli", 0.6)).lam == (0.6, 0.6, 2.0 * 0.6 - 1.0)

    gad = family_channel(FamilySpec("gad", 0.9, p=1.0))
    assert gad.lam == (0.9, 0.9, 0.9 * 0.9)
    assert abs(gad.t[2] - (1.0 - 0.81)) <= 1e-15

    sd = family_channel(FamilySpec("shifted_depolarizing", 0.5, p=-1.0))
    assert sd.lam == (0.5, 0.5, 0.5) and sd.t == (0.0, 0.0, -0.5)

    pc = family_channel(FamilySpec("phase_covariant", 0.3, lam3=0.5, t3=0.2))
    assert pc.lam == (0.3, 0.3, 0.5) and pc.t == (0.0, 0.0, 0.2)


def test_family_channel_domain_errors():
    with pytest.raises(ValueError):
        family_channel(FamilySpec("depolarizing", -0.5))
    with pytest.raises(ValueError):
        family_channel(FamilySpec("two_pauli", -0.1))
    with pytest.raises(ValueError):
        family_channel(FamilySpec("gad", 0.5, p=1.5))
    with pytest.raises(ValueError):
        family_channel(FamilySpec("linear", 0.5, axis=4))
    with pytest.raises(ValueError):
        family_channel(FamilySpec("unknown", 0.5))


def test_family_spec_json():
    spec = FamilySpec("gad", 0.9, p=1.0)
    assert spec.to_json() == {"kind": "gad", "lambda": 0.9, "p": 1.0}
    assert FamilySpec.from_json({"kind": "gad", "lambda": 0.9, "p": 1.0}) == spec
    assert FamilySpec.from_json({"kind": "linear", "lambda": 0.5}) == FamilySpec(
        "linear", 0.5
    )


def test_phase_covariant_cp_examples():
    assert phase_covariant_cp(0.0, 0.0, 1.0)
    assert not phase_covariant_cp(0.9, 0.0, 0.5)  # 3.24 + 0.25 > 1


def test_phase_covariant_cp_matches_general_closed_form():
    from nonloc.channels import cp_closed_form

    rng = np.random.default_rng(47)
    for _ in range(2000):
        l1, l3, t3 = rng.uniform(-1, 1, 3)
        assert phase_covariant_cp(l1, l3, t3) == bool(cp_closed_form(l1, l1, l3, t3))


def test_generating_range_descriptions_and_membership():
    r = analytic_generating_range("linear")
    assert r.contains(0.999) and not r.contains(1.0) and not r.contains(-1.0)
    assert not analytic_generating_range("dephasing").contains(0.5)
    dep = analytic_generating_range("depolarizing")
    assert dep.contains(0.0) and dep.contains(0.7)
    assert not dep.contains(1.0 / math.sqrt(2.0))  # endpoint excluded
    tp = analytic_generating_range("two_pauli")
    assert tp.contains(0.5) and not tp.contains(0.0) and not tp.contains(1.0)
    gad = analytic_generating_range("gad")
    assert gad.contains(0.0) and gad.contains(-0.99) and not gad.contains(1.0)
    sd = analytic_generating_range("shifted_depolarizing")
    assert sd.contains(0.0) and not sd.contains(0.71)
    pc = analytic_generating_range("phase_covariant")
    assert pc.contains(0.9, 0.5)  # branch 3
    assert pc.contains(0.1, 0.5)  # branch 1
    assert pc.contains(0.0, 0.0)  # branch 2
    assert not pc.contains(1.0, 0.5)
    assert not pc.contains(0.8, 0.8)  # neither: s1+s3 >= 1 on the equal diagonal


def test_ranges_match_conditions_on_grids():
    for kind in ("linear", "dephasing", "depolarizing", "two_pauli"):
        checked, mismatches, cp_failures = family_cross_check(kind, 41)
        assert checked == 41 and mismatches == 0 and cp_failures == 0
    for kind in ("gad", "shifted_depolarizing"):
        checked, mismatches, cp_failures = family_cross_check(kind, 41)
        assert checked == 41 * 5 and mismatches == 0 and cp_failures == 0
    checked, mismatches, _ = family_cross_check("phase_covariant", 41)
    assert checked == 41 * 41 and mismatches == 0


def test_dephasing_never_generates_any_axis():
    for axis in (1, 2, 3):
        for lam in np.linspace(-1.0, 1.0, 21):
            ch = family_channel(FamilySpec("dephasing", float(lam), axis=axis))
            assert paper_conditions(ch) == (False, False)


def test_linear_generates_iff_interior_any_axis():
    for axis in (1, 2, 3):
        for lam in (-1.0, -0.5, 0.0, 0.5, 1.0):
            ch = family_channel(FamilySpec("linear", lam, axis=axis))
            c1, c2 = paper_conditions(ch)
            assert (c1 or c2) == (abs(lam) < 1.0)


def test_family_domains_exported():
    assert FAMILY_DOMAINS["depolarizing"] == (-1.0 / 3.0, 1.0)
    assert FAMILY_DOMAINS["two_pauli"] == (0.0, 1.0)
