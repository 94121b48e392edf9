"""Qubit channels, their Choi states, and CHSH nonlocality classification."""

from nonloc.channels import (
    QubitChannel,
    XState,
    apply,
    channel_from_xstate,
    choi,
    cp_closed_form,
    is_completely_positive,
    stationary_state,
    xstate_from_channel,
)
from nonloc.circulant import (
    CirculantSpec,
    build_operator,
    is_circulant_state,
    subspace_basis,
    verify_direct_sum,
)
from nonloc.families import (
    FAMILY_DOMAINS,
    FAMILY_KINDS,
    FamilySpec,
    GeneratingRange,
    analytic_generating_range,
    channel_from_pauli,
    family_channel,
    family_cross_check,
    pauli_cp,
    phase_covariant_cp,
)
from nonloc.nonlocality import (
    Classification,
    InternalConsistencyError,
    SValues,
    classify,
    correlation_matrix_generic,
    correlation_matrix_xstate,
    horodecki,
    paper_conditions,
    s_values_channel,
    s_values_closed_form,
)
from nonloc.numerics import hermitian_eigenvalues, is_psd
from nonloc.sweep import (
    CSV_COLUMNS,
    SweepDataset,
    SweepRequest,
    SweepRow,
    axis_grid,
    region_summary,
    run_sweep,
)

__all__ = [
    "QubitChannel",
    "XState",
    "apply",
    "channel_from_xstate",
    "choi",
    "cp_closed_form",
    "is_completely_positive",
    "stationary_state",
    "xstate_from_channel",
    "CirculantSpec",
    "build_operator",
    "is_circulant_state",
    "subspace_basis",
    "verify_direct_sum",
    "FAMILY_DOMAINS",
    "FAMILY_KINDS",
    "FamilySpec",
    "GeneratingRange",
    "analytic_generating_range",
    "channel_from_pauli",
    "family_channel",
    "family_cross_check",
    "pauli_cp",
    "phase_covariant_cp",
    "Classification",
    "InternalConsistencyError",
    "SValues",
    "classify",
    "correlation_matrix_generic",
    "correlation_matrix_xstate",
    "horodecki",
    "paper_conditions",
    "s_values_channel",
    "s_values_closed_form",
    "hermitian_eigenvalues",
    "is_psd",
    "CSV_COLUMNS",
    "SweepDataset",
    "SweepRequest",
    "SweepRow",
    "axis_grid",
    "region_summary",
    "run_sweep",
]

__version__ = "0.1.0"
