"""Two-qubit Maxwell's-demon heat engine laboratory (C++ core bindings)."""

from ._core import (
    HBAR,
    K_B,
    CycleLedger,
    cev,
    cnot,
    cnot_from_sequence,
    coupling_from_flux,
    demon_ignored_paradox,
    device_cycle,
    device_efficiency,
    distance_up_to_global_phase,
    efficiency_closed_form,
    energy,
    expm_hermitian,
    gap_from_gate,
    gibbs_populations,
    hamiltonian,
    heat_exchanged,
    iswap_duration,
    iswap_primitive,
    joint_thermal_state,
    kron,
    mean_occupation,
    partial_trace,
    pauli_x,
    pauli_y,
    pauli_z,
    positive_work_condition,
    qin_closed_form,
    relax_sigma_z,
    rot,
    run_cycle,
    thermalize,
    trace_distance,
    verify_decomposition,
    vn_entropy,
    work_closed_form,
)

__all__ = [
    "HBAR",
    "K_B",
    "CycleLedger",
    "cev",
    "cnot",
    "cnot_from_sequence",
    "coupling_from_flux",
    "demon_ignored_paradox",
    "device_cycle",
    "device_efficiency",
    "distance_up_to_global_phase",
    "efficiency_closed_form",
    "energy",
    "expm_hermitian",
    "gap_from_gate",
    "gibbs_populations",
    "hamiltonian",
    "heat_exchanged",
    "iswap_duration",
    "iswap_primitive",
    "joint_thermal_state",
    "kron",
    "mean_occupation",
    "partial_trace",
    "pauli_x",
    "pauli_y",
    "pauli_z",
    "positive_work_condition",
    "qin_closed_form",
    "relax_sigma_z",
    "rot",
    "run_cycle",
    "thermalize",
    "trace_distance",
    "verify_decomposition",
    "vn_entropy",
    "work_closed_form",
]
