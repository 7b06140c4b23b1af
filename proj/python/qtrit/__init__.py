"""Mixed-radix circuit toolkit: generators, rewrites, exact simulation."""

from ._core import (
    Circuit,
    CountReport,
    DecompositionVariant,
    DensityMatrix,
    Gate,
    GateKind,
    KrausChannel,
    NoiseParams,
    OperationKind,
    ResourceEstimate,
    Route,
    StateVector,
    SuccessReport,
    SweepRow,
    TernaryAction,
    WireSpec,
    amplitude_damping_channel,
    build_adder,
    build_multiplier,
    circuit_from_json,
    completeness_defect,
    decompose_toffoli,
    depolarizing_channel,
    equivalent_up_to_global_phase,
    estimate,
    fidelity,
    gate_counts,
    is_complete,
    make_gate,
    make_ternary_cx,
    parse_qasm,
    prepare_operand,
    promoted_wires,
    run,
    run_density,
    success_probability,
    sweep,
    toffoli_count,
    unitary_of,
)

__all__ = [
    "Circuit",
    "CountReport",
    "DecompositionVariant",
    "DensityMatrix",
    "Gate",
    "GateKind",
    "KrausChannel",
    "NoiseParams",
    "OperationKind",
    "ResourceEstimate",
    "Route",
    "StateVector",
    "SuccessReport",
    "SweepRow",
    "TernaryAction",
    "WireSpec",
    "amplitude_damping_channel",
    "build_adder",
    "build_multiplier",
    "circuit_from_json",
    "completeness_defect",
    "decompose_toffoli",
    "depolarizing_channel",
    "equivalent_up_to_global_phase",
    "estimate",
    "fidelity",
    "gate_counts",
    "is_complete",
    "make_gate",
    "make_ternary_cx",
    "parse_qasm",
    "prepare_operand",
    "promoted_wires",
    "run",
    "run_density",
    "success_probability",
    "sweep",
    "toffoli_count",
    "unitary_of",
]

__version__ = "0.1.0"
