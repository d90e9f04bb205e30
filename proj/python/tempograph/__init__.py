"""SIR spreading games on temporal graphs: simulation, discovery, source detection."""

from ._core import (
    TemporalGraph,
    build_hamiltonian_lb,
    build_hub_family,
    build_source_path_lb,
    build_witness_hard_family,
    check_consistency,
    delta_edge_components,
    find_ideal_patient_zero,
    gen_complete,
    gen_ert,
    gen_path,
    gen_random_tree,
    gen_star,
    is_temporal_path,
    parse_temporal_edge_list,
    project_timetable,
    run_discovery_game,
    run_source_game,
    run_sweep,
    simulate,
    snap_ingest,
    validate,
    witness_verify,
    write_temporal_edge_list,
)

__all__ = [
    "TemporalGraph",
    "build_hamiltonian_lb",
    "build_hub_family",
    "build_source_path_lb",
    "build_witness_hard_family",
    "check_consistency",
    "delta_edge_components",
    "find_ideal_patient_zero",
    "gen_complete",
    "gen_ert",
    "gen_path",
    "gen_random_tree",
    "gen_star",
    "is_temporal_path",
    "parse_temporal_edge_list",
    "project_timetable",
    "run_discovery_game",
    "run_source_game",
    "run_sweep",
    "simulate",
    "snap_ingest",
    "validate",
    "witness_verify",
    "write_temporal_edge_list",
]
