"""Truncated-hash Merkle trees and path falsification probabilities."""

from .hashing import (
    IDEAL,
    SHA256,
    Digest,
    HashSpec,
    OracleState,
    hash_bytes,
    hash_concat,
    truncate_digest,
)
from .merkle import (
    MerkleProof,
    MerkleTree,
    ProofStep,
    build_tree,
    fold_path,
    generate_proof,
    proof_from_json,
    proof_to_json,
    verify_proof,
)
from .probability import (
    DEFAULT_BITS,
    DEFAULT_PATH_LENS,
    FalsificationEstimate,
    PathParams,
    Probability,
    approx_falsification_prob,
    approximation_error,
    diff_table,
    exact_falsification_prob,
    exact_falsification_prob_termsum,
    geometric_sum,
    no_collision_log_prob,
    single_collision_prob,
)
from .report import ReportTable, format_sig
from .simulate import (
    CellResult,
    ExperimentConfig,
    SimulationReport,
    build_grid,
    derive_cell_seed,
    run_cell,
    run_experiment,
    run_grid,
)

__version__ = "0.1.0"

__all__ = [
    "IDEAL",
    "SHA256",
    "Digest",
    "HashSpec",
    "OracleState",
    "hash_bytes",
    "hash_concat",
    "truncate_digest",
    "MerkleProof",
    "MerkleTree",
    "ProofStep",
    "build_tree",
    "fold_path",
    "generate_proof",
    "proof_from_json",
    "proof_to_json",
    "verify_proof",
    "DEFAULT_BITS",
    "DEFAULT_PATH_LENS",
    "FalsificationEstimate",
    "PathParams",
    "Probability",
    "approx_falsification_prob",
    "approximation_error",
    "diff_table",
    "exact_falsification_prob",
    "exact_falsification_prob_termsum",
    "geometric_sum",
    "no_collision_log_prob",
    "single_collision_prob",
    "ReportTable",
    "format_sig",
    "CellResult",
    "ExperimentConfig",
    "SimulationReport",
    "build_grid",
    "derive_cell_seed",
    "run_cell",
    "run_experiment",
    "run_grid",
    "__version__",
]
