"""Impurity-scattering spin entanglement of ballistic electrons.

Two same-spin electrons scatter off a localized magnetic impurity at a
four-rail junction, emerge spin-entangled, and the entanglement is
quantified (Wootters concurrence, entanglement of formation) and witnessed
through two-fermion beam-splitter interference.
"""

from .detection import (
    VERDICT_NOISY,
    VERDICT_SEPARABLE_NOISELESS,
    VERDICT_WITNESSED,
    BeamSplitter,
    OutcomeDistribution,
    WitnessReport,
    bunching_probability,
    separable_noiseless_witness,
    singlet_weight,
    spin_correlation_z,
    two_fermion_transform,
    witness_report,
)
from .entanglement import (
    EntanglementReport,
    binary_entropy,
    concurrence,
    entanglement_of_formation,
    eof_from_concurrence,
    spin_flip,
)
from .oracle import (
    CheckResult,
    LadderOperatorSpec,
    assemble_t_matrix,
    brute_force_two_fermion,
    oracle_scatter,
    random_beam_splitter,
    random_density,
    run_verification_checks,
)
from .scattering import (
    Coupling,
    ImpurityPreparation,
    ScatterOutcome,
    born_kernel,
    coupling_from_parameters,
    scatter,
    scatter_full,
    total_sz_operator,
    unitary_probe,
)
from .spinspace import (
    KET_DOWN,
    KET_DOWN_DOWN,
    KET_UP,
    KET_UP_UP,
    PSI_MINUS,
    PSI_PLUS,
    JointState,
    TwoQubitDensity,
    general_eigenvalues_psd_product,
    hermitian_eigenvalues,
    partial_trace_impurity,
    tensor,
)
from .sweep import DETECT_COLUMNS, SWEEP_COLUMNS, SweepConfig, sweep_grid, sweep_rows, write_csv

__version__ = "0.1.0"

__all__ = [
    "BeamSplitter",
    "CheckResult",
    "Coupling",
    "DETECT_COLUMNS",
    "EntanglementReport",
    "ImpurityPreparation",
    "JointState",
    "KET_DOWN",
    "KET_DOWN_DOWN",
    "KET_UP",
    "KET_UP_UP",
    "LadderOperatorSpec",
    "OutcomeDistribution",
    "PSI_MINUS",
    "PSI_PLUS",
    "SWEEP_COLUMNS",
    "ScatterOutcome",
    "SweepConfig",
    "TwoQubitDensity",
    "VERDICT_NOISY",
    "VERDICT_SEPARABLE_NOISELESS",
    "VERDICT_WITNESSED",
    "WitnessReport",
    "assemble_t_matrix",
    "binary_entropy",
    "born_kernel",
    "brute_force_two_fermion",
    "bunching_probability",
    "concurrence",
    "coupling_from_parameters",
    "entanglement_of_formation",
    "eof_from_concurrence",
    "general_eigenvalues_psd_product",
    "hermitian_eigenvalues",
    "oracle_scatter",
    "partial_trace_impurity",
    "random_beam_splitter",
    "random_density",
    "run_verification_checks",
    "scatter",
    "scatter_full",
    "separable_noiseless_witness",
    "singlet_weight",
    "spin_correlation_z",
    "spin_flip",
    "sweep_grid",
    "sweep_rows",
    "tensor",
    "total_sz_operator",
    "two_fermion_transform",
    "unitary_probe",
    "witness_report",
    "write_csv",
]
