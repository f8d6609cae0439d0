"""Pauli correlation tensors and entanglement structure for pure multiqubit states."""

from ._core import (
    ClassLabel,
    ClassificationReport,
    CorrelationTensor,
    EntanglementPartition,
    MeasureReport,
    PureState,
    SchmidtSplit,
    Witness,
    b_measure,
    b_normalized,
    basis_state,
    bell_state,
    classify,
    dicke_state,
    finest_partition,
    ghz_reference,
    ghz_state,
    haar_random_state,
    m_prime_value,
    m_value,
    make_state,
    measure,
    named_state,
    oracle_partition,
    phi4_cluster_state,
    schmidt_split,
    tensor_scan,
    w_state,
    werner_scan,
)

__all__ = [
    "ClassLabel",
    "ClassificationReport",
    "CorrelationTensor",
    "EntanglementPartition",
    "MeasureReport",
    "PureState",
    "SchmidtSplit",
    "Witness",
    "b_measure",
    "b_normalized",
    "basis_state",
    "bell_state",
    "classify",
    "dicke_state",
    "finest_partition",
    "ghz_reference",
    "ghz_state",
    "haar_random_state",
    "m_prime_value",
    "m_value",
    "make_state",
    "measure",
    "named_state",
    "oracle_partition",
    "phi4_cluster_state",
    "schmidt_split",
    "tensor_scan",
    "w_state",
    "werner_scan",
]
