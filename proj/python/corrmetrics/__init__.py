"""Correlation-based metrics for multiclass confusion matrices."""

from ._core import (
    BinaryCounts,
    ConfusionMatrix,
    Marginals,
    ParseError,
    Score,
    StructureFlags,
    accuracy,
    accuracy_rescaled,
    binary_counts,
    delta_k,
    emcc,
    empc1,
    empc1_rho,
    empc2,
    empc2_rho,
    er_k,
    er_k_rho,
    f1,
    families,
    generate,
    marginals,
    mcc,
    mpc1,
    mpc2,
    mpc_matrix,
    oracle,
    parse_confusion_matrix,
    r_k,
    read_confusion_matrix,
    score_matrix,
    simulate,
    structure,
)

__all__ = [name for name in dir() if not name.startswith("_")]
