"""Redundant B-spline dictionaries and greedy sparse approximation."""

from ._core import (
    AtomicDecomposition,
    AtomRef,
    CurvatureKnots,
    CurvatureVariant,
    Error,
    Partition,
    PiecewiseConstantPhase,
    PursuitProblem,
    SampledMatrix,
    SampledSignal,
    SplineBasis,
    SplineDictionary,
    StageLog,
    adapt_partition,
    boomp_prune,
    chirp,
    curvature_knots,
    curvature_profile,
    dictionary_metadata_json,
    gen_chirp,
    gen_phased_cosine,
    least_squares_decomposition,
    load_partition,
    load_signal,
    numerical_rank,
    oomp,
    random_phase,
    reconstruct,
    round_robin_subpartitions,
    sample_basis,
    sample_dictionary,
    save_partition,
    save_signal,
    span_rank,
    sparse_approximate,
    subdivide,
    swap_refine,
    union_partitions,
)

__all__ = [
    "AtomicDecomposition",
    "AtomRef",
    "CurvatureKnots",
    "CurvatureVariant",
    "Error",
    "Partition",
    "PiecewiseConstantPhase",
    "PursuitProblem",
    "SampledMatrix",
    "SampledSignal",
    "SplineBasis",
    "SplineDictionary",
    "StageLog",
    "adapt_partition",
    "boomp_prune",
    "chirp",
    "curvature_knots",
    "curvature_profile",
    "dictionary_metadata_json",
    "gen_chirp",
    "gen_phased_cosine",
    "least_squares_decomposition",
    "load_partition",
    "load_signal",
    "numerical_rank",
    "oomp",
    "random_phase",
    "reconstruct",
    "round_robin_subpartitions",
    "sample_basis",
    "sample_dictionary",
    "save_partition",
    "save_signal",
    "span_rank",
    "sparse_approximate",
    "subdivide",
    "swap_refine",
    "union_partitions",
]
