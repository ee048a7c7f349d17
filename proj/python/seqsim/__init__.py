"""Alignment-free DNA similarity toolkit."""

from ._seqsim import (  # noqa: F401
    AlignmentResult,
    CovarianceDescriptor,
    DCurve,
    DistanceMatrix,
    DnaSequence,
    DotMatrix,
    FastaError,
    PhyloTree,
    RnaSequence,
    ScoringScheme,
    SpotSet,
    Translation,
    WeightMatrix,
    adjacency_matrix,
    alignment_text,
    codon_table,
    covariance_descriptor,
    d1,
    d2,
    d3,
    dcurve,
    dcurve_csv,
    dcurve_descriptor,
    dcurve_pcc,
    dcurve_svg,
    descriptor_distance,
    descriptor_json,
    dinucleotides,
    distance_matrix,
    dot_matrix,
    dot_matrix_pbm,
    dot_matrix_svg,
    encode_binary,
    flatten,
    leaf_path_distances,
    matrix_csv,
    matrix_from_csv,
    matrix_from_json,
    matrix_json,
    needleman_wunsch,
    neighbor_joining,
    parse_fasta,
    parse_newick,
    pipeline,
    smith_waterman,
    spot_set,
    spots_csv,
    spots_svg,
    to_newick,
    transcribe,
    translate,
    translate_codon,
    tree_svg,
    upgma,
    weight_matrix_csv,
    write_fasta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
