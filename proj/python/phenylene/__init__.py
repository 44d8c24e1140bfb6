"""Exact resistance distances and Kirchhoff indices of phenylene chains."""

from ._core import (
    ArithmeticError,
    CapExceeded,
    ChainCode,
    ConnectivityError,
    Error,
    InvalidPair,
    InvalidParameter,
    LabeledChain,
    LabelingError,
    NotReducible,
    ParseError,
    ResistanceNetwork,
    build_chain,
    build_ladder,
    check_lemma5,
    check_lemma6,
    delta_y,
    effective_resistance,
    find_extrema,
    kf_of_code,
    kirchhoff_index,
    lemma4,
    parallel_reduce,
    reduce_terminal_chain,
    resistance_matrix,
    series_reduce,
    star_mesh_eliminate,
    verify_conjecture,
    verify_kink_flips,
    verify_theorem1,
    weighted_hexagon_check,
)

__version__ = "0.1.0"
