from .accumulate import descent_accumulate, merge_buckets, theorem1_ig, zeta_transform
from .chessboard import chessboard_buckets, chessboard_counts, chessboard_size, subgroup_stream, zeta_transform_array
from .permutation import (
    GenSet,
    Permutation,
    conjugate_subset_by_w0,
    left_descents,
    length,
    longest_element,
    parabolic_length,
    permutation_stream,
    right_descents,
)
from .statistics import (
    L_statistic,
    StatWeights,
    character,
    characters,
    chessboard_stream,
    is_chessboard,
    weighted_length,
)

__all__ = [
    'Permutation',
    'GenSet',
    'StatWeights',
    'length',
    'left_descents',
    'right_descents',
    'parabolic_length',
    'longest_element',
    'conjugate_subset_by_w0',
    'permutation_stream',
    'weighted_length',
    'L_statistic',
    'is_chessboard',
    'chessboard_stream',
    'character',
    'characters',
    'descent_accumulate',
    'merge_buckets',
    'zeta_transform',
    'theorem1_ig',
    'chessboard_buckets',
    'chessboard_counts',
    'chessboard_size',
    'subgroup_stream',
    'zeta_transform_array',
]
