"""
工具模块
"""

from dsau.utils.bits import (
    bits_to_mask,
    mask_to_bits,
    membership_matrix,
    popcount,
    popcount_table,
    union_table,
)

__all__ = [
    "bits_to_mask",
    "mask_to_bits",
    "membership_matrix",
    "popcount",
    "popcount_table",
    "union_table",
]
