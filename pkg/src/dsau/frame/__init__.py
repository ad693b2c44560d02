"""
识别框架模块
"""

from dsau.frame.frame import (
    Frame,
    Partition,
    SubsetMask,
    block_frame,
    product_structure,
    project_set,
)

__all__ = [
    "Frame",
    "Partition",
    "SubsetMask",
    "block_frame",
    "product_structure",
    "project_set",
]
