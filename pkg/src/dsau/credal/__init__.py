"""
可信集模块
"""

from dsau.credal.credal import (
    Allocation,
    ConsistencyVerdict,
    allocation_marginals,
    build_allocation,
    is_consistent,
    sample_allocation,
    sample_consistent,
)

__all__ = [
    "Allocation",
    "ConsistencyVerdict",
    "allocation_marginals",
    "build_allocation",
    "is_consistent",
    "sample_allocation",
    "sample_consistent",
]
