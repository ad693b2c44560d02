"""
经典信息度量 - Shannon 熵与广义 Hartley 非特异性

约定 0·log₂0 = 0。
"""

import numpy as np

from dsau.evidence.models import MassFunction, ProbabilityVector
from dsau.utils.bits import popcount


def shannon_entropy(p: ProbabilityVector) -> float:
    """−Σ p_x log₂ p_x（比特）"""
    q = p.as_array()
    q = q[q > 0.0]
    return float(np.sum(q * np.log2(1.0 / q)))


def nonspecificity(m: MassFunction) -> float:
    """Σ m(A) log₂|A|"""
    return float(sum(mass * np.log2(popcount(mask)) for mask, mass in m.items()))
