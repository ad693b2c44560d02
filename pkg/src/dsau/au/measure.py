"""
AU 度量 - 可信集上 Shannon 熵的最大值

精确求解采用贪心分解：在剩余元素 W 中反复选取使
(Bel(A ∪ R) − Bel(R)) / |A| 最大的非空 A（R 为已移除元素），
A 中每个元素取该比值作为概率，然后从 W 中移除 A。
比值相同时取 |A| 最大者，再取掩码最小者。
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from dsau.core.config import AU_TOL, ROUND_TOL
from dsau.core.errors import InvariantViolationError
from dsau.evidence.mobius import belief_from_mass
from dsau.evidence.models import MassFunction, ProbabilityVector
from dsau.frame.frame import SubsetMask
from dsau.utils.bits import popcount, popcount_table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GreedyStep:
    """贪心分解的一步：选中的子集及其比值"""
    subset: SubsetMask
    ratio: float


@dataclass(frozen=True)
class AUResult:
    """AU(Bel) 的值（比特）及取到最大值的分布"""
    value: float
    argmax: ProbabilityVector
    steps: Tuple[GreedyStep, ...] = ()


def au(m: MassFunction, tie_tol: float = ROUND_TOL) -> AUResult:
    """计算 AU(m)"""
    n = m.frame.size
    full = m.frame.full_mask
    bel = belief_from_mass(m).values
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = popcount_table(n)

    p = np.zeros(n, dtype=np.float64)
    steps: List[GreedyStep] = []
    removed = 0
    previous = np.inf
    while removed != full:
        base = bel[removed]
        # masks[0] = 0 总满足条件，跳过
        candidates = masks[(masks & removed) == 0][1:]
        ratios = (bel[candidates | removed] - base) / sizes[candidates]
        best = ratios.max()
        tied = np.flatnonzero(ratios >= best - tie_tol)
        tied_sizes = sizes[candidates[tied]]
        pick = tied[np.flatnonzero(tied_sizes == tied_sizes.max())[0]]
        chosen = int(candidates[pick])
        ratio = max(float(ratios[pick]), 0.0)
        if ratio > previous + AU_TOL:
            raise InvariantViolationError(
                f"贪心比值上升: {previous:.17g} -> {ratio:.17g}（子集 {chosen:#x}）"
            )
        previous = ratio
        steps.append(GreedyStep(chosen, ratio))
        p[((chosen >> np.arange(n)) & 1).astype(bool)] = ratio
        removed |= chosen

    value = 0.0
    for step in steps:
        if step.ratio > 0.0:
            value += popcount(step.subset) * step.ratio * float(np.log2(1.0 / step.ratio))
    logger.debug("AU = %.12f，共 %d 步", value, len(steps))
    return AUResult(value=value, argmax=ProbabilityVector(m.frame, tuple(p)), steps=tuple(steps))


def au_value(m: MassFunction) -> float:
    """作为度量函数使用：MassFunction -> 实数"""
    return au(m).value
