"""
Möbius 对应 - 基本概率分配与信任函数的相互转换

变换均采用原地子集和扫描（N 轮，每轮遍历 2^N 表），代价 O(N·2^N)。
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from dsau.core.config import MASS_TOL, ROUND_TOL
from dsau.core.errors import NotBeliefFunctionError
from dsau.evidence.models import BeliefFunction, MassFunction
from dsau.frame.frame import SubsetMask

logger = logging.getLogger(__name__)


def zeta_transform(table: np.ndarray) -> np.ndarray:
    """f(A) = Σ_{B⊆A} g(B)"""
    out = np.array(table, dtype=np.float64)
    n = out.size.bit_length() - 1
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return out


def mobius_transform(table: np.ndarray) -> np.ndarray:
    """g(A) = Σ_{B⊆A} (-1)^{|A-B|} f(B)"""
    out = np.array(table, dtype=np.float64)
    n = out.size.bit_length() - 1
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] -= view[:, 0, :]
    return out


def belief_from_mass(m: MassFunction) -> BeliefFunction:
    """Bel(A) = Σ_{B⊆A} m(B)，对全部 2^N 个子集计算"""
    return BeliefFunction(m.frame, zeta_transform(m.dense()))


@dataclass(frozen=True)
class BeliefVerdict:
    """信任函数校验结果；不合法时给出见证子集"""
    valid: bool
    reason: str = ""
    witness: Optional[SubsetMask] = None
    coefficient: Optional[float] = None

    def __bool__(self) -> bool:
        return self.valid


def is_belief_function(values, tol: float = MASS_TOL) -> BeliefVerdict:
    """边界条件 + Möbius 系数非负（Shafer 的等价刻画）"""
    table = np.asarray(values, dtype=np.float64)
    if table.ndim != 1 or table.size == 0 or table.size & (table.size - 1):
        return BeliefVerdict(False, f"表长度 {table.size} 不是 2 的幂")
    if not np.all(np.isfinite(table)):
        return BeliefVerdict(False, "表中含有非有限值")
    full = table.size - 1
    if abs(table[0]) > tol:
        return BeliefVerdict(False, f"Bel(∅) = {table[0]:.12g} ≠ 0", 0, float(table[0]))
    if abs(table[full] - 1.0) > tol:
        return BeliefVerdict(False, f"Bel(X) = {table[full]:.12g} ≠ 1", full, float(table[full]))
    coefficients = mobius_transform(table)
    worst = int(np.argmin(coefficients))
    if coefficients[worst] < -tol:
        return BeliefVerdict(
            False,
            f"Möbius 系数 m({worst:#x}) = {coefficients[worst]:.12g} < 0",
            worst,
            float(coefficients[worst]),
        )
    return BeliefVerdict(True)


def mass_from_belief(bel: BeliefFunction) -> MassFunction:
    """Möbius 逆变换；系数 < -MASS_TOL 时报告出错的子集"""
    verdict = is_belief_function(bel.values)
    if not verdict:
        subset = verdict.witness if verdict.witness is not None else 0
        coefficient = verdict.coefficient if verdict.coefficient is not None else float("nan")
        raise NotBeliefFunctionError(subset, coefficient, f"不是信任函数: {verdict.reason}")
    coefficients = mobius_transform(bel.values)
    focal = {
        int(mask): float(coefficients[mask])
        for mask in np.flatnonzero(coefficients > ROUND_TOL)
        if mask != 0
    }
    logger.debug("Möbius 逆变换得到 %d 个焦元", len(focal))
    return MassFunction(bel.frame, focal)
