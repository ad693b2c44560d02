"""
可执行的公理检查

每个检查接收一个候选度量 measure: MassFunction -> float，
因此 AU 之外的度量（包括反例）也能用同一套检查，检查本身也能失败。
"""

import logging
import math
from typing import Any, Dict, Mapping, Sequence, Tuple, Union

import numpy as np

from dsau.axioms.measures import Measure
from dsau.axioms.models import CheckReport, Requirement, Verdict
from dsau.core.config import AU_TOL
from dsau.core.errors import FrameMismatchError, TransferError
from dsau.credal.credal import sample_consistent
from dsau.evidence.measures import shannon_entropy
from dsau.evidence.models import MassFunction, ProbabilityVector
from dsau.evidence.transforms import (
    bayesian,
    expand,
    permute,
    product_mass,
    project_mass,
    relabel,
    transfer,
    vacuous,
)
from dsau.frame.frame import Frame, Partition, SubsetMask
from dsau.utils.bits import popcount

logger = logging.getLogger(__name__)


CONTINUITY_NOTE = "采样得到的必要条件探测，不构成连续性证明"


def continuity_bound(step: float) -> float:
    """相邻网格点之间允许的最大差值（比特），经验模数"""
    return max(1e-2, 50.0 * math.sqrt(step))


def _verdict(margin: float, tol: float) -> Verdict:
    return Verdict.PASS if margin >= -tol else Verdict.FAIL


def _equality(
    requirement: Requirement,
    expected: float,
    actual: float,
    witness: Dict[str, Any],
    tol: float,
    note: str = "",
) -> CheckReport:
    diff = abs(actual - expected)
    verdict = Verdict.PASS if diff <= tol else Verdict.FAIL
    if verdict == Verdict.FAIL:
        logger.debug("%s 未通过: 期望 %.12g，实际 %.12g", requirement.value, expected, actual)
    return CheckReport(requirement, verdict, -diff, witness, note)


def _inequality(
    requirement: Requirement, margin: float, witness: Dict[str, Any], tol: float, note: str = ""
) -> CheckReport:
    return CheckReport(requirement, _verdict(margin, tol), margin, witness, note)


def check_symmetry(
    measure: Measure,
    m: MassFunction,
    permutation: Union[Sequence[int], Mapping[str, str]],
    tol: float = AU_TOL,
) -> CheckReport:
    """R1：measure(m) = measure(π(m))

    permutation 可以是元素下标的置换，也可以是框架标签到自身的映射。
    """
    if isinstance(permutation, Mapping):
        moved = relabel(m, permutation, target=m.frame)
        shown: Any = dict(permutation)
    else:
        moved = permute(m, permutation)
        shown = [int(i) for i in permutation]
    before, after = measure(m), measure(moved)
    witness = {"mass": m.to_dict(), "permutation": shown, "value": before, "permuted_value": after}
    return _equality(Requirement.R1, before, after, witness, tol)


def check_expansibility(
    measure: Measure, m: MassFunction, new_label: str = "", tol: float = AU_TOL
) -> CheckReport:
    """R3：添加一个不被任何焦元包含的元素不改变度量"""
    if not new_label:
        k = m.frame.size + 1
        while f"x{k}" in m.frame.labels:
            k += 1
        new_label = f"x{k}"
    before, after = measure(m), measure(expand(m, new_label))
    witness = {"mass": m.to_dict(), "new_label": new_label, "value": before, "expanded_value": after}
    return _equality(Requirement.R3, before, after, witness, tol)


def check_subadditivity(
    measure: Measure, m: MassFunction, y1: Partition, y2: Partition, tol: float = AU_TOL
) -> CheckReport:
    """R4：measure(m) <= measure(m↓Y1) + measure(m↓Y2)，余量为右边减左边"""
    if y1.frame != m.frame or y2.frame != m.frame:
        raise FrameMismatchError("划分必须建立在 m 的框架上")
    total = measure(m)
    first = measure(project_mass(m, y1))
    second = measure(project_mass(m, y2))
    witness = {
        "mass": m.to_dict(),
        "blocks_y1": [m.frame.labels_of(b) for b in y1.blocks],
        "blocks_y2": [m.frame.labels_of(b) for b in y2.blocks],
        "value": total,
        "value_y1": first,
        "value_y2": second,
    }
    return _inequality(Requirement.R4, first + second - total, witness, tol)


def check_additivity(
    measure: Measure, m1: MassFunction, m2: MassFunction, tol: float = AU_TOL
) -> CheckReport:
    """R5：无交互乘积上 measure(m) = measure(m1) + measure(m2)"""
    joint = product_mass(m1, m2)
    first, second, total = measure(m1), measure(m2), measure(joint)
    witness = {
        "mass_1": m1.to_dict(),
        "mass_2": m2.to_dict(),
        "value_1": first,
        "value_2": second,
        "product_value": total,
    }
    return _equality(Requirement.R5, first + second, total, witness, tol)


def check_monotone_dispensability(
    measure: Measure,
    m: MassFunction,
    a: SubsetMask,
    b: SubsetMask,
    alpha: float,
    tol: float = AU_TOL,
) -> CheckReport:
    """R6：把 A 的部分质量转给真超集 B 不会减少度量"""
    moved = transfer(m, a, b, alpha)
    before, after = measure(m), measure(moved)
    witness = {
        "mass": m.to_dict(),
        "from_set": m.frame.labels_of(a),
        "to_set": m.frame.labels_of(b),
        "alpha": alpha,
        "value": before,
        "transferred_value": after,
    }
    return _inequality(Requirement.R6, after - before, witness, tol)


def normalization_case(requirement: Requirement) -> MassFunction:
    """R7：两元素框架上 m({a}) = m({b}) = ½；R8：m({a,b}) = 1"""
    frame = Frame(("a", "b"))
    if requirement == Requirement.R7:
        return MassFunction(frame, {0b01: 0.5, 0b10: 0.5})
    if requirement == Requirement.R8:
        return vacuous(frame)
    raise ValueError(f"{requirement.value} 不是归一化要求")


def check_normalization(
    measure: Measure, requirement: Requirement, tol: float = AU_TOL
) -> CheckReport:
    m = normalization_case(requirement)
    value = measure(m)
    return _equality(requirement, 1.0, value, {"mass": m.to_dict(), "value": value}, tol)


def check_normalizations(measure: Measure, tol: float = AU_TOL) -> CheckReport:
    """R7 与 R8 都要求值为 1；返回余量较差的一项"""
    r7 = check_normalization(measure, Requirement.R7, tol)
    r8 = check_normalization(measure, Requirement.R8, tol)
    return r8 if r8.margin < r7.margin else r7


def check_range(measure: Measure, m: MassFunction, tol: float = AU_TOL) -> CheckReport:
    """0 <= measure(m) <= log₂ N；报告较紧的一侧（T1 为下界，C4 为上界）"""
    value = measure(m)
    upper = math.log2(m.frame.size)
    low, high = value, upper - value
    requirement = Requirement.T1 if low <= high else Requirement.C4
    witness = {"mass": m.to_dict(), "value": value, "upper_bound": upper}
    return _inequality(requirement, min(low, high), witness, tol)


def check_collapse(
    measure: Measure,
    target: Union[ProbabilityVector, Tuple[Frame, SubsetMask]],
    tol: float = AU_TOL,
) -> CheckReport:
    """ProbabilityVector 走 Shannon 分支（T2），(frame, A) 走 Hartley 分支（T3）"""
    if isinstance(target, ProbabilityVector):
        value = measure(bayesian(target))
        expected = shannon_entropy(target)
        witness = {"probability": list(target.p), "value": value, "expected": expected}
        return _equality(Requirement.T2, expected, value, witness, tol)
    frame, subset = target
    m = vacuous(frame, subset)
    value = measure(m)
    expected = math.log2(popcount(subset))
    witness = {"mass": m.to_dict(), "value": value, "expected": expected}
    return _equality(Requirement.T3, expected, value, witness, tol)


def check_minimality(
    measure: Measure, m: MassFunction, count: int, seed: int, tol: float = AU_TOL
) -> CheckReport:
    """T7：任何与 Bel 一致的分布，其熵不超过 measure(m)"""
    value = measure(m)
    samples = sample_consistent(m, seed, count)
    entropies = [shannon_entropy(p) for p in samples]
    worst = int(np.argmax(entropies)) if entropies else 0
    highest = entropies[worst] if entropies else 0.0
    witness = {
        "mass": m.to_dict(),
        "value": value,
        "sample_seed": seed,
        "sample_count": count,
        "sample_index": worst,
        "probability": list(samples[worst].p) if samples else [],
        "entropy": highest,
    }
    return _inequality(Requirement.T7, value - highest, witness, tol)


def shift_mass(m: MassFunction, i: SubsetMask, j: SubsetMask, x: float) -> MassFunction:
    """把 x 的质量从焦元 I 移到非空集合 J"""
    focal = dict(m.focal)
    focal[i] = focal[i] - x
    focal[j] = focal.get(j, 0.0) + x
    return MassFunction.from_dropping(m.frame, focal, 0.0)


def check_continuity(
    measure: Measure, m: MassFunction, i: SubsetMask, j: SubsetMask, mesh: float
) -> CheckReport:
    """R2：g(x) = measure(m 把 x 从 I 移到 J)，x 取 [0, m(I)] 上的网格点"""
    m.frame.validate_mask(j)
    if i not in m.focal:
        raise TransferError(f"{m.frame.format_set(i)} 不是焦元")
    if j == 0 or j == i:
        raise TransferError("J 必须非空且不同于 I")
    if mesh <= 0:
        raise ValueError(f"网格步长必须为正: {mesh!r}")
    source = m.focal[i]
    points = max(1, math.ceil(source / mesh))
    step = source / points
    values = []
    for k in range(points + 1):
        x = source if k == points else source * k / points
        values.append(measure(shift_mass(m, i, j, x)) if k else measure(m))
    diffs = np.abs(np.diff(values))
    worst = int(np.argmax(diffs))
    bound = continuity_bound(step)
    witness = {
        "mass": m.to_dict(),
        "from_set": m.frame.labels_of(i),
        "to_set": m.frame.labels_of(j),
        "mesh": step,
        "bound": bound,
        "at": source * worst / points,
        "max_difference": float(diffs[worst]),
    }
    return _inequality(Requirement.R2, bound - float(diffs[worst]), witness, 0.0, CONTINUITY_NOTE)
