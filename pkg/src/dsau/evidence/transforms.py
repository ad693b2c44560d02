"""
证据变换 - 投影、重标记、扩张、R6 质量转移、R5 乘积构造
"""

import logging
from typing import Dict, Mapping, Optional, Sequence

from dsau.core.config import MASS_TOL
from dsau.core.errors import (
    DuplicateLabelError,
    FrameMismatchError,
    InvalidMassError,
    RelabelError,
    TransferError,
)
from dsau.evidence.models import BeliefFunction, MassFunction, ProbabilityVector
from dsau.frame.frame import Frame, Partition, SubsetMask, block_frame, product_structure, project_set
from dsau.utils.bits import mask_to_bits, union_table

logger = logging.getLogger(__name__)


def _require_same_frame(frame: Frame, partition: Partition) -> None:
    if frame != partition.frame:
        raise FrameMismatchError(
            f"划分所在框架 {list(partition.frame.labels)} 与证据框架 {list(frame.labels)} 不同"
        )


def project_mass(m: MassFunction, partition: Partition) -> MassFunction:
    """m↓Y(C) = Σ{m(B) : B↓Y = C}"""
    _require_same_frame(m.frame, partition)
    projected: Dict[SubsetMask, float] = {}
    for mask, mass in m.items():
        c = project_set(mask, partition)
        projected[c] = projected.get(c, 0.0) + mass
    return MassFunction(block_frame(partition), projected)


def project_belief(bel: BeliefFunction, partition: Partition) -> BeliefFunction:
    """Bel↓Y(C) = Bel(∪C)"""
    _require_same_frame(bel.frame, partition)
    unions = union_table(partition.blocks)
    return BeliefFunction(block_frame(partition), bel.values[unions])


def _map_mask(mask: SubsetMask, index_map: Sequence[int]) -> SubsetMask:
    out = 0
    for i in mask_to_bits(mask):
        out |= 1 << index_map[i]
    return out


def relabel(
    m: MassFunction, mapping: Mapping[str, str], target: Optional[Frame] = None
) -> MassFunction:
    """π(m)(B) = m(π⁻¹(B))

    target 缺省时新框架按原顺序使用像标签（掩码不变）；给定 target 时
    按 target 的元素顺序重新排位。
    """
    source = m.frame
    if set(mapping) != set(source.labels):
        raise RelabelError("映射的定义域必须恰好是原框架的全部标签")
    images = [mapping[label] for label in source.labels]
    if len(set(images)) != len(images):
        raise RelabelError("映射不是单射")
    if target is None:
        target = Frame(tuple(images), max_size=source.max_size)
    if target.size != source.size or set(target.labels) != set(images):
        raise RelabelError("映射的像必须恰好是目标框架的全部标签")
    index_map = [target.index(label) for label in images]
    return MassFunction(target, {_map_mask(mask, index_map): mass for mask, mass in m.items()})


def permute(m: MassFunction, perm: Sequence[int]) -> MassFunction:
    """同一框架上的元素置换：元素 i 移到位置 perm[i]（R1′ 形式）"""
    n = m.frame.size
    if sorted(perm) != list(range(n)):
        raise RelabelError(f"{list(perm)} 不是 0..{n - 1} 的置换")
    return MassFunction(m.frame, {_map_mask(mask, perm): mass for mask, mass in m.items()})


def expand(m: MassFunction, new_label: str) -> MassFunction:
    """R3：向框架添加一个不属于任何焦元的新元素"""
    if new_label in m.frame.labels:
        raise DuplicateLabelError(f"标签 {new_label!r} 已在框架中")
    return MassFunction(m.frame.with_label(new_label), dict(m.focal))


def transfer(m: MassFunction, a: SubsetMask, b: SubsetMask, alpha: float) -> MassFunction:
    """R6：m'(A) = α·m(A)，m'(B) = m(B) + (1-α)·m(A)，其余不变"""
    m.frame.validate_mask(a)
    m.frame.validate_mask(b)
    if a not in m.focal:
        raise TransferError(f"{m.frame.format_set(a)} 不是焦元")
    if a & ~b or a == b:
        raise TransferError(
            f"{m.frame.format_set(b)} 不是 {m.frame.format_set(a)} 的真超集"
        )
    if not 0.0 <= alpha <= 1.0:
        raise TransferError(f"α = {alpha!r} 不在 [0, 1] 内")
    focal = dict(m.focal)
    moved = (1.0 - alpha) * focal[a]
    focal[a] = alpha * focal[a]
    focal[b] = focal.get(b, 0.0) + moved
    return MassFunction.from_dropping(m.frame, focal, MASS_TOL)


def product_mass(m1: MassFunction, m2: MassFunction, max_size: Optional[int] = None) -> MassFunction:
    """R5 的无交互乘积：焦元为矩形 B1 × B2，质量为 m1(B1)·m2(B2)"""
    p, q = m1.frame.size, m2.frame.size
    frame, _, _ = product_structure(
        p,
        q,
        row_labels=m1.frame.labels,
        col_labels=m2.frame.labels,
        max_size=max_size if max_size is not None else m1.frame.max_size,
    )
    focal: Dict[SubsetMask, float] = {}
    for b1, w1 in m1.items():
        rows = mask_to_bits(b1)
        for b2, w2 in m2.items():
            rect = 0
            for i in rows:
                rect |= b2 << (i * q)
            focal[rect] = w1 * w2
    logger.debug("乘积 BPA: %d x %d 焦元 -> %d", len(m1), len(m2), len(focal))
    return MassFunction(frame, focal)


def vacuous(frame: Frame, a: Optional[SubsetMask] = None) -> MassFunction:
    """m(A) = 1；A 缺省为整个框架"""
    a = frame.full_mask if a is None else frame.validate_mask(a)
    if a == 0:
        raise InvalidMassError("空集上不能构造空信任函数")
    return MassFunction(frame, {a: 1.0})


def bayesian(p: ProbabilityVector) -> MassFunction:
    """单点焦元 {x} 的质量为 p_x，零分量省略"""
    return MassFunction(p.frame, {1 << i: v for i, v in enumerate(p.p) if v > 0.0})
