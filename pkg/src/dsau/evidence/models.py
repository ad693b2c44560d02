"""
证据数据模型

核心实体:
- MassFunction: 基本概率分配 m（稀疏：焦元掩码 -> 质量）
- BeliefFunction: 信任函数 Bel 的稠密 2^N 表
- ProbabilityVector: 框架元素上的概率分布
"""

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, Iterable, Iterator, Mapping, Sequence, Tuple

import numpy as np

from dsau.core.config import MASS_TOL, ROUND_TOL
from dsau.core.errors import InvalidMassError, InvalidProbabilityError
from dsau.frame.frame import Frame, SubsetMask


def _normalized(values: Sequence[float], total: float) -> Tuple[float, ...]:
    # 已归一（在舍入误差内）时保持原值，使文本往返不改变任何一位
    if abs(total - 1.0) <= ROUND_TOL:
        return tuple(float(v) for v in values)
    return tuple(float(v) / total for v in values)


@dataclass(frozen=True)
class MassFunction:
    """基本概率分配：m(∅)=0 以省略表示，质量均为正，总和为 1"""
    frame: Frame
    focal: Mapping[SubsetMask, float]

    def __post_init__(self):
        items = sorted(dict(self.focal).items())
        if not items:
            raise InvalidMassError("基本概率分配至少需要一个焦元")
        for mask, mass in items:
            if mask == 0:
                raise InvalidMassError("空集不能是焦元")
            self.frame.validate_mask(mask)
            if not math.isfinite(mass) or mass <= 0.0:
                raise InvalidMassError(
                    f"焦元 {self.frame.format_set(mask)} 的质量必须为正: {mass!r}"
                )
        total = math.fsum(mass for _, mass in items)
        if abs(total - 1.0) > MASS_TOL:
            raise InvalidMassError(f"质量之和为 {total:.12g}，偏离 1 超过 {MASS_TOL:g}")
        masses = _normalized([mass for _, mass in items], total)
        focal = {mask: mass for (mask, _), mass in zip(items, masses)}
        object.__setattr__(self, "focal", MappingProxyType(focal))

    @classmethod
    def from_labels(
        cls, frame: Frame, entries: Iterable[Tuple[Iterable[str], float]]
    ) -> "MassFunction":
        """由 (标签集合, 质量) 列表构造；重复集合的质量相加"""
        focal: Dict[SubsetMask, float] = {}
        for labels, mass in entries:
            mask = frame.mask_of(labels)
            focal[mask] = focal.get(mask, 0.0) + mass
        return cls(frame, focal)

    @classmethod
    def from_dropping(
        cls, frame: Frame, focal: Mapping[SubsetMask, float], tol: float = MASS_TOL
    ) -> "MassFunction":
        """丢弃不超过 tol 的质量后构造（焦元稀疏性是不变量）"""
        return cls(frame, {mask: mass for mask, mass in focal.items() if mass > tol})

    def mass(self, mask: SubsetMask) -> float:
        return self.focal.get(mask, 0.0)

    def items(self) -> Iterator[Tuple[SubsetMask, float]]:
        return iter(self.focal.items())

    def __len__(self) -> int:
        return len(self.focal)

    @property
    def size(self) -> int:
        return self.frame.size

    def is_bayesian(self) -> bool:
        return all(mask & (mask - 1) == 0 for mask in self.focal)

    def dense(self) -> np.ndarray:
        """长度 2^N 的质量表"""
        table = np.zeros(1 << self.frame.size, dtype=np.float64)
        for mask, mass in self.focal.items():
            table[mask] = mass
        return table

    def close_to(self, other: "MassFunction", tol: float = ROUND_TOL) -> bool:
        """按掩码逐个比较质量（忽略标签名，只要求框架规模相同）"""
        if self.frame.size != other.frame.size:
            return False
        masks = set(self.focal) | set(other.focal)
        return all(abs(self.mass(a) - other.mass(a)) <= tol for a in masks)

    def to_dict(self) -> Dict[str, Any]:
        """文档形式：框架标签与按掩码排序的焦元"""
        return {
            "frame": list(self.frame.labels),
            "focal": [
                {"set": self.frame.labels_of(mask), "mass": mass}
                for mask, mass in self.focal.items()
            ],
        }


@dataclass(frozen=True, eq=False)
class BeliefFunction:
    """信任函数的稠密表，values[A] = Bel(A)"""
    frame: Frame
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        expected = 1 << self.frame.size
        if values.shape != (expected,):
            raise InvalidMassError(f"信任函数表长度应为 {expected}，实际为 {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __getitem__(self, mask: SubsetMask) -> float:
        return float(self.values[self.frame.validate_mask(mask)])

    def is_monotone(self, tol: float = MASS_TOL) -> bool:
        """A ⊆ B ⇒ Bel(A) <= Bel(B)，只需检查添加单个元素的覆盖关系"""
        for i in range(self.frame.size):
            view = self.values.reshape(-1, 2, 1 << i)
            if np.any(view[:, 0, :] > view[:, 1, :] + tol):
                return False
        return True


@dataclass(frozen=True)
class ProbabilityVector:
    """概率分布 {p_x}，每个元素一个分量"""
    frame: Frame
    p: Tuple[float, ...]

    def __post_init__(self):
        p = tuple(float(v) for v in self.p)
        if len(p) != self.frame.size:
            raise InvalidProbabilityError(
                f"分量个数 {len(p)} 与框架规模 {self.frame.size} 不符"
            )
        for label, value in zip(self.frame.labels, p):
            if not math.isfinite(value) or value < -MASS_TOL or value > 1.0 + MASS_TOL:
                raise InvalidProbabilityError(f"p[{label}] = {value!r} 不在 [0, 1] 内")
        p = tuple(min(max(v, 0.0), 1.0) for v in p)
        total = math.fsum(p)
        if abs(total - 1.0) > MASS_TOL:
            raise InvalidProbabilityError(f"概率之和为 {total:.12g}，偏离 1 超过 {MASS_TOL:g}")
        object.__setattr__(self, "p", _normalized(p, total))

    @classmethod
    def uniform(cls, frame: Frame) -> "ProbabilityVector":
        return cls(frame, (1.0 / frame.size,) * frame.size)

    def as_array(self) -> np.ndarray:
        return np.array(self.p, dtype=np.float64)

    def __getitem__(self, index: int) -> float:
        return self.p[index]

    def __len__(self) -> int:
        return len(self.p)

    def as_dict(self) -> Dict[str, float]:
        return dict(zip(self.frame.labels, self.p))
