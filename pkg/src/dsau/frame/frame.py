"""
识别框架 - 子集代数、划分、乘积结构与集合投影

子集用整数位掩码表示，位 i 对应 labels[i]。
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from dsau.core.config import MAX_FRAME
from dsau.core.errors import (
    CapacityError,
    DuplicateLabelError,
    FrameError,
    FrameMismatchError,
    InvalidMaskError,
    PartitionError,
)
from dsau.utils.bits import mask_to_bits

SubsetMask = int


@dataclass(frozen=True)
class Frame:
    """有限识别框架，元素顺序在构造时固定"""
    labels: Tuple[str, ...]
    max_size: int = field(default=MAX_FRAME, compare=False, repr=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise CapacityError("识别框架至少需要一个元素")
        if len(labels) > self.max_size:
            raise CapacityError(f"框架规模 {len(labels)} 超过上限 {self.max_size}")
        seen = set()
        for label in labels:
            if not isinstance(label, str) or not label:
                raise FrameError(f"非法标签: {label!r}")
            if label in seen:
                raise DuplicateLabelError(f"标签重复: {label!r}")
            seen.add(label)

    @classmethod
    def of_size(cls, n: int, max_size: int = MAX_FRAME) -> "Frame":
        """标签为 1..n 的规范框架"""
        return cls(tuple(str(i) for i in range(1, n + 1)), max_size=max_size)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> SubsetMask:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def validate_mask(self, mask: SubsetMask) -> SubsetMask:
        if mask < 0 or mask & ~self.full_mask:
            raise InvalidMaskError(mask, self.size)
        return mask

    def mask_of(self, labels: Iterable[str]) -> SubsetMask:
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask: SubsetMask) -> List[str]:
        self.validate_mask(mask)
        return [self.labels[i] for i in mask_to_bits(mask)]

    def format_set(self, mask: SubsetMask) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"

    def with_label(self, label: str) -> "Frame":
        """追加一个元素（R3 扩张用）"""
        if label in self.labels:
            raise DuplicateLabelError(f"标签 {label!r} 已在框架中")
        return Frame(self.labels + (label,), max_size=self.max_size)


@dataclass(frozen=True)
class Partition:
    """框架的划分，块按给定顺序排列"""
    frame: Frame
    blocks: Tuple[SubsetMask, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        covered = 0
        for block in blocks:
            self.frame.validate_mask(block)
            if block == 0:
                raise PartitionError("划分的块不能为空")
            if covered & block:
                raise PartitionError(f"块 {self.frame.format_set(block)} 与其他块相交")
            covered |= block
        if covered != self.frame.full_mask:
            missing = self.frame.labels_of(self.frame.full_mask & ~covered)
            raise PartitionError(f"划分未覆盖元素: {missing}")

    @classmethod
    def from_labels(cls, frame: Frame, blocks: Sequence[Sequence[str]]) -> "Partition":
        try:
            return cls(frame, tuple(frame.mask_of(block) for block in blocks))
        except KeyError as e:
            raise PartitionError(f"未知标签: {e.args[0]!r}") from None

    @classmethod
    def singletons(cls, frame: Frame) -> "Partition":
        return cls(frame, tuple(1 << i for i in range(frame.size)))

    @classmethod
    def trivial(cls, frame: Frame) -> "Partition":
        return cls(frame, (frame.full_mask,))

    def __len__(self) -> int:
        return len(self.blocks)


def project_set(mask: SubsetMask, partition: Partition) -> SubsetMask:
    """A↓Y：与 A 相交的块组成的集合（块框架上的掩码）"""
    partition.frame.validate_mask(mask)
    projected = 0
    for i, block in enumerate(partition.blocks):
        if block & mask:
            projected |= 1 << i
    return projected


def _escape_member(label: str) -> str:
    return label.replace("\\", "\\\\").replace(",", "\\,")


def block_frame(partition: Partition) -> Frame:
    """以划分的块为元素的框架，块标签为成员标签排序后逗号连接

    成员标签中的反斜杠和逗号先转义，不同的块总得到不同的标签。
    """
    labels = tuple(
        ",".join(_escape_member(label) for label in sorted(partition.frame.labels_of(block)))
        for block in partition.blocks
    )
    return Frame(labels, max_size=partition.frame.max_size)


def product_structure(
    p: int,
    q: int,
    row_labels: Optional[Sequence[str]] = None,
    col_labels: Optional[Sequence[str]] = None,
    max_size: int = MAX_FRAME,
) -> Tuple[Frame, Partition, Partition]:
    """P·Q 元素框架及两个交叉划分 Y1（P 块）、Y2（Q 块），|A_i ∩ B_j| = 1

    元素 (i, j) 的下标为 i·Q + j。
    """
    if p < 1 or q < 1:
        raise CapacityError(f"乘积维度必须为正: P={p}, Q={q}")
    if p * q > max_size:
        raise CapacityError(f"乘积框架 {p}x{q} 超过上限 {max_size}")
    rows = list(row_labels) if row_labels is not None else [str(i) for i in range(1, p + 1)]
    cols = list(col_labels) if col_labels is not None else [str(j) for j in range(1, q + 1)]
    if len(rows) != p or len(cols) != q:
        raise FrameMismatchError("行/列标签个数与维度不符")
    frame = Frame(
        tuple(f"({r},{c})" for r in rows for c in cols),
        max_size=max_size,
    )
    row_block = (1 << q) - 1
    y1 = Partition(frame, tuple(row_block << (i * q) for i in range(p)))
    col_block = sum(1 << (i * q) for i in range(p))
    y2 = Partition(frame, tuple(col_block << j for j in range(q)))
    return frame, y1, y2
