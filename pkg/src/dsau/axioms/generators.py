"""
随机用例生成器

所有生成器只从传入的 numpy Generator 取随机数；套件为每个
(种子, 组, 用例) 派生独立的 Generator，因此任何用例都能单独重放。
"""

from typing import List, Optional, Tuple

import numpy as np

from dsau.evidence.models import MassFunction, ProbabilityVector
from dsau.frame.frame import Frame, Partition, SubsetMask, product_structure
from dsau.utils.bits import bits_to_mask, mask_to_bits

# 生成算法改变时必须递增，报告中记录此版本
GENERATOR_VERSION = "bpa-gen/1"
MAX_FOCAL = 8


def case_rng(seed: int, group: int, case: int) -> np.random.Generator:
    return np.random.default_rng([seed, group, case])


def random_mass(frame: Frame, rng: np.random.Generator, max_focal: int = MAX_FOCAL) -> MassFunction:
    """焦元个数 k 在 [1, min(2^N − 1, max_focal)] 上均匀，k 个不同非空子集，质量服从平坦 Dirichlet"""
    subsets = (1 << frame.size) - 1
    k = int(rng.integers(1, min(subsets, max_focal) + 1))
    masks = rng.choice(subsets, size=k, replace=False) + 1
    masses = rng.dirichlet(np.ones(k))
    return MassFunction.from_dropping(
        frame, {int(a): float(w) for a, w in zip(masks, masses)}, 0.0
    )


def random_probability(frame: Frame, rng: np.random.Generator) -> ProbabilityVector:
    return ProbabilityVector(frame, tuple(float(v) for v in rng.dirichlet(np.ones(frame.size))))


def random_permutation(n: int, rng: np.random.Generator) -> List[int]:
    return [int(i) for i in rng.permutation(n)]


def random_superset(frame: Frame, a: SubsetMask, rng: np.random.Generator) -> SubsetMask:
    """A 的随机真超集（A 不能是整个框架）"""
    rest = mask_to_bits(frame.full_mask & ~a)
    chosen = int(rng.integers(1, 1 << len(rest)))
    return a | bits_to_mask(x for k, x in enumerate(rest) if (chosen >> k) & 1)


def random_transfer(
    frame: Frame, rng: np.random.Generator
) -> Tuple[MassFunction, SubsetMask, SubsetMask, float]:
    """(m, A, B, α)：A 为 m 的焦元，B 为 A 的真超集，α ∈ [0, 1)"""
    if frame.size < 2:
        raise ValueError("质量转移至少需要两个元素")
    while True:
        m = random_mass(frame, rng)
        movable = [a for a, _ in m.items() if a != frame.full_mask]
        if movable:
            break
    a = movable[int(rng.integers(len(movable)))]
    return m, a, random_superset(frame, a, rng), float(rng.uniform(0.0, 1.0))


def product_shapes(frame_size: int) -> List[Tuple[int, int]]:
    """2 <= P <= Q 且 P·Q <= max(4, frame_size) 的全部乘积形状"""
    limit = max(4, frame_size)
    return [(p, q) for p in range(2, limit + 1) for q in range(p, limit + 1) if p * q <= limit]


def random_product_frame(
    frame_size: int, rng: np.random.Generator
) -> Tuple[Frame, Partition, Partition]:
    shapes = product_shapes(frame_size)
    p, q = shapes[int(rng.integers(len(shapes)))]
    return product_structure(p, q)


def random_product_pair(
    frame_size: int, rng: np.random.Generator
) -> Tuple[MassFunction, MassFunction]:
    shapes = product_shapes(frame_size)
    p, q = shapes[int(rng.integers(len(shapes)))]
    return random_mass(Frame.of_size(p), rng), random_mass(Frame.of_size(q), rng)


def random_continuity_path(
    m: MassFunction, rng: np.random.Generator
) -> Optional[Tuple[SubsetMask, SubsetMask]]:
    """(I, J)：I 为焦元，J 为不同于 I 的任意非空子集；单元素框架上只有一个非空子集，返回 None"""
    if m.frame.size < 2:
        return None
    focal = [a for a, _ in m.items()]
    i = focal[int(rng.integers(len(focal)))]
    j = i
    while j == i:
        j = int(rng.integers(1, m.frame.full_mask + 1))
    return i, j
