"""
子集掩码工具 - 位 i 对应框架第 i 个元素
"""

from functools import reduce
from typing import Iterable, List, Sequence

import numpy as np


def popcount(mask: int) -> int:
    """集合基数 |A|"""
    return bin(mask).count("1")


def bits_to_mask(bits: Iterable[int]) -> int:
    return reduce(lambda acc, b: acc | (1 << b), bits, 0)


def mask_to_bits(mask: int) -> List[int]:
    """按升序返回置位的下标"""
    bits = []
    i = 0
    while mask:
        if mask & 1:
            bits.append(i)
        mask >>= 1
        i += 1
    return bits


def popcount_table(n: int) -> np.ndarray:
    """长度 2^n 的基数表"""
    table = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        bit = 1 << i
        view = table.reshape(-1, 2, bit)
        view[:, 1, :] += 1
    return table


def union_table(blocks: Sequence[int]) -> np.ndarray:
    """对每个块集合掩码 C（长度 2^k），给出 C 中各块的并集"""
    unions = np.zeros(1, dtype=np.int64)
    for block in blocks:
        unions = np.concatenate([unions, unions | block])
    return unions


def membership_matrix(n: int) -> np.ndarray:
    """n x 2^n 的 0/1 矩阵，[x, A] = 1 当且仅当 x ∈ A"""
    masks = np.arange(1 << n, dtype=np.int64)
    return ((masks[None, :] >> np.arange(n, dtype=np.int64)[:, None]) & 1).astype(np.float64)
