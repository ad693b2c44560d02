"""
异常定义 - 每个异常携带 CLI 退出码
"""

from typing import Optional


class DsauError(Exception):
    """所有库异常的基类"""
    exit_code = 70


class InvariantViolationError(DsauError):
    """内部不变量被破坏（实现缺陷）"""
    exit_code = 70


# --- 识别框架 ---

class FrameError(DsauError):
    """识别框架相关错误"""
    exit_code = 65


class InvalidMaskError(FrameError):
    """子集掩码含有框架之外的位"""

    def __init__(self, mask: int, size: int):
        super().__init__(f"掩码 {mask:#x} 超出 {size} 元素框架")
        self.mask = mask
        self.size = size


class CapacityError(FrameError):
    """超出稠密表容量"""


class PartitionError(FrameError):
    """不是合法的划分"""


class DuplicateLabelError(FrameError):
    """标签重复"""


class FrameMismatchError(FrameError):
    """两个对象不在同一框架上"""


# --- 证据 ---

class EvidenceError(DsauError):
    """基本概率分配 / 信任函数相关错误"""
    exit_code = 65


class InvalidMassError(EvidenceError):
    """不满足基本概率分配约束"""


class InvalidProbabilityError(EvidenceError):
    """不是合法的概率分布"""


class NotBeliefFunctionError(EvidenceError):
    """Möbius 逆变换出现负系数"""

    def __init__(self, subset: int, coefficient: float, message: Optional[str] = None):
        super().__init__(
            message or f"不是信任函数: 子集 {subset:#x} 的 Möbius 系数为 {coefficient:.6g}"
        )
        self.subset = subset
        self.coefficient = coefficient


class TransferError(EvidenceError):
    """R6 质量转移参数非法"""


class RelabelError(EvidenceError):
    """重标记映射不是双射"""


# --- BPA 文档 ---

class BpaDocumentError(DsauError):
    """BPA 文档错误；path 为出错字段（如 focal[2].mass）或行列位置"""
    exit_code = 65

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class MalformedDocumentError(BpaDocumentError):
    """不是合法 JSON 或结构不符"""
    exit_code = 65


class UnknownLabelError(BpaDocumentError):
    """集合中出现框架之外的标签"""
    exit_code = 81


class DuplicateSetError(BpaDocumentError):
    """同一集合出现两次"""
    exit_code = 82


class EmptySetError(BpaDocumentError):
    """出现空集"""
    exit_code = 83


class NonPositiveMassError(BpaDocumentError):
    """质量不为正"""
    exit_code = 84


class MassSumError(BpaDocumentError):
    """质量之和偏离 1 超过容差"""
    exit_code = 85
