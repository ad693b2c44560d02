"""
公理检查的数据模型

核心实体:
- Requirement: 要求编号（R1…R8 与定理 T1/T2/T3/C4/T7）
- CheckReport: 单项检查结果（裁决、余量、最差情形的见证）
- SuiteResult: 一次套件运行的全部报告
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List


class Requirement(Enum):
    """可执行的要求与定理"""
    R1 = "R1"   # 对称性
    R2 = "R2"   # 连续性
    R3 = "R3"   # 可扩张性
    R4 = "R4"   # 次可加性
    R5 = "R5"   # 可加性
    R6 = "R6"   # 单调可弃性
    R7 = "R7"   # U(½, ½, 0) = 1
    R8 = "R8"   # U(0, 0, 1) = 1
    T1 = "T1"   # 非负
    T2 = "T2"   # 退化为 Shannon 熵
    T3 = "T3"   # 退化为 Hartley 度量
    C4 = "C4"   # 上界 log₂ N
    T7 = "T7"   # 最小性：任何一致分布的熵不超过 U(m)


class Verdict(Enum):
    """检查裁决"""
    PASS = "pass"
    FAIL = "fail"


@dataclass
class CheckReport:
    """单项检查结果

    margin 为带符号余量：非负即通过。等式检查的余量为 −|差值|，
    此时通过意味着差值不超过容差。
    """
    requirement: Requirement
    verdict: Verdict
    margin: float
    witness: Dict[str, Any] = field(default_factory=dict)
    note: str = ""
    cases: int = 1
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "requirement": self.requirement.value,
            "verdict": self.verdict.value,
            "margin": self.margin,
            "cases": self.cases,
            "failures": self.failures,
            "note": self.note,
            "witness": self.witness,
        }


@dataclass
class SuiteResult:
    """一次套件运行：参数与按固定组顺序排列的报告"""
    seed: int
    generator_version: str
    measure: str
    frame_size: int
    samples: int
    reports: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    @property
    def failed(self) -> List[CheckReport]:
        return [report for report in self.reports if not report.passed]
