"""
dsau - Dempster-Shafer 理论中的总不确定性度量 AU

AU(Bel) 是与信任函数一致的所有概率分布上 Shannon 熵的最大值。提供：
- 识别框架、基本概率分配与信任函数（Möbius 对应、投影、乘积）
- 可信集：支配检查、最大流构造分配、一致分布采样
- AU 的精确计算与两个独立 oracle
- 参数化于度量的公理检查与随机化测试套件
"""

__version__ = "0.1.0"
__author__ = "AI-Claw Team"

from dsau.au import AUResult, au, au_oracle, au_value
from dsau.core.config import Config, load_config
from dsau.evidence import BeliefFunction, MassFunction, ProbabilityVector
from dsau.frame import Frame, Partition

__all__ = [
    "AUResult",
    "BeliefFunction",
    "Config",
    "Frame",
    "MassFunction",
    "Partition",
    "ProbabilityVector",
    "au",
    "au_oracle",
    "au_value",
    "load_config",
    "__version__",
]
