"""
候选度量注册表 - 套件可以针对任意一个命名度量运行
"""

from typing import Callable, Dict

from dsau.au.measure import au_value
from dsau.evidence.measures import nonspecificity
from dsau.evidence.models import MassFunction

Measure = Callable[[MassFunction], float]


def zero_measure(m: MassFunction) -> float:
    """恒为 0 的反例度量：满足 R1–R6，违反 R7、R8 与 T7"""
    return 0.0


MEASURES: Dict[str, Measure] = {
    "au": au_value,
    "nonspecificity": nonspecificity,
    "zero": zero_measure,
}


def get_measure(name: str) -> Measure:
    try:
        return MEASURES[name]
    except KeyError:
        raise ValueError(f"未知度量: {name!r}，可选: {', '.join(sorted(MEASURES))}") from None
