"""
AU 模块 - 总不确定性的精确计算与独立 oracle
"""

from dsau.au.measure import AUResult, GreedyStep, au, au_value
from dsau.au.oracle import OracleResult, au_oracle, oracle_search

__all__ = [
    "AUResult",
    "GreedyStep",
    "OracleResult",
    "au",
    "au_oracle",
    "au_value",
    "oracle_search",
]
