"""
公理模块 - 可执行的要求检查与随机化测试套件
"""

from dsau.axioms.checks import (
    CONTINUITY_NOTE,
    check_additivity,
    check_collapse,
    check_continuity,
    check_expansibility,
    check_minimality,
    check_monotone_dispensability,
    check_normalization,
    check_normalizations,
    check_range,
    check_subadditivity,
    check_symmetry,
    continuity_bound,
    shift_mass,
)
from dsau.axioms.generators import GENERATOR_VERSION, random_mass
from dsau.axioms.measures import MEASURES, Measure, get_measure, zero_measure
from dsau.axioms.models import CheckReport, Requirement, SuiteResult, Verdict
from dsau.axioms.suite import GROUPS, SUITE_CHOICES, SuiteGroup, run_case, run_suite, select_groups

__all__ = [
    "CONTINUITY_NOTE",
    "CheckReport",
    "GENERATOR_VERSION",
    "GROUPS",
    "MEASURES",
    "Measure",
    "Requirement",
    "SUITE_CHOICES",
    "SuiteGroup",
    "SuiteResult",
    "Verdict",
    "check_additivity",
    "check_collapse",
    "check_continuity",
    "check_expansibility",
    "check_minimality",
    "check_monotone_dispensability",
    "check_normalization",
    "check_normalizations",
    "check_range",
    "check_subadditivity",
    "check_symmetry",
    "continuity_bound",
    "shift_mass",
    "get_measure",
    "random_mass",
    "run_case",
    "run_suite",
    "select_groups",
    "zero_measure",
]
