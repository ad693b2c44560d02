"""
证据模块 - BPA、信任函数、Möbius 对应与变换
"""

from dsau.evidence.measures import nonspecificity, shannon_entropy
from dsau.evidence.mobius import (
    BeliefVerdict,
    belief_from_mass,
    is_belief_function,
    mass_from_belief,
    mobius_transform,
    zeta_transform,
)
from dsau.evidence.models import BeliefFunction, MassFunction, ProbabilityVector
from dsau.evidence.transforms import (
    bayesian,
    expand,
    permute,
    product_mass,
    project_belief,
    project_mass,
    relabel,
    transfer,
    vacuous,
)

__all__ = [
    "BeliefFunction",
    "BeliefVerdict",
    "MassFunction",
    "ProbabilityVector",
    "bayesian",
    "belief_from_mass",
    "expand",
    "is_belief_function",
    "mass_from_belief",
    "mobius_transform",
    "nonspecificity",
    "permute",
    "product_mass",
    "project_belief",
    "project_mass",
    "relabel",
    "shannon_entropy",
    "transfer",
    "vacuous",
    "zeta_transform",
]
