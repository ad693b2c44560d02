"""
信任函数的可信集 - 支配关系检查、分配构造与一致分布采样

分配 α_A^x 把每个焦元的质量拆给其元素；p 支配 Bel 当且仅当存在分配
使 p_x = Σ_{A∋x} α_A^x。可行性判定化为二部网络上的最大流。
"""

import logging
import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Tuple

import networkx as nx
import numpy as np

from dsau.core.config import CONS_TOL, MASS_TOL
from dsau.core.errors import FrameMismatchError, InvalidMassError, InvariantViolationError
from dsau.evidence.mobius import zeta_transform
from dsau.evidence.models import BeliefFunction, MassFunction, ProbabilityVector
from dsau.frame.frame import Frame, SubsetMask
from dsau.utils.bits import mask_to_bits

logger = logging.getLogger(__name__)

# 最大流在整数容量上精确求解：容量 = round(值 · FLOW_SCALE)
FLOW_SCALE = 1 << 40

_SOURCE = "source"
_SINK = "sink"
_SLACK = "slack"


def _require_same_frame(a: Frame, b: Frame) -> None:
    if a != b:
        raise FrameMismatchError(f"框架不同: {list(a.labels)} 与 {list(b.labels)}")


@dataclass(frozen=True)
class ConsistencyVerdict:
    """支配检查结果；witness 为松弛量最小的子集"""
    consistent: bool
    witness: SubsetMask
    slack: float

    def __bool__(self) -> bool:
        return self.consistent


def is_consistent(
    p: ProbabilityVector, bel: BeliefFunction, tol: float = CONS_TOL
) -> ConsistencyVerdict:
    """对全部 2^N 个子集检查 Bel(A) <= Σ_{x∈A} p_x"""
    _require_same_frame(p.frame, bel.frame)
    table = np.zeros(1 << p.frame.size, dtype=np.float64)
    table[[1 << i for i in range(p.frame.size)]] = p.as_array()
    slack = zeta_transform(table) - bel.values
    worst = int(np.argmin(slack))
    return ConsistencyVerdict(bool(slack[worst] >= -tol), worst, float(slack[worst]))


@dataclass(frozen=True)
class Allocation:
    """α_A^x：键 (A, x) 满足 x ∈ A，值非负"""
    frame: Frame
    entries: Mapping[Tuple[SubsetMask, int], float]

    def __post_init__(self):
        entries = dict(sorted(self.entries.items()))
        for (a, x), value in entries.items():
            self.frame.validate_mask(a)
            if a == 0 or not (a >> x) & 1:
                raise InvalidMassError(f"分配键 ({a:#x}, {x}) 要求 x ∈ A 且 A ≠ ∅")
            if not math.isfinite(value) or value < -MASS_TOL:
                raise InvalidMassError(f"分配值 α[{a:#x}][{x}] = {value!r} 为负")
        object.__setattr__(
            self, "entries", MappingProxyType({k: max(v, 0.0) for k, v in entries.items()})
        )

    def for_set(self, a: SubsetMask) -> Dict[int, float]:
        return {x: v for (mask, x), v in self.entries.items() if mask == a}


def allocation_marginals(alloc: Allocation) -> Tuple[ProbabilityVector, MassFunction]:
    """p_x = Σ_{A∋x} α_A^x，m(A) = Σ_{x∈A} α_A^x"""
    p = [0.0] * alloc.frame.size
    masses: Dict[SubsetMask, float] = {}
    for (a, x), value in alloc.entries.items():
        p[x] += value
        masses[a] = masses.get(a, 0.0) + value
    return (
        ProbabilityVector(alloc.frame, tuple(p)),
        MassFunction.from_dropping(alloc.frame, masses, 0.0),
    )


def _flow_network(m: MassFunction, p: ProbabilityVector, slack_capacity: int) -> nx.DiGraph:
    """源 → 焦元 A（容量 m(A)）→ x∈A（无容量）→ 汇（容量 p_x）

    slack_capacity > 0 时另设松弛节点：A → slack（无容量）→ 汇，使满流条件
    恰为 Bel(U) <= p(U) + tol 对所有 U 成立。
    """
    graph = nx.DiGraph()
    if slack_capacity > 0:
        graph.add_edge(_SLACK, _SINK, capacity=slack_capacity)
    for i, value in enumerate(p.p):
        graph.add_edge(("element", i), _SINK, capacity=round(value * FLOW_SCALE))
    for a, mass in m.items():
        node = ("focal", a)
        graph.add_edge(_SOURCE, node, capacity=round(mass * FLOW_SCALE))
        if slack_capacity > 0:
            graph.add_edge(node, _SLACK)
        for x in mask_to_bits(a):
            graph.add_edge(node, ("element", x))
    return graph


def _solve_flow(m: MassFunction, p: ProbabilityVector, slack_capacity: int):
    graph = _flow_network(m, p, slack_capacity)
    required = sum(data["capacity"] for _, _, data in graph.out_edges(_SOURCE, data=True))
    value, flow = nx.maximum_flow(graph, _SOURCE, _SINK)
    return graph, flow, required - value


def build_allocation(
    m: MassFunction, p: ProbabilityVector, tol: float = CONS_TOL
) -> Optional[Allocation]:
    """p 支配 Bel(m) 时返回一个分配，否则返回 None

    先在不含松弛节点的网络上求最大流。缺口 d 不超过 tol 时，再以容量 d 的
    松弛节点求一次，松弛流量因此不超过实际缺口。
    """
    _require_same_frame(m.frame, p.frame)
    graph, flow, shortfall = _solve_flow(m, p, 0)
    if shortfall > 0:
        if shortfall > round(tol * FLOW_SCALE):
            logger.debug("分配不可行: 最大流缺口 %d", shortfall)
            return None
        graph, flow, missing = _solve_flow(m, p, shortfall)
        if missing > 0:
            raise InvariantViolationError(f"松弛容量 {shortfall} 下仍缺 {missing} 单位流量")
        logger.debug("分配用到松弛流量 %d", flow[_SLACK][_SINK])
    spare = {
        x: graph[("element", x)][_SINK]["capacity"] - flow[("element", x)][_SINK]
        for x in range(m.frame.size)
    }
    units: Dict[Tuple[SubsetMask, int], int] = {}
    for a, _ in m.items():
        node_flow = flow[("focal", a)]
        members = mask_to_bits(a)
        for x in members:
            units[(a, x)] = node_flow.get(("element", x), 0)
        # 松弛流量先填 p_x 尚未用满的元素，余下归到 A 的首个元素
        leftover = node_flow.get(_SLACK, 0)
        for x in members:
            if leftover == 0:
                break
            take = min(leftover, spare[x])
            units[(a, x)] += take
            spare[x] -= take
            leftover -= take
        units[(a, members[0])] += leftover
    return Allocation(m.frame, {key: value / FLOW_SCALE for key, value in units.items()})


def sample_allocation(m: MassFunction, rng: np.random.Generator) -> Allocation:
    """每个焦元的质量按平坦 Dirichlet 权重拆给其元素"""
    entries: Dict[Tuple[SubsetMask, int], float] = {}
    for a, mass in m.items():
        members = mask_to_bits(a)
        weights = rng.dirichlet(np.ones(len(members))) if len(members) > 1 else np.ones(1)
        for x, w in zip(members, weights):
            entries[(a, x)] = mass * float(w)
    return Allocation(m.frame, entries)


def sample_consistent(m: MassFunction, seed, count: int) -> List[ProbabilityVector]:
    """按种子确定性地抽取 count 个支配 Bel(m) 的分布"""
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(count):
        p, _ = allocation_marginals(sample_allocation(m, rng))
        samples.append(p)
    return samples
