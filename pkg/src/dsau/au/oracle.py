"""
AU 的独立验证 oracle

grid:   在概率单纯形上先粗格点、再逐级局部加密，直到步长 grid_step；
        可行性按当前步长放宽。只用于 N <= 4。
ascent: 以分配变量 α_A^x 为坐标（Dempster 的分配刻画），SLSQP 热启动，
        然后逐焦元注水（block water-filling）上升直到收敛；多起点取最大。
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import minimize
from scipy.special import xlogy

from dsau.core.config import OracleConfig, load_config
from dsau.core.errors import CapacityError, DsauError
from dsau.credal.credal import Allocation, sample_allocation
from dsau.evidence.mobius import belief_from_mass
from dsau.evidence.models import MassFunction
from dsau.utils.bits import mask_to_bits, membership_matrix

logger = logging.getLogger(__name__)

GRID_MAX_FRAME = 4
# 粗格点每个坐标的等分数
GRID_COARSE_DIVISIONS = 60
# 每一级局部窗口的半径（以新步长计）
GRID_WINDOW = 8
# 某一级窗口内没有可行点时窗口加倍的次数
GRID_WIDEN_ATTEMPTS = 2
ASCENT_GAIN_TOL = 1e-15

_LN2 = np.log(2.0)


@dataclass(frozen=True)
class OracleResult:
    """oracle 找到的近似最大熵及对应分布"""
    value: float
    point: Tuple[float, ...]
    mode: str


def _entropy_rows(points: np.ndarray) -> np.ndarray:
    return -xlogy(points, points).sum(axis=-1) / _LN2


# --- grid ---

@lru_cache(maxsize=None)
def _simplex_lattice(n: int, k: int) -> np.ndarray:
    """所有分母为 k 的 n 维概率格点"""
    bars = np.array(list(itertools.combinations(range(k + n - 1), n - 1)), dtype=np.int64)
    bars = bars.reshape(-1, n - 1)
    edges = np.hstack(
        [np.full((len(bars), 1), -1), bars, np.full((len(bars), 1), k + n - 1)]
    )
    return (np.diff(edges, axis=1) - 1).astype(np.float64) / k


@lru_cache(maxsize=None)
def _offsets(dims: int, radius: int) -> np.ndarray:
    return np.array(
        list(itertools.product(range(-radius, radius + 1), repeat=dims)), dtype=np.float64
    )


def _window(center: np.ndarray, step: float, radius: int) -> np.ndarray:
    n = center.size
    head = center[: n - 1] + step * _offsets(n - 1, radius)
    tail = 1.0 - head.sum(axis=1, keepdims=True)
    points = np.hstack([head, tail])
    keep = np.all(points >= -1e-12, axis=1)
    return np.clip(points[keep], 0.0, 1.0)


def _best_feasible(
    points: np.ndarray, member: np.ndarray, bel: np.ndarray, tol: float
) -> Optional[Tuple[float, np.ndarray]]:
    feasible = np.all(points @ member >= bel - tol, axis=1)
    if not np.any(feasible):
        return None
    candidates = points[feasible]
    values = _entropy_rows(candidates)
    best = int(np.argmax(values))
    return float(values[best]), candidates[best]


def grid_search(m: MassFunction, final_step: float) -> OracleResult:
    n = m.frame.size
    if n > GRID_MAX_FRAME:
        raise CapacityError(f"网格 oracle 只支持 N <= {GRID_MAX_FRAME}，当前 N = {n}")
    if n == 1:
        return OracleResult(0.0, (1.0,), "grid")
    bel = belief_from_mass(m).values
    member = membership_matrix(n)

    step = 1.0 / GRID_COARSE_DIVISIONS
    found = _best_feasible(_simplex_lattice(n, GRID_COARSE_DIVISIONS), member, bel, n * step / 2)
    if found is None:
        raise DsauError("网格 oracle 在粗格点上找不到可行点")
    value, center = found
    while step > final_step:
        new_step = max(step / 2, final_step)
        level = None
        radius = GRID_WINDOW
        for _ in range(GRID_WIDEN_ATTEMPTS + 1):
            level = _best_feasible(_window(center, new_step, radius), member, bel, n * new_step / 2)
            if level is not None:
                break
            radius *= 2
        if level is None:
            logger.warning("网格加密在步长 %.3g 处停止：窗口内无可行点", new_step)
            break
        value, center = level
        step = new_step
    return OracleResult(value, tuple(float(v) for v in center), "grid")


# --- ascent ---

class _AllocationProblem:
    """分配变量的线性结构：q = P·α，焦元约束 E·α = masses"""

    def __init__(self, m: MassFunction):
        self.n = m.frame.size
        self.focal = [a for a, _ in m.items()]
        self.masses = np.array([mass for _, mass in m.items()], dtype=np.float64)
        self.groups: List[np.ndarray] = []
        self.elements: List[int] = []
        for a, _ in m.items():
            start = len(self.elements)
            self.elements.extend(mask_to_bits(a))
            self.groups.append(np.arange(start, len(self.elements)))
        self.elements_arr = np.array(self.elements, dtype=np.int64)
        size = len(self.elements)
        self.P = np.zeros((self.n, size))
        self.P[self.elements_arr, np.arange(size)] = 1.0
        self.E = np.zeros((len(self.groups), size))
        for j, group in enumerate(self.groups):
            self.E[j, group] = 1.0
        self.free_dims = sum(len(g) - 1 for g in self.groups)

    def vector(self, alloc: Allocation) -> np.ndarray:
        alpha = np.zeros(len(self.elements))
        for a, group in zip(self.focal, self.groups):
            for var in group:
                alpha[var] = alloc.entries.get((a, self.elements[var]), 0.0)
        return alpha

    def entropy(self, alpha: np.ndarray) -> float:
        return float(_entropy_rows(self.P @ alpha))

    def repair(self, alpha: np.ndarray) -> np.ndarray:
        """裁剪为非负并把每个焦元的分配重新缩放到 m(A)"""
        alpha = np.clip(alpha, 0.0, None)
        for group, mass in zip(self.groups, self.masses):
            total = alpha[group].sum()
            alpha[group] = alpha[group] * (mass / total) if total > 0 else mass / len(group)
        return alpha

    def slsqp(self, alpha0: np.ndarray) -> np.ndarray:
        P, E, masses = self.P, self.E, self.masses

        def objective(alpha):
            q = P @ alpha
            return float(xlogy(q, q).sum() / _LN2)

        def gradient(alpha):
            q = np.maximum(P @ alpha, 1e-300)
            return P.T @ (np.log2(q) + 1.0 / _LN2)

        bounds = [(0.0, float(masses[j])) for j, g in enumerate(self.groups) for _ in g]
        result = minimize(
            objective,
            alpha0,
            jac=gradient,
            method="SLSQP",
            bounds=bounds,
            constraints=({"type": "eq", "fun": lambda a: E @ a - masses, "jac": lambda a: E},),
            options={"ftol": 1e-15, "maxiter": 500},
        )
        return self.repair(result.x)

    def water_fill(self, alpha: np.ndarray, max_sweeps: int) -> np.ndarray:
        """逐焦元求精确块最优：α_x = max(0, L − b_x)，Σ α_x = m(A)"""
        q = self.P @ alpha
        current = float(_entropy_rows(q))
        for _ in range(max_sweeps):
            for group, mass in zip(self.groups, self.masses):
                if len(group) == 1:
                    continue
                idx = self.elements_arr[group]
                base = q[idx] - alpha[group]
                sorted_base = np.sort(base)
                for t in range(1, len(group) + 1):
                    level = (mass + sorted_base[:t].sum()) / t
                    if t == len(group) or level <= sorted_base[t]:
                        break
                new = np.maximum(level - base, 0.0)
                new *= mass / new.sum()
                q[idx] = base + new
                alpha[group] = new
            updated = float(_entropy_rows(q))
            gain = updated - current
            current = updated
            if gain <= ASCENT_GAIN_TOL:
                break
        return alpha


def ascent_search(
    m: MassFunction, starts: int, seed, max_sweeps: int, workers: int = 1
) -> OracleResult:
    problem = _AllocationProblem(m)
    rng = np.random.default_rng(seed)
    initial = [problem.vector(sample_allocation(m, rng)) for _ in range(max(starts, 1))]

    def run(alpha0: np.ndarray) -> Tuple[float, np.ndarray]:
        alpha = alpha0.copy()
        if problem.free_dims > 0:
            alpha = problem.slsqp(alpha)
            alpha = problem.water_fill(alpha, max_sweeps)
        return problem.entropy(alpha), problem.P @ alpha

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, initial))
    else:
        results = [run(alpha0) for alpha0 in initial]
    # 按起点顺序取最大值，保证多线程下结果一致
    best_value, best_point = results[0]
    for value, point in results[1:]:
        if value > best_value:
            best_value, best_point = value, point
    return OracleResult(best_value, tuple(float(v) for v in best_point), "ascent")


def au_oracle(
    m: MassFunction,
    mode: str = "grid",
    *,
    seed=0,
    workers: int = 1,
    config: Optional[OracleConfig] = None,
) -> float:
    """用与贪心分解无关的方法近似 AU(m)"""
    return oracle_search(m, mode, seed=seed, workers=workers, config=config).value


def oracle_search(
    m: MassFunction,
    mode: str = "grid",
    *,
    seed=0,
    workers: int = 1,
    config: Optional[OracleConfig] = None,
) -> OracleResult:
    config = config or load_config().oracle
    if mode == "grid":
        return grid_search(m, config.grid_step)
    if mode == "ascent":
        return ascent_search(m, config.ascent_starts, seed, config.ascent_max_sweeps, workers)
    raise ValueError(f"未知 oracle 模式: {mode!r}")
