"""
公理测试套件 - 按要求分组的随机化检查

每组对 samples 个随机用例运行同一个检查，保留余量最差的报告并记录
用例数与失败数。用例 k 的随机源只由 (seed, 组序号, k) 决定，所以
并行执行、只选部分组或单独重放都得到相同的结果。
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from dsau.au.measure import au_value
from dsau.axioms.checks import (
    check_additivity,
    check_collapse,
    check_continuity,
    check_expansibility,
    check_minimality,
    check_monotone_dispensability,
    check_normalization,
    check_range,
    check_subadditivity,
    check_symmetry,
)
from dsau.axioms.generators import (
    GENERATOR_VERSION,
    case_rng,
    random_continuity_path,
    random_mass,
    random_permutation,
    random_probability,
    random_product_frame,
    random_product_pair,
    random_transfer,
)
from dsau.axioms.measures import Measure
from dsau.axioms.models import CheckReport, Requirement, SuiteResult
from dsau.core.config import SuiteConfig, load_config
from dsau.frame.frame import Frame
from dsau.utils.bits import bits_to_mask

logger = logging.getLogger(__name__)

CaseRunner = Callable[[Measure, np.random.Generator, int, SuiteConfig], CheckReport]


@dataclass(frozen=True)
class SuiteGroup:
    """一组检查：名称、覆盖的要求、单个用例的执行函数"""
    name: str
    requirements: Tuple[Requirement, ...]
    run_case: CaseRunner
    deterministic: bool = False


def _symmetry(measure, rng, n, settings):
    m = random_mass(Frame.of_size(n), rng)
    return check_symmetry(measure, m, random_permutation(n, rng))


def _continuity(measure, rng, n, settings):
    m = random_mass(Frame.of_size(n), rng)
    path = random_continuity_path(m, rng)
    assert path is not None
    i, j = path
    return check_continuity(measure, m, i, j, settings.continuity_mesh)


def _expansibility(measure, rng, n, settings):
    return check_expansibility(measure, random_mass(Frame.of_size(n), rng))


def _subadditivity(measure, rng, n, settings):
    frame, y1, y2 = random_product_frame(n, rng)
    return check_subadditivity(measure, random_mass(frame, rng), y1, y2)


def _additivity(measure, rng, n, settings):
    m1, m2 = random_product_pair(n, rng)
    return check_additivity(measure, m1, m2)


def _dispensability(measure, rng, n, settings):
    m, a, b, alpha = random_transfer(Frame.of_size(n), rng)
    return check_monotone_dispensability(measure, m, a, b, alpha)


def _r7(measure, rng, n, settings):
    return check_normalization(measure, Requirement.R7)


def _r8(measure, rng, n, settings):
    return check_normalization(measure, Requirement.R8)


def _range(measure, rng, n, settings):
    return check_range(measure, random_mass(Frame.of_size(n), rng))


def _shannon(measure, rng, n, settings):
    return check_collapse(measure, random_probability(Frame.of_size(n), rng))


def _hartley(measure, rng, n, settings):
    size = int(rng.integers(1, n + 1))
    subset = bits_to_mask(int(x) for x in rng.choice(n, size=size, replace=False))
    return check_collapse(measure, (Frame.of_size(n), subset))


def _minimality(measure, rng, n, settings):
    m = random_mass(Frame.of_size(n), rng)
    seed = int(rng.integers(1 << 32))
    return check_minimality(measure, m, settings.consistent_draws, seed)


# 顺序固定：组序号参与随机源派生
GROUPS: Tuple[SuiteGroup, ...] = (
    SuiteGroup("symmetry", (Requirement.R1,), _symmetry),
    SuiteGroup("continuity", (Requirement.R2,), _continuity),
    SuiteGroup("expansibility", (Requirement.R3,), _expansibility),
    SuiteGroup("subadditivity", (Requirement.R4,), _subadditivity),
    SuiteGroup("additivity", (Requirement.R5,), _additivity),
    SuiteGroup("dispensability", (Requirement.R6,), _dispensability),
    SuiteGroup("normalization-r7", (Requirement.R7,), _r7, deterministic=True),
    SuiteGroup("normalization-r8", (Requirement.R8,), _r8, deterministic=True),
    SuiteGroup("range", (Requirement.T1, Requirement.C4), _range),
    SuiteGroup("shannon", (Requirement.T2,), _shannon),
    SuiteGroup("hartley", (Requirement.T3,), _hartley),
    SuiteGroup("minimality", (Requirement.T7,), _minimality),
)

SUITE_CHOICES = ["all"] + [requirement.value for requirement in Requirement]


def select_groups(names: Sequence[str]) -> List[SuiteGroup]:
    """按要求编号选组；"all" 选择全部"""
    if "all" in names:
        return list(GROUPS)
    try:
        wanted = {Requirement(name) for name in names}
    except ValueError:
        raise ValueError(f"未知要求: {list(names)}，可选: {', '.join(SUITE_CHOICES)}") from None
    return [group for group in GROUPS if wanted & set(group.requirements)]


def _group_index(name: str) -> int:
    for index, group in enumerate(GROUPS):
        if group.name == name:
            return index
    raise ValueError(f"未知检查组: {name!r}")


def run_case(
    group_name: str,
    seed: int,
    case: int,
    frame_size: int,
    measure: Measure = au_value,
    config: Optional[SuiteConfig] = None,
) -> CheckReport:
    """单独执行（或按见证重放）一个用例"""
    config = config or load_config().suite
    index = _group_index(group_name)
    group = GROUPS[index]
    report = group.run_case(measure, case_rng(seed, index, case), frame_size, config)
    report.witness = {
        "group": group.name,
        "seed": seed,
        "case": case,
        "frame_size": frame_size,
        "generator_version": GENERATOR_VERSION,
        **report.witness,
    }
    return report


def run_group(
    group: SuiteGroup,
    frame_size: int,
    samples: int,
    seed: int,
    measure: Measure,
    config: SuiteConfig,
) -> CheckReport:
    cases = 1 if group.deterministic else samples
    worst: Optional[CheckReport] = None
    failures = 0
    for case in range(cases):
        report = run_case(group.name, seed, case, frame_size, measure, config)
        if not report.passed:
            failures += 1
        if worst is None or report.margin < worst.margin:
            worst = report
    assert worst is not None
    worst.cases = cases
    worst.failures = failures
    logger.info(
        "%s: %d 个用例，%d 个失败，最差余量 %.3g", group.name, cases, failures, worst.margin
    )
    return worst


def run_suite(
    suite: Sequence[str] = ("all",),
    frame_size: int = 4,
    samples: int = 200,
    seed: int = 0,
    measure: Measure = au_value,
    measure_name: str = "au",
    workers: int = 1,
    config: Optional[SuiteConfig] = None,
) -> SuiteResult:
    """运行所选的组，报告按组的固定顺序排列"""
    if frame_size < 2:
        raise ValueError(f"框架规模至少为 2，当前为 {frame_size}")
    if samples < 1:
        raise ValueError(f"用例数至少为 1，当前为 {samples}")
    if seed < 0:
        raise ValueError(f"种子必须非负，当前为 {seed}")
    config = config or load_config().suite
    groups = select_groups(suite)

    def run(group: SuiteGroup) -> CheckReport:
        return run_group(group, frame_size, samples, seed, measure, config)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, groups))
    else:
        reports = [run(group) for group in groups]
    return SuiteResult(
        seed=seed,
        generator_version=GENERATOR_VERSION,
        measure=measure_name,
        frame_size=frame_size,
        samples=samples,
        reports=reports,
    )
