"""
公理测试套件单元测试 - 确定性、重放与分组选择
"""

import pytest

from dsau.axioms import (
    GENERATOR_VERSION,
    GROUPS,
    Requirement,
    run_case,
    run_suite,
    select_groups,
    zero_measure,
)
from dsau.storage import suite_to_json


@pytest.fixture
def suite_config(mock_config):
    return mock_config.suite


class TestSelection:
    """分组选择测试类"""

    def test_all(self):
        """测试 all 选择全部组"""
        assert select_groups(["all"]) == list(GROUPS)

    def test_by_requirement(self):
        """测试按要求编号选择"""
        assert [g.name for g in select_groups(["R7"])] == ["normalization-r7"]
        assert [g.name for g in select_groups(["C4"])] == ["range"]
        assert [g.name for g in select_groups(["T7", "R1"])] == ["symmetry", "minimality"]

    def test_unknown(self):
        """测试未知要求编号"""
        with pytest.raises(ValueError):
            select_groups(["R9"])

    def test_every_requirement_covered(self):
        """测试每个要求都至少属于一个组"""
        covered = {r for group in GROUPS for r in group.requirements}
        assert covered == set(Requirement)


class TestRunSuite:
    """套件运行测试类"""

    def test_au_passes(self, suite_config):
        """测试 AU 通过全部组"""
        result = run_suite(frame_size=3, samples=5, seed=7, config=suite_config)
        assert result.passed
        assert len(result.reports) == len(GROUPS)
        assert result.generator_version == GENERATOR_VERSION
        assert [r.failures for r in result.reports] == [0] * len(GROUPS)

    def test_case_counts(self, suite_config):
        """测试确定性组只运行一个用例"""
        result = run_suite(["R1", "R7"], frame_size=3, samples=4, seed=1, config=suite_config)
        cases = {r.witness["group"]: r.cases for r in result.reports}
        assert cases == {"symmetry": 4, "normalization-r7": 1}

    def test_byte_stable(self, suite_config):
        """测试相同参数得到逐字节相同的报告"""
        first = run_suite(frame_size=3, samples=3, seed=11, config=suite_config)
        second = run_suite(frame_size=3, samples=3, seed=11, config=suite_config)
        assert suite_to_json(first) == suite_to_json(second)

    def test_workers_do_not_change_report(self, suite_config):
        """测试多线程运行的报告与单线程相同"""
        single = run_suite(frame_size=3, samples=3, seed=2, workers=1, config=suite_config)
        threaded = run_suite(frame_size=3, samples=3, seed=2, workers=4, config=suite_config)
        assert suite_to_json(single) == suite_to_json(threaded)

    def test_subset_matches_full_run(self, suite_config):
        """测试只运行部分组时结果与完整运行中的对应组相同"""
        full = run_suite(frame_size=3, samples=3, seed=5, config=suite_config)
        only = run_suite(["R4"], frame_size=3, samples=3, seed=5, config=suite_config)
        subadditivity = [r for r in full.reports if r.requirement == Requirement.R4]
        assert only.reports[0].to_dict() == subadditivity[0].to_dict()

    def test_zero_measure_fails(self, suite_config):
        """测试恒零度量违反归一化、Shannon 退化与最小性"""
        result = run_suite(
            frame_size=3,
            samples=3,
            seed=0,
            measure=zero_measure,
            measure_name="zero",
            config=suite_config,
        )
        failed = {r.witness["group"] for r in result.failed}
        assert {"normalization-r7", "normalization-r8", "shannon", "minimality"} <= failed
        assert "symmetry" not in failed
        assert result.measure == "zero"

    @pytest.mark.parametrize(
        "kwargs", [{"frame_size": 1}, {"samples": 0}, {"seed": -1}]
    )
    def test_invalid_arguments(self, kwargs, suite_config):
        """测试非法参数"""
        with pytest.raises(ValueError):
            run_suite(config=suite_config, **kwargs)


class TestReplay:
    """见证重放测试类"""

    def test_witness_replays(self, suite_config):
        """测试按见证中的 (组, 种子, 用例) 重放得到相同报告"""
        result = run_suite(frame_size=3, samples=4, seed=9, config=suite_config)
        for report in result.reports:
            w = report.witness
            replay = run_case(w["group"], w["seed"], w["case"], w["frame_size"], config=suite_config)
            assert replay.margin == report.margin
            assert replay.witness == report.witness

    def test_witness_fields(self, suite_config):
        """测试见证包含重放所需的字段"""
        report = run_case("additivity", 3, 0, 4, config=suite_config)
        for key in ("group", "seed", "case", "frame_size", "generator_version"):
            assert key in report.witness
        assert report.witness["group"] == "additivity"

    def test_unknown_group(self, suite_config):
        """测试未知组名"""
        with pytest.raises(ValueError):
            run_case("nonexistent", 0, 0, 3, config=suite_config)
