"""
命令行单元测试 - 输出格式与退出码
"""

import json

import pytest

from dsau import __version__
from dsau.cli import main, parse_blocks
from dsau.core.config import ASCENT_TOL, GRID_TOL
from dsau.core.errors import UnknownLabelError
from dsau.evidence import vacuous
from dsau.frame import Frame
from dsau.storage import emit_bpa, load_bpa, parse_bpa
from tests.conftest import GOLDEN

R1 = str(GOLDEN / "r1_example.json")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in (
        "AU_CI",
        "AU_SEED",
        "AU_SAMPLES",
        "AU_WORKERS",
        "AU_CONTINUITY_MESH",
        "AU_CONSISTENT_DRAWS",
        "AU_MAX_FRAME",
    ):
        monkeypatch.delenv(name, raising=False)


class TestCompute:
    """compute 命令测试类"""

    def test_golden(self, capsys):
        """测试 R1 例子输出 1.000000000000"""
        assert main(["compute", R1]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "1.000000000000"
        assert out[1] == "argmax a=0.500000000000 b=0.500000000000"

    def test_vacuous_four(self, capsys, write_bpa):
        """测试 N = 4 空信任函数输出 2"""
        path = write_bpa(emit_bpa(vacuous(Frame(("a", "b", "c", "d")))))
        assert main(["compute", str(path)]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "2.000000000000"

    def test_json(self, capsys):
        """测试 JSON 输出"""
        assert main(["compute", R1, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["value"] == pytest.approx(1.0)
        assert set(data["argmax"]) == {"a", "b"}

    def test_missing_file(self):
        """测试文件不存在时退出码 66"""
        assert main(["compute", "/nonexistent/bpa.json"]) == 66

    def test_document_error_exit_code(self, write_bpa, capsys):
        """测试文档字段错误使用对应退出码"""
        path = write_bpa('{"frame": ["a"], "focal": [{"set": ["z"], "mass": 1}]}')
        assert main(["compute", str(path)]) == 81
        assert "focal[0].set" in capsys.readouterr().err


class TestValidate:
    """validate 命令测试类"""

    def test_valid(self, capsys):
        """测试合法 BPA"""
        assert main(["validate", R1]) == 0
        assert capsys.readouterr().out.startswith("valid")

    def test_invalid_mass(self, write_bpa, capsys):
        """测试质量之和不为 1"""
        path = write_bpa('{"frame": ["a", "b"], "focal": [{"set": ["a"], "mass": 0.4}]}')
        assert main(["validate", str(path)]) == 2
        assert capsys.readouterr().out.startswith("invalid")

    def test_invalid_belief_table(self, write_bpa, capsys):
        """测试 Möbius 系数为负的信任函数表"""
        path = write_bpa(
            '{"frame": ["a", "b"], "belief": ['
            '{"set": ["a"], "value": 0.6}, {"set": ["b"], "value": 0.6},'
            '{"set": ["a", "b"], "value": 1}]}'
        )
        assert main(["validate", str(path)]) == 2
        assert capsys.readouterr().out.startswith("invalid")

    def test_valid_belief_table(self, write_bpa):
        """测试合法的信任函数表"""
        path = write_bpa('{"frame": ["a"], "belief": [{"set": ["a"], "value": 1}]}')
        assert main(["validate", str(path)]) == 0


class TestTransforms:
    """project / transfer / product 命令测试类"""

    def test_parse_blocks(self):
        """测试划分参数解析"""
        frame = Frame(("a", "b", "c", "d"))
        partition = parse_blocks(frame, "a,b|c,d")
        assert partition.blocks == (0b0011, 0b1100)

    def test_project(self, write_bpa, tmp_path):
        """测试投影写入文件"""
        m = vacuous(Frame(("a", "b", "c", "d")), 0b0101)
        source = write_bpa(emit_bpa(m))
        target = tmp_path / "projected.json"
        assert main(["project", str(source), "--blocks", "a,b|c,d", "-o", str(target)]) == 0
        projected = load_bpa(target)
        assert projected.frame.size == 2
        assert dict(projected.focal) == {0b11: 1.0}

    def test_transfer(self, capsys):
        """测试质量转移输出到标准输出"""
        assert main(["transfer", R1, "--from-set", "a", "--to-set", "a,b", "--alpha", "0.5"]) == 0
        m = parse_bpa(capsys.readouterr().out)
        assert m.mass(0b01) == pytest.approx(0.1)
        assert m.mass(0b11) == pytest.approx(0.4)

    def test_transfer_unknown_label(self):
        """测试集合参数中的未知标签"""
        assert main(["transfer", R1, "--from-set", "z", "--to-set", "a,b", "--alpha", "0.5"]) == (
            UnknownLabelError.exit_code
        )

    def test_transfer_not_superset(self):
        """测试 B 不是 A 的真超集"""
        assert main(["transfer", R1, "--from-set", "a", "--to-set", "b", "--alpha", "0.5"]) == 65

    def test_product(self, tmp_path):
        """测试乘积 BPA"""
        target = tmp_path / "product.json"
        assert main(["product", R1, R1, "-o", str(target)]) == 0
        assert load_bpa(target).frame.size == 4


class TestCheck:
    """check 命令测试类"""

    def test_r7_passes(self, capsys):
        """测试 R7 通过"""
        assert main(["check", "--suite", "R7", "--seed", "1"]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "全部通过"

    def test_zero_measure_fails(self):
        """测试恒零度量退出码 3"""
        assert main(["check", "--suite", "R7", "--seed", "1", "--measure", "zero"]) == 3

    def test_json_report(self, capsys):
        """测试 JSON 报告"""
        argv = ["check", "--suite", "R1", "--frame-size", "3", "--samples", "3", "--seed", "7", "--json"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        data = json.loads(first)
        assert data["seed"] == 7
        assert data["reports"][0]["requirement"] == "R1"
        assert main(argv) == 0
        assert capsys.readouterr().out == first

    def test_ci_requires_seed(self, monkeypatch):
        """测试 AU_CI=1 时缺少 --seed 为用法错误"""
        monkeypatch.setenv("AU_CI", "1")
        assert main(["check", "--suite", "R7"]) == 64
        assert main(["check", "--suite", "R7", "--seed", "0"]) == 0

    def test_bad_frame_size(self):
        """测试框架规模过小"""
        assert main(["check", "--suite", "R7", "--seed", "0", "--frame-size", "1"]) == 64

    def test_negative_seed(self):
        """测试负种子"""
        assert main(["check", "--suite", "R7", "--seed", "-1"]) == 64


class TestOracle:
    """oracle 命令测试类"""

    def test_grid(self, capsys):
        """测试网格 oracle"""
        assert main(["oracle", R1]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(1.0, abs=GRID_TOL)

    def test_ascent(self, capsys):
        """测试上升法 oracle"""
        assert main(["oracle", R1, "--mode", "ascent", "--seed", "3"]) == 0
        assert float(capsys.readouterr().out) == pytest.approx(1.0, abs=ASCENT_TOL)

    def test_ascent_ci_requires_seed(self, monkeypatch):
        """测试 AU_CI=1 时上升法需要种子"""
        monkeypatch.setenv("AU_CI", "1")
        assert main(["oracle", R1, "--mode", "ascent"]) == 64


class TestUsage:
    """用法错误测试类"""

    def test_unknown_command(self):
        """测试未知子命令以 64 退出"""
        with pytest.raises(SystemExit) as excinfo:
            main(["frobnicate"])
        assert excinfo.value.code == 64

    def test_unknown_suite(self):
        """测试未知要求编号"""
        with pytest.raises(SystemExit) as excinfo:
            main(["check", "--suite", "R9"])
        assert excinfo.value.code == 64

    def test_version(self, capsys):
        """测试 --version"""
        with pytest.raises(SystemExit) as excinfo:
            main(["--version"])
        assert excinfo.value.code == 0
        assert __version__ in capsys.readouterr().out


class TestGoldenOutput:
    """标准输出与退出码的金标文件测试类"""

    def test_compute(self, capsys, golden):
        """测试 compute 的文本输出"""
        assert main(["compute", R1]) == 0
        golden("compute_r1_example.out", capsys.readouterr().out)

    def test_validate_valid(self, capsys, golden):
        """测试 validate 合法 BPA 的输出"""
        assert main(["validate", R1]) == 0
        golden("validate_r1_example.out", capsys.readouterr().out)

    def test_validate_invalid(self, capsys, golden):
        """测试 validate 非信任函数表以 2 退出并报告出错子集"""
        assert main(["validate", str(GOLDEN / "not_belief_table.json")]) == 2
        golden("validate_not_belief_table.out", capsys.readouterr().out)

    @pytest.mark.slow
    def test_check_all(self, capsys, golden):
        """测试 au check --suite all --frame-size 4 --samples 200 --seed 7 --json"""
        argv = ["check", "--suite", "all", "--frame-size", "4", "--samples", "200"]
        assert main(argv + ["--seed", "7", "--json"]) == 0
        out = capsys.readouterr().out
        assert json.loads(out)["passed"]
        golden("check_all_n4_k200_s7.json", out)
