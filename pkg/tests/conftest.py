"""
共享测试夹具
"""

import os
from pathlib import Path

import pytest

from dsau.core.config import Config, FrameConfig, OracleConfig, RuntimeConfig, SuiteConfig
from dsau.evidence import MassFunction
from dsau.frame import Frame

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def mock_config():
    """创建测试配置"""
    return Config(
        frame=FrameConfig(max_frame=24, warn_frame=16),
        suite=SuiteConfig(
            seed=0,
            samples=10,
            workers=1,
            continuity_mesh=1e-2,
            consistent_draws=20,
        ),
        oracle=OracleConfig(grid_step=1e-6, ascent_starts=2, ascent_max_sweeps=20000),
        runtime=RuntimeConfig(ci=False, log_level="WARNING"),
    )


@pytest.fixture
def frame_ab():
    return Frame(("a", "b"))


@pytest.fixture
def r1_mass(frame_ab):
    """m({a})=0.2, m({b})=0.5, m({a,b})=0.3"""
    return MassFunction(frame_ab, {0b01: 0.2, 0b10: 0.5, 0b11: 0.3})


@pytest.fixture
def step_measure():
    """在 m(X) 越过 0.5 时跳变 10 比特的反例度量"""

    def measure(m: MassFunction) -> float:
        return 10.0 if m.mass(m.frame.full_mask) > 0.5 else 0.0

    return measure


@pytest.fixture
def write_bpa(tmp_path):
    """把文本写入临时文件并返回路径"""

    def write(text: str, name: str = "bpa.json") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def golden():
    """与 tests/golden 下的文件逐字节比较

    AU_UPDATE_GOLDEN=1 时改写文件；文件不存在时先记录再跳过，下次运行起比较。
    """

    def compare(name: str, text: str) -> None:
        path = GOLDEN / name
        if os.getenv("AU_UPDATE_GOLDEN") == "1" or not path.exists():
            existed = path.exists()
            path.write_bytes(text.encode("utf-8"))
            if not existed:
                pytest.skip(f"已记录金标文件 {name}")
        assert text == path.read_bytes().decode("utf-8")

    return compare
