"""
配置模块 - 容差常量与运行参数
"""

import os
from dataclasses import dataclass
from dotenv import load_dotenv

load_dotenv()

# 输入校验容差：质量和、非负性
MASS_TOL = 1e-9
# 精确往返（Möbius 变换、投影交换）的容差
ROUND_TOL = 1e-12
# 支配关系 Bel(A) <= P(A) 的判定容差
CONS_TOL = 1e-9
# AU 精确路径比较容差
AU_TOL = 1e-9
# 上升法 oracle 的比较容差
ASCENT_TOL = 1e-6
# 网格 oracle 的比较容差
GRID_TOL = 1e-3
# 稠密 2^N 表的默认上限
MAX_FRAME = 24


@dataclass
class FrameConfig:
    """识别框架配置"""
    max_frame: int      # 元素个数上限
    warn_frame: int     # 超过此规模时 compute 发出警告


@dataclass
class SuiteConfig:
    """公理测试套件配置"""
    seed: int                   # 默认随机种子（AU_CI 模式下必须显式给出）
    samples: int                # 每组随机用例数
    workers: int                # 并行线程数
    continuity_mesh: float      # R2 连续性探测步长
    consistent_draws: int       # T7 每个用例的一致分布采样数


@dataclass
class OracleConfig:
    """独立验证 oracle 配置"""
    grid_step: float            # 网格细化的最终步长
    ascent_starts: int          # 上升法的起点个数
    ascent_max_sweeps: int      # 分块上升的最大轮数


@dataclass
class RuntimeConfig:
    """运行时配置"""
    ci: bool                    # AU_CI=1：随机命令必须显式给出 --seed
    log_level: str              # 日志级别


@dataclass
class Config:
    """应用配置"""
    frame: FrameConfig
    suite: SuiteConfig
    oracle: OracleConfig
    runtime: RuntimeConfig


def _env_flag(name: str, default: str = "false") -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


def load_config() -> Config:
    """加载配置"""
    return Config(
        frame=FrameConfig(
            max_frame=int(os.getenv("AU_MAX_FRAME", str(MAX_FRAME))),
            warn_frame=int(os.getenv("AU_WARN_FRAME", "16")),
        ),
        suite=SuiteConfig(
            seed=int(os.getenv("AU_SEED", "0")),
            samples=int(os.getenv("AU_SAMPLES", "200")),
            workers=int(os.getenv("AU_WORKERS", "1")),
            continuity_mesh=float(os.getenv("AU_CONTINUITY_MESH", "1e-2")),
            consistent_draws=int(os.getenv("AU_CONSISTENT_DRAWS", "100")),
        ),
        oracle=OracleConfig(
            grid_step=float(os.getenv("AU_GRID_STEP", "1e-6")),
            ascent_starts=int(os.getenv("AU_ASCENT_STARTS", "4")),
            ascent_max_sweeps=int(os.getenv("AU_ASCENT_MAX_SWEEPS", "20000")),
        ),
        runtime=RuntimeConfig(
            ci=_env_flag("AU_CI"),
            log_level=os.getenv("AU_LOG_LEVEL", "WARNING").upper(),
        ),
    )
