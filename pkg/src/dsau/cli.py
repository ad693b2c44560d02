#!/usr/bin/env python3
"""
dsau CLI - 命令行入口

退出码:
  0  成功 / 全部通过
  2  validate: 文档不是合法的 BPA 或信任函数
  3  check: 至少一组未通过
  64 用法错误（未知参数、AU_CI=1 下缺少 --seed）
  65 文档或证据非法；81–85 为具体的文档字段错误
  66 文件无法读写
  70 内部不变量被破坏
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from dsau import __version__
from dsau.au import au, oracle_search
from dsau.axioms import MEASURES, SUITE_CHOICES, get_measure, run_suite
from dsau.core.config import Config, load_config
from dsau.core.errors import DsauError, UnknownLabelError
from dsau.evidence import (
    belief_from_mass,
    is_belief_function,
    product_mass,
    project_mass,
    transfer,
)
from dsau.evidence.models import MassFunction
from dsau.frame import Frame, Partition, SubsetMask
from dsau.storage import (
    au_to_json,
    emit_bpa,
    format_suite,
    is_belief_document,
    load_bpa,
    parse_belief_table,
    parse_bpa,
    suite_to_json,
)

logger = logging.getLogger("dsau.cli")

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_CHECK_FAILED = 3
EXIT_USAGE = 64
EXIT_NO_INPUT = 66
EXIT_SOFTWARE = 70


class UsageError(Exception):
    """命令行用法错误（退出码 64）"""


class _Parser(argparse.ArgumentParser):
    """用法错误以 64 退出，而不是 argparse 默认的 2（2 留给 validate）"""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: 错误: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="au",
        description="dsau - Dempster-Shafer 理论中的总不确定性度量 AU",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例:
  au compute bpa.json                              # 计算 AU 及取到最大值的分布
  au compute bpa.json --json                       # JSON 输出
  au validate bpa.json                             # 校验 BPA 或信任函数表
  au project bpa.json --blocks "a,b|c,d" -o out.json
  au transfer bpa.json --from-set a --to-set a,b --alpha 0.5
  au product x.json y.json -o xy.json
  au check --suite all --frame-size 4 --samples 200 --seed 7 --json
  au oracle bpa.json --mode ascent --seed 1        # 独立 oracle 交叉验证
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="输出调试日志")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    compute = commands.add_parser("compute", help="计算 AU(m)")
    compute.add_argument("file", type=Path, help="BPA 文档")
    compute.add_argument("--json", action="store_true", help="输出 JSON（value, argmax）")
    compute.set_defaults(handler=cmd_compute)

    validate = commands.add_parser("validate", help="校验 BPA 或信任函数表")
    validate.add_argument("file", type=Path, help="BPA 文档或信任函数表")
    validate.set_defaults(handler=cmd_validate)

    project = commands.add_parser("project", help="投影到划分 Y 上：m↓Y")
    project.add_argument("file", type=Path, help="BPA 文档")
    project.add_argument("--blocks", required=True, help='划分，如 "a,b|c,d"')
    project.add_argument("-o", "--output", type=Path, default=None, help="输出文件（缺省为标准输出）")
    project.set_defaults(handler=cmd_project)

    move = commands.add_parser("transfer", help="把 A 的部分质量转给真超集 B")
    move.add_argument("file", type=Path, help="BPA 文档")
    move.add_argument("--from-set", required=True, help='焦元 A，如 "a"')
    move.add_argument("--to-set", required=True, help='A 的真超集 B，如 "a,b"')
    move.add_argument("--alpha", type=float, required=True, help="A 保留的比例 α ∈ [0, 1]")
    move.add_argument("-o", "--output", type=Path, default=None, help="输出文件（缺省为标准输出）")
    move.set_defaults(handler=cmd_transfer)

    product = commands.add_parser("product", help="两个 BPA 的无交互乘积")
    product.add_argument("first", type=Path, help="行框架上的 BPA")
    product.add_argument("second", type=Path, help="列框架上的 BPA")
    product.add_argument("-o", "--output", type=Path, default=None, help="输出文件（缺省为标准输出）")
    product.set_defaults(handler=cmd_product)

    check = commands.add_parser("check", help="运行公理测试套件")
    check.add_argument("--suite", choices=SUITE_CHOICES, default="all", help="要求编号或 all")
    check.add_argument("--frame-size", type=int, default=4, help="随机用例的框架规模")
    check.add_argument("--samples", type=int, default=None, help="每组用例数（缺省 AU_SAMPLES）")
    check.add_argument("--seed", type=int, default=None, help="随机种子（AU_CI=1 时必填）")
    check.add_argument("--measure", choices=sorted(MEASURES), default="au", help="被测度量")
    check.add_argument("--workers", type=int, default=None, help="并行线程数（缺省 AU_WORKERS）")
    check.add_argument("--json", action="store_true", help="输出 JSON 报告")
    check.set_defaults(handler=cmd_check)

    oracle = commands.add_parser("oracle", help="用独立 oracle 近似 AU")
    oracle.add_argument("file", type=Path, help="BPA 文档")
    oracle.add_argument("--mode", choices=["grid", "ascent"], default="grid", help="oracle 类型")
    oracle.add_argument("--seed", type=int, default=None, help="上升法起点的随机种子")
    oracle.add_argument("--workers", type=int, default=1, help="上升法并行线程数")
    oracle.set_defaults(handler=cmd_oracle)
    return parser


def _require_seed(seed: Optional[int], config: Config) -> int:
    if seed is None:
        if config.runtime.ci:
            raise UsageError("AU_CI=1 时随机命令必须显式给出 --seed")
        return config.suite.seed
    if seed < 0:
        raise UsageError(f"--seed 必须非负: {seed}")
    return seed


def _parse_set(frame: Frame, text: str, flag: str) -> SubsetMask:
    mask = 0
    for label in (part.strip() for part in text.split(",")):
        if not label:
            continue
        if label not in frame.labels:
            raise UnknownLabelError(f"未知标签 {label!r}", flag)
        mask |= 1 << frame.index(label)
    return mask


def parse_blocks(frame: Frame, text: str) -> Partition:
    """'a,b|c,d' -> 划分 {{a,b},{c,d}}"""
    blocks = [[label.strip() for label in block.split(",") if label.strip()] for block in text.split("|")]
    return Partition.from_labels(frame, blocks)


def _write(m: MassFunction, output: Optional[Path]) -> None:
    text = emit_bpa(m)
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")
        logger.info("已写入 %s", output)


def cmd_compute(args, config: Config) -> int:
    m = load_bpa(args.file, config.frame.max_frame)
    if m.frame.size > config.frame.warn_frame:
        logger.warning(
            "框架有 %d 个元素，超过 %d，AU 的子集扫描可能很慢", m.frame.size, config.frame.warn_frame
        )
    result = au(m)
    if args.json:
        print(au_to_json(result))
    else:
        print(f"{result.value:.12f}")
        print("argmax " + " ".join(f"{label}={p:.12f}" for label, p in result.argmax.as_dict().items()))
    return EXIT_OK


def cmd_validate(args, config: Config) -> int:
    text = args.file.read_text(encoding="utf-8")
    try:
        if is_belief_document(text):
            bel = parse_belief_table(text, config.frame.max_frame)
            verdict = is_belief_function(bel.values)
            if not verdict:
                where = "" if verdict.witness is None else f"（子集 {bel.frame.format_set(verdict.witness)}）"
                print(f"invalid: {verdict.reason}{where}")
                return EXIT_INVALID
            print("valid: 信任函数")
            return EXIT_OK
        m = parse_bpa(text, config.frame.max_frame)
        verdict = is_belief_function(belief_from_mass(m).values)
        if not verdict:
            print(f"invalid: {verdict.reason}")
            return EXIT_INVALID
    except DsauError as e:
        print(f"invalid: {e}")
        return EXIT_INVALID
    print(f"valid: 基本概率分配，{len(m)} 个焦元，框架 {m.frame.size} 个元素")
    return EXIT_OK


def cmd_project(args, config: Config) -> int:
    m = load_bpa(args.file, config.frame.max_frame)
    _write(project_mass(m, parse_blocks(m.frame, args.blocks)), args.output)
    return EXIT_OK


def cmd_transfer(args, config: Config) -> int:
    m = load_bpa(args.file, config.frame.max_frame)
    a = _parse_set(m.frame, args.from_set, "--from-set")
    b = _parse_set(m.frame, args.to_set, "--to-set")
    _write(transfer(m, a, b, args.alpha), args.output)
    return EXIT_OK


def cmd_product(args, config: Config) -> int:
    m1 = load_bpa(args.first, config.frame.max_frame)
    m2 = load_bpa(args.second, config.frame.max_frame)
    _write(product_mass(m1, m2, max_size=config.frame.max_frame), args.output)
    return EXIT_OK


def cmd_check(args, config: Config) -> int:
    seed = _require_seed(args.seed, config)
    samples = args.samples if args.samples is not None else config.suite.samples
    workers = args.workers if args.workers is not None else config.suite.workers
    try:
        result = run_suite(
            suite=[args.suite],
            frame_size=args.frame_size,
            samples=samples,
            seed=seed,
            measure=get_measure(args.measure),
            measure_name=args.measure,
            workers=workers,
            config=config.suite,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.json:
        sys.stdout.write(suite_to_json(result))
    else:
        for line in format_suite(result):
            print(line)
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


def cmd_oracle(args, config: Config) -> int:
    seed = _require_seed(args.seed, config) if args.mode == "ascent" else 0
    m = load_bpa(args.file, config.frame.max_frame)
    result = oracle_search(m, args.mode, seed=seed, workers=args.workers, config=config.oracle)
    print(f"{result.value:.12f}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """CLI 主入口"""
    args = build_parser().parse_args(argv)
    config = load_config()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else config.runtime.log_level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.handler(args, config)
    except UsageError as e:
        print(f"au: 错误: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"au: 文件错误: {e}", file=sys.stderr)
        return EXIT_NO_INPUT
    except DsauError as e:
        print(f"au: {e}", file=sys.stderr)
        return e.exit_code
    except Exception:
        logger.exception("内部错误")
        return EXIT_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
