"""
结果输出 - compute 与 check 的 JSON / 文本形式

JSON 中的浮点数用 repr 写出，相同输入与种子得到逐字节相同的报告。
"""

import json
from typing import Any, Dict, List

from dsau.au.measure import AUResult
from dsau.axioms.models import CheckReport, SuiteResult


def au_to_dict(result: AUResult) -> Dict[str, Any]:
    return {"value": result.value, "argmax": result.argmax.as_dict()}


def au_to_json(result: AUResult) -> str:
    return json.dumps(au_to_dict(result), ensure_ascii=False, indent=2)


def suite_to_dict(result: SuiteResult) -> Dict[str, Any]:
    return {
        "seed": result.seed,
        "generator_version": result.generator_version,
        "measure": result.measure,
        "frame_size": result.frame_size,
        "samples": result.samples,
        "passed": result.passed,
        "reports": [report.to_dict() for report in result.reports],
    }


def suite_to_json(result: SuiteResult) -> str:
    return json.dumps(suite_to_dict(result), ensure_ascii=False, indent=2) + "\n"


def format_report(report: CheckReport) -> str:
    line = (
        f"{report.requirement.value:<3} {report.verdict.value:<4} "
        f"margin={report.margin:+.3e} cases={report.cases} failures={report.failures}"
    )
    if report.witness.get("group"):
        line += f" [{report.witness['group']}]"
    if report.note:
        line += f"  ({report.note})"
    return line


def format_suite(result: SuiteResult) -> List[str]:
    lines = [
        f"measure={result.measure} frame_size={result.frame_size} samples={result.samples} "
        f"seed={result.seed} generator={result.generator_version}"
    ]
    lines.extend(format_report(report) for report in result.reports)
    failed = result.failed
    lines.append("全部通过" if not failed else f"{len(failed)} 组未通过")
    return lines
