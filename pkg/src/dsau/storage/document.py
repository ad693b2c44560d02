"""
BPA 文档 - JSON 格式的读写

格式:
    {"frame": ["a", "b"],
     "focal": [{"set": ["a"], "mass": 0.2}, {"set": ["a", "b"], "mass": 0.8}]}

输出是规范形式：框架保持原顺序，焦元按掩码排序，质量写 17 位有效数字，
因此 parse_bpa(emit_bpa(m)) 与 m 完全相同。

信任函数表（validate 命令使用）把 "focal" 换成 "belief"，每项为
{"set": [...], "value": x}，未列出的子集取 0。
"""

import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from dsau.core.config import MASS_TOL, MAX_FRAME
from dsau.core.errors import (
    DuplicateSetError,
    EmptySetError,
    MalformedDocumentError,
    MassSumError,
    NonPositiveMassError,
    UnknownLabelError,
)
from dsau.evidence.models import BeliefFunction, MassFunction
from dsau.frame.frame import Frame, SubsetMask

logger = logging.getLogger(__name__)


@dataclass
class BpaDocument:
    """解析后、校验前的文档"""
    frame: List[str] = field(default_factory=list)
    focal: List[Tuple[List[str], float]] = field(default_factory=list)


def _load_json(text: str) -> Dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocumentError(e.msg, f"第 {e.lineno} 行第 {e.colno} 列") from None
    if not isinstance(data, dict):
        raise MalformedDocumentError("顶层必须是 JSON 对象")
    return data


def _read_frame(data: Dict[str, Any]) -> List[str]:
    labels = data.get("frame")
    if not isinstance(labels, list) or not labels:
        raise MalformedDocumentError("必须是非空的标签列表", "frame")
    for k, label in enumerate(labels):
        if not isinstance(label, str):
            raise MalformedDocumentError(f"标签必须是字符串: {label!r}", f"frame[{k}]")
    return labels


def _read_entries(data: Dict[str, Any], key: str, value_key: str) -> List[Tuple[List[str], float]]:
    entries = data.get(key)
    if not isinstance(entries, list):
        raise MalformedDocumentError("必须是列表", key)
    result = []
    for k, entry in enumerate(entries):
        path = f"{key}[{k}]"
        if not isinstance(entry, dict):
            raise MalformedDocumentError("必须是对象", path)
        labels = entry.get("set")
        if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
            raise MalformedDocumentError("必须是标签列表", f"{path}.set")
        value = entry.get(value_key)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise MalformedDocumentError(f"必须是数值: {value!r}", f"{path}.{value_key}")
        if not math.isfinite(value):
            raise MalformedDocumentError(f"必须是有限数值: {value!r}", f"{path}.{value_key}")
        result.append((labels, float(value)))
    return result


def parse_document(text: str) -> BpaDocument:
    data = _load_json(text)
    return BpaDocument(frame=_read_frame(data), focal=_read_entries(data, "focal", "mass"))


def _mask_of(frame: Frame, labels: List[str], path: str) -> SubsetMask:
    mask = 0
    for label in labels:
        if label not in frame.labels:
            raise UnknownLabelError(f"未知标签 {label!r}", path)
        mask |= 1 << frame.index(label)
    return mask


def document_to_mass(doc: BpaDocument, max_frame: int = MAX_FRAME) -> MassFunction:
    """按字段逐项校验；和在 MASS_TOL 内偏离 1 时重新归一"""
    frame = Frame(tuple(doc.frame), max_size=max_frame)
    focal: Dict[SubsetMask, float] = {}
    first_seen: Dict[SubsetMask, int] = {}
    for k, (labels, mass) in enumerate(doc.focal):
        path = f"focal[{k}]"
        if not labels:
            raise EmptySetError("空集不能是焦元", f"{path}.set")
        mask = _mask_of(frame, labels, f"{path}.set")
        if mask in first_seen:
            raise DuplicateSetError(f"与 focal[{first_seen[mask]}] 是同一集合", f"{path}.set")
        if mass <= 0.0:
            raise NonPositiveMassError(f"质量必须为正: {mass!r}", f"{path}.mass")
        first_seen[mask] = k
        focal[mask] = mass
    if not focal:
        raise MalformedDocumentError("至少需要一个焦元", "focal")
    total = math.fsum(focal.values())
    if abs(total - 1.0) > MASS_TOL:
        raise MassSumError(f"质量之和为 {total:.12g}，偏离 1 超过 {MASS_TOL:g}", "focal")
    if total != 1.0:
        logger.debug("质量之和 %.17g，已重新归一", total)
    return MassFunction(frame, focal)


def parse_bpa(text: str, max_frame: int = MAX_FRAME) -> MassFunction:
    return document_to_mass(parse_document(text), max_frame)


def parse_belief_table(text: str, max_frame: int = MAX_FRAME) -> BeliefFunction:
    """读取信任函数表；不做信任函数校验（交给 is_belief_function）"""
    data = _load_json(text)
    frame = Frame(tuple(_read_frame(data)), max_size=max_frame)
    values = np.zeros(1 << frame.size, dtype=np.float64)
    seen: Dict[SubsetMask, int] = {}
    for k, (labels, value) in enumerate(_read_entries(data, "belief", "value")):
        path = f"belief[{k}].set"
        mask = _mask_of(frame, labels, path)
        if mask in seen:
            raise DuplicateSetError(f"与 belief[{seen[mask]}] 是同一集合", path)
        seen[mask] = k
        values[mask] = value
    return BeliefFunction(frame, values)


def is_belief_document(text: str) -> bool:
    return "belief" in _load_json(text)


def _dump(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False)


def emit_bpa(m: MassFunction) -> str:
    """规范文本形式"""
    lines = ["{", f'  "frame": [{", ".join(_dump(label) for label in m.frame.labels)}],']
    lines.append('  "focal": [')
    entries = []
    for mask, mass in m.items():
        labels = ", ".join(_dump(label) for label in m.frame.labels_of(mask))
        entries.append(f'    {{"set": [{labels}], "mass": {format(mass, ".17g")}}}')
    lines.append(",\n".join(entries))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_bpa(path: Union[str, Path], max_frame: int = MAX_FRAME) -> MassFunction:
    text = Path(path).read_text(encoding="utf-8")
    return parse_bpa(text, max_frame)


def save_bpa(m: MassFunction, path: Union[str, Path]) -> None:
    Path(path).write_text(emit_bpa(m), encoding="utf-8")
    logger.info("已写入 %s（%d 个焦元）", path, len(m))
