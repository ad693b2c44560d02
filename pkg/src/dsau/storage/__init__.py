"""
存储模块 - BPA 文档与报告文件
"""

from dsau.storage.document import (
    BpaDocument,
    document_to_mass,
    emit_bpa,
    is_belief_document,
    load_bpa,
    parse_belief_table,
    parse_bpa,
    parse_document,
    save_bpa,
)
from dsau.storage.reports import (
    au_to_dict,
    au_to_json,
    format_report,
    format_suite,
    suite_to_dict,
    suite_to_json,
)

__all__ = [
    "BpaDocument",
    "au_to_dict",
    "au_to_json",
    "document_to_mass",
    "emit_bpa",
    "format_report",
    "format_suite",
    "is_belief_document",
    "load_bpa",
    "parse_belief_table",
    "parse_bpa",
    "parse_document",
    "save_bpa",
    "suite_to_dict",
    "suite_to_json",
]
