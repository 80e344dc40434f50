"""
产品记录的 JSON 读写与校验
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Sequence, Union

from grading.template import SUMMARY_PREFIX
from grading.validation import validate_answer
from models.constants import PRODUCT_GROUPS
from models.errors import DatasetError
from models.product import ProductRecord
from models.quality import Answer, GradingTemplate, Violation

logger = logging.getLogger(__name__)


class ParsedRecords(NamedTuple):
    """解析结果：记录列表与非严格模式下收集的违规"""

    records: List[ProductRecord]
    violations: List[Violation]


def _record_violations(record: ProductRecord, template: GradingTemplate) -> List[Violation]:
    """校验一条记录的全部答案"""
    found = []
    name_question = template.question(SUMMARY_PREFIX + "name")
    checks = [(name_question, Answer(record.name))]
    checks += [(template.question(SUMMARY_PREFIX + key), a) for key, a in record.metadata.items()]
    checks += [(template.question(qid), a) for qid, a in record.answers.items()]
    for question, answer in checks:
        violation = validate_answer(question, answer)
        if violation is not None:
            found.append(violation)
    if record.is_open_source and record.meta_value("source_available") != "yes":
        found.append(Violation(
            SUMMARY_PREFIX + "source_available",
            "yes",
            record.meta_value("source_available"),
            "open-source products must have source available",
        ))
    return [Violation(v.question_id, v.expected, v.value, v.reason, record.name) for v in found]


def _parse_entry(index: int, entry: Any, template: GradingTemplate, errors: List[str]):
    where = f"record {index}"
    if not isinstance(entry, dict):
        errors.append(f"{where}: expected an object")
        return None
    name = entry.get("name")
    if not isinstance(name, str) or not name.strip():
        errors.append(f"{where}: missing product name")
        return None
    where = f"record {index} ({name})"
    group = entry.get("group")
    if group not in PRODUCT_GROUPS:
        errors.append(f"{where}: unknown group {group!r}")
    unknown_fields = sorted(set(entry) - {"name", "group", "metadata", "answers"})
    if unknown_fields:
        errors.append(f"{where}: unknown fields {unknown_fields}")
    metadata_raw = entry.get("metadata", {})
    answers_raw = entry.get("answers", {})
    if not isinstance(metadata_raw, dict) or not isinstance(answers_raw, dict):
        errors.append(f"{where}: metadata and answers must be objects")
        return None
    for key in metadata_raw:
        question = template.question(SUMMARY_PREFIX + key)
        if question is None or key == "name":
            errors.append(f"{where}: unknown metadata key {key!r}")
    for qid in answers_raw:
        question = template.question(qid)
        if question is None or question.is_summary:
            errors.append(f"{where}: unknown question id {qid!r}")
    return ProductRecord(
        name=name,
        group=group,
        metadata={k: Answer.from_json(v) for k, v in metadata_raw.items()},
        answers={k: Answer.from_json(v) for k, v in answers_raw.items()},
    )


def parse_records(text: str, template: GradingTemplate, strict: bool = True) -> ParsedRecords:
    """
    解析产品记录 JSON

    Args:
        text (str): JSON 文本，顶层为记录数组
        template (GradingTemplate): 用于校验答案的模板
        strict (bool): 严格模式下任何违规都会导致失败

    Returns:
        ParsedRecords: 记录与违规列表（严格模式下违规列表总为空）

    Raises:
        DatasetError: 结构错误、未知问题 id、未知分组，或严格模式下的违规
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DatasetError([f"records file is not valid JSON: {e}"]) from None
    if not isinstance(doc, list):
        raise DatasetError(["records file must hold a JSON array"])

    errors: List[str] = []
    records = []
    seen = set()
    for index, entry in enumerate(doc):
        record = _parse_entry(index, entry, template, errors)
        if record is None:
            continue
        if record.name in seen:
            errors.append(f"record {index} ({record.name}): duplicate product name")
        seen.add(record.name)
        records.append(record)
    if errors:
        raise DatasetError(errors)

    violations = [v for record in records for v in _record_violations(record, template)]
    if violations and strict:
        raise DatasetError([str(v) for v in violations])
    if violations:
        logger.warning("ignoring %d answer violation(s) in non-strict mode", len(violations))
    return ParsedRecords(records, violations)


def load_records(path: Union[str, Path], template: GradingTemplate, strict: bool = True) -> ParsedRecords:
    """从文件读取产品记录"""
    with open(path, "r", encoding="utf-8") as f:
        return parse_records(f.read(), template, strict)


def records_to_json(records: Sequence[ProductRecord]) -> List[Dict[str, Any]]:
    """记录转换为 JSON 文档"""
    return [
        {
            "name": record.name,
            "group": record.group,
            "metadata": {k: a.to_json() for k, a in record.metadata.items()},
            "answers": {k: a.to_json() for k, a in record.answers.items()},
        }
        for record in records
    ]


def serialize_records(records: Sequence[ProductRecord]) -> str:
    """
    记录序列化为 JSON 文本

    Args:
        records: 产品记录

    Returns:
        str: 缩进两格的 JSON 文本
    """
    return json.dumps(records_to_json(records), ensure_ascii=False, indent=2) + "\n"
