"""
答案校验
"""

import datetime
from typing import Any, Optional
from urllib.parse import urlparse

from models.quality import Answer, MetricKind, Question, Violation


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_url(value: Any) -> bool:
    if not isinstance(value, str):
        return False
    parsed = urlparse(value)
    return parsed.scheme in ("http", "https") and bool(parsed.netloc)


def _is_date(value: Any) -> bool:
    if isinstance(value, datetime.date):
        return True
    if not isinstance(value, str):
        return False
    try:
        datetime.date.fromisoformat(value)
    except ValueError:
        return False
    return True


def _check_value(question: Question, value: Any) -> Optional[str]:
    """返回不合法的原因，合法时返回 None"""
    metric = question.metric
    kind = metric.kind
    if metric.options and kind is not MetricKind.ENUM_SET:
        if value not in metric.options:
            return "not one of the allowed options"
        return None
    if kind is MetricKind.ENUM_SET:
        if not isinstance(value, (list, tuple)):
            return "expected a set of options"
        unknown = [v for v in value if v not in metric.members]
        if unknown:
            return f"unknown options {unknown}"
        if len(set(value)) != len(value):
            return "repeated options"
        return None
    if kind is MetricKind.NUMBER:
        if not _is_int(value) or value < 0:
            return "expected a non-negative integer"
        return None
    if kind is MetricKind.GRADE_1_10:
        if not _is_int(value) or not 1 <= value <= 10:
            return "expected an integer grade from 1 to 10"
        return None
    if kind is MetricKind.DATE:
        return None if _is_date(value) else "expected an ISO date (YYYY-MM-DD)"
    if kind is MetricKind.TEXT:
        if not isinstance(value, str) or not value.strip():
            return "expected non-empty text"
        return None
    if kind is MetricKind.URL:
        return None if _is_url(value) else "expected an http(s) URL"
    if kind is MetricKind.URL_SET:
        if not isinstance(value, (list, tuple)) or not all(_is_url(v) for v in value):
            return "expected a list of http(s) URLs"
        return None
    return f"unsupported metric {kind.value}"


def validate_answer(question: Question, answer: Any) -> Optional[Violation]:
    """
    校验一个答案是否符合问题的题型

    Args:
        question (Question): 模板中的问题
        answer: Answer 对象或原始 JSON 值

    Returns:
        Optional[Violation]: 不合法时返回违规记录，否则返回 None
    """
    if not isinstance(answer, Answer):
        answer = Answer.from_json(answer)
    expected = question.metric.describe()
    reason = _check_value(question, answer.value)
    if reason is None and answer.value in question.metric.starred and not answer.note.strip():
        reason = f"answer '{answer.value}' requires an explanation"
    if reason is None:
        return None
    return Violation(question.id, expected, answer.value, reason)
