"""
评分模板的 JSON 导入导出
"""

import json
from typing import Any, Dict

from models.errors import TemplateError
from models.quality import (GradingTemplate, MetricKind, MetricType, Quality,
                            QualitySection, Question)

SCHEMA_VERSION = 1


def _question_to_json(question: Question) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "id": question.id,
        "prompt": question.prompt,
        "metric": question.metric.kind.value,
    }
    if question.metric.members:
        doc["metric_members"] = list(question.metric.members)
    if question.metric.starred:
        doc["metric_starred"] = list(question.metric.starred)
    doc["requires_install"] = question.requires_install
    return doc


def _question_from_json(doc: Dict[str, Any], quality) -> Question:
    try:
        kind = MetricKind(doc["metric"])
        metric = MetricType(kind, tuple(doc.get("metric_members", ())),
                            tuple(doc.get("metric_starred", ())))
        return Question(doc["id"], doc["prompt"], metric, quality,
                        bool(doc.get("requires_install", False)))
    except KeyError as e:
        raise TemplateError(f"question is missing field {e}") from None
    except ValueError as e:
        raise TemplateError(f"bad question {doc.get('id')!r}: {e}") from None


def template_to_json(template: GradingTemplate) -> Dict[str, Any]:
    """
    把模板转换为 JSON 文档

    Args:
        template (GradingTemplate): 评分模板

    Returns:
        dict: 可直接 json.dump 的文档
    """
    return {
        "schema_version": SCHEMA_VERSION,
        "question_count": template.question_count,
        "summary": [_question_to_json(q) for q in template.summary_questions],
        "qualities": [
            {
                "quality": section.quality.value,
                "questions": [_question_to_json(q) for q in section.questions],
                "impression": _question_to_json(section.impression),
            }
            for section in template.qualities
        ],
    }


def template_from_json(doc: Dict[str, Any]) -> GradingTemplate:
    """
    从 JSON 文档恢复模板

    Args:
        doc (dict): template_to_json 产生的文档

    Returns:
        GradingTemplate: 模板对象

    Raises:
        TemplateError: 文档结构不合法
    """
    if not isinstance(doc, dict):
        raise TemplateError("template document must be an object")
    try:
        summary = tuple(_question_from_json(q, None) for q in doc["summary"])
        sections = []
        for entry in doc["qualities"]:
            quality = Quality.from_id(entry["quality"])
            questions = tuple(_question_from_json(q, quality) for q in entry["questions"])
            impression = _question_from_json(entry["impression"], quality)
            sections.append(QualitySection(quality, questions, impression))
    except (KeyError, TypeError) as e:
        raise TemplateError(f"malformed template document: {e}") from None
    template = GradingTemplate(summary, tuple(sections))
    declared = doc.get("question_count")
    if declared is not None and declared != template.question_count:
        raise TemplateError(f"question_count is {declared} but the document holds {template.question_count}")
    return template


def dumps_template(template: GradingTemplate) -> str:
    """模板序列化为 JSON 字符串"""
    return json.dumps(template_to_json(template), ensure_ascii=False, indent=2) + "\n"


def loads_template(text: str) -> GradingTemplate:
    """从 JSON 字符串读取模板"""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise TemplateError(f"template is not valid JSON: {e}") from None
    return template_from_json(doc)
