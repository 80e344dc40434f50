"""
质量属性与评分模板的数据模型
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterator, Mapping, Optional, Tuple

from .errors import TemplateError


class Quality(Enum):
    """软件质量属性，声明顺序即报告与 CSV 的固定顺序"""

    INSTALLABILITY = "installability"
    CORRECTNESS_VERIFIABILITY = "correctness_verifiability"
    RELIABILITY = "reliability"
    ROBUSTNESS = "robustness"
    PERFORMANCE = "performance"
    USABILITY = "usability"
    MAINTAINABILITY = "maintainability"
    REUSABILITY = "reusability"
    PORTABILITY = "portability"
    UNDERSTANDABILITY = "understandability"
    INTEROPERABILITY = "interoperability"
    TRANSPARENCY = "transparency"
    REPRODUCIBILITY = "reproducibility"

    @property
    def display_name(self) -> str:
        """用于图表标题的名称"""
        return " and ".join(self.value.split("_")).capitalize()

    @property
    def position(self) -> int:
        """在固定顺序中的下标"""
        return list(Quality).index(self)

    @classmethod
    def from_id(cls, identifier: str) -> "Quality":
        """
        根据标识符查找质量属性

        Args:
            identifier (str): 小写标识符，如 "installability"

        Returns:
            Quality: 对应的质量属性
        """
        try:
            return cls(identifier)
        except ValueError:
            raise TemplateError(f"unknown quality: {identifier!r}") from None


def ordered_qualities(qualities) -> Tuple[Quality, ...]:
    """按固定顺序排列并去重"""
    chosen = set(qualities)
    return tuple(q for q in Quality if q in chosen)


class MetricKind(Enum):
    """问题的答案类型"""

    YES_NO = "yes_no"
    YES_STAR_NO = "yes_star_no"
    YES_NO_NA = "yes_no_na"
    YES_NO_UNCLEAR = "yes_no_unclear"
    CHOICE = "choice"
    ENUM_SET = "enum_set"
    NUMBER = "number"
    DATE = "date"
    TEXT = "text"
    URL = "url"
    URL_SET = "url_set"
    GRADE_1_10 = "grade_1_10"


# 是/否类题型隐含的选项
IMPLIED_OPTIONS = {
    MetricKind.YES_NO: ("yes", "no"),
    MetricKind.YES_STAR_NO: ("yes", "no"),
    MetricKind.YES_NO_NA: ("yes", "no", "n/a"),
    MetricKind.YES_NO_UNCLEAR: ("yes", "no", "unclear"),
}


@dataclass(frozen=True)
class MetricType:
    """答案类型，members 只对 choice / enum_set 有意义，starred 中的选项必须附带说明"""

    kind: MetricKind
    members: Tuple[str, ...] = ()
    starred: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind in (MetricKind.CHOICE, MetricKind.ENUM_SET):
            if not self.members:
                raise TemplateError(f"{self.kind.value} metric needs members")
            if len(set(self.members)) != len(self.members):
                raise TemplateError(f"duplicate members in {self.members}")
        elif self.members:
            raise TemplateError(f"{self.kind.value} metric takes no members")
        # yes* 题型的星号固定在 yes 上
        if self.kind is MetricKind.YES_STAR_NO and not self.starred:
            object.__setattr__(self, "starred", ("yes",))
        unknown = [s for s in self.starred if s not in self.options]
        if unknown:
            raise TemplateError(f"starred options {unknown} are not valid answers")

    @property
    def options(self) -> Tuple[str, ...]:
        """可选答案；数值、文本等开放题型返回空元组"""
        if self.kind in IMPLIED_OPTIONS:
            return IMPLIED_OPTIONS[self.kind]
        return self.members

    def describe(self) -> str:
        """给出人可读的类型描述，用于违规信息"""
        if not self.options:
            return self.kind.value
        shown = [f"{o}*" if o in self.starred else o for o in self.options]
        return "{" + ", ".join(shown) + "}"


@dataclass(frozen=True)
class Question:
    """模板中的单个问题，quality 为 None 表示概要信息部分"""

    id: str
    prompt: str
    metric: MetricType
    quality: Optional[Quality] = None
    requires_install: bool = False

    @property
    def is_summary(self) -> bool:
        return self.quality is None


@dataclass(frozen=True)
class QualitySection:
    """一个质量属性下的度量问题与总体印象题"""

    quality: Quality
    questions: Tuple[Question, ...]
    impression: Question

    def __post_init__(self):
        if self.impression.metric.kind is not MetricKind.GRADE_1_10:
            raise TemplateError(f"impression for {self.quality.value} must be a 1-10 grade")
        for question in self.questions + (self.impression,):
            if question.quality is not self.quality:
                raise TemplateError(f"question {question.id} filed under the wrong quality")

    def all_questions(self) -> Tuple[Question, ...]:
        return self.questions + (self.impression,)


@dataclass(frozen=True)
class GradingTemplate:
    """评分模板：概要信息题加上 13 个质量属性各自的问题"""

    summary_questions: Tuple[Question, ...]
    qualities: Tuple[QualitySection, ...]

    def __post_init__(self):
        seen = [section.quality for section in self.qualities]
        if seen != list(Quality):
            raise TemplateError("template must cover every quality exactly once, in order")
        for question in self.summary_questions:
            if not question.is_summary:
                raise TemplateError(f"summary question {question.id} carries a quality")
        ids = [q.id for q in self.all_questions()]
        duplicates = sorted({i for i in ids if ids.count(i) > 1})
        if duplicates:
            raise TemplateError(f"duplicate question ids: {duplicates}")

    def all_questions(self) -> Iterator[Question]:
        """按模板顺序遍历全部问题"""
        yield from self.summary_questions
        for section in self.qualities:
            yield from section.all_questions()

    @cached_property
    def _index(self) -> Dict[str, Question]:
        return {q.id: q for q in self.all_questions()}

    def question(self, question_id: str) -> Optional[Question]:
        """按 id 查找问题，不存在返回 None"""
        return self._index.get(question_id)

    def section(self, quality: Quality) -> QualitySection:
        return self.qualities[quality.position]

    @property
    def question_count(self) -> int:
        return len(self._index)


@dataclass(frozen=True)
class Answer:
    """一个问题的答案，note 为星号选项所需的说明"""

    value: Any
    note: str = ""

    @classmethod
    def from_json(cls, raw: Any) -> "Answer":
        """
        从 JSON 值创建答案

        Args:
            raw: 标量、列表，或 {"value": ..., "note": "..."}

        Returns:
            Answer: 答案对象，列表转换为元组
        """
        note = ""
        if isinstance(raw, Mapping):
            note = raw.get("note", "") or ""
            raw = raw.get("value")
        if isinstance(raw, list):
            raw = tuple(raw)
        return cls(raw, note)

    def to_json(self) -> Any:
        """转换为 JSON 值，没有说明时只写值本身"""
        value = list(self.value) if isinstance(self.value, tuple) else self.value
        if self.note:
            return {"value": value, "note": self.note}
        return value


@dataclass(frozen=True)
class Violation:
    """一条校验失败记录"""

    question_id: str
    expected: str
    value: Any
    reason: str
    product: str = ""

    def __str__(self) -> str:
        where = f"{self.product}: " if self.product else ""
        return f"{where}{self.question_id}: {self.reason} (expected {self.expected}, got {self.value!r})"
