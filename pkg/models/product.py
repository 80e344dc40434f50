"""
产品记录模型
"""

import datetime
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Mapping, Optional

from .constants import STATUS_UNCLEAR
from .quality import Answer


@dataclass(frozen=True)
class ProductRecord:
    """
    一个被评估产品的概要信息与全部答案

    metadata 以概要题的短键保存（如 "status"、"platforms"），
    answers 以完整问题 id 保存（如 "install.steps"）。
    类型化字段都从 metadata 派生，保证序列化往返一致。
    """

    name: str
    group: str
    metadata: Mapping[str, Answer] = field(default_factory=dict)
    answers: Mapping[str, Answer] = field(default_factory=dict)

    def meta_value(self, key: str, default=None):
        """读取概要信息的取值，未回答时返回 default"""
        answer = self.metadata.get(key)
        return default if answer is None else answer.value

    def answer_value(self, question_id: str, default=None):
        """读取度量题的取值，未回答时返回 default"""
        answer = self.answers.get(question_id)
        return default if answer is None else answer.value

    @property
    def status(self) -> str:
        return self.meta_value("status", STATUS_UNCLEAR)

    @property
    def last_updated(self) -> Optional[datetime.date]:
        raw = self.meta_value("last_updated")
        if raw is None:
            return None
        if isinstance(raw, datetime.date):
            return raw
        return datetime.date.fromisoformat(raw)

    @property
    def category(self) -> Optional[str]:
        return self.meta_value("category")

    @property
    def development_model(self) -> Optional[str]:
        return self.meta_value("development_model")

    @property
    def license(self) -> Optional[str]:
        return self.meta_value("license")

    @property
    def platforms(self) -> FrozenSet[str]:
        return frozenset(self.meta_value("platforms", ()))

    @property
    def languages(self) -> FrozenSet[str]:
        return frozenset(self.meta_value("languages", ()))

    @property
    def n_developers(self) -> Optional[int]:
        return self.meta_value("n_developers")

    @property
    def is_open_source(self) -> bool:
        return self.development_model == "open_source"

    def with_status(self, status: str) -> "ProductRecord":
        """返回替换了状态的新记录"""
        metadata = dict(self.metadata)
        metadata["status"] = Answer(status)
        return replace(self, metadata=metadata)
