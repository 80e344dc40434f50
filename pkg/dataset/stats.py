"""
产品记录的汇总统计
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, NamedTuple, Sequence, Tuple

from models.constants import PRODUCT_GROUPS, STATUS_ALIVE, STATUS_DEAD
from models.product import ProductRecord


class Count(NamedTuple):
    """满足条件的数量与可判定的记录数"""

    count: int
    known: int

    def __str__(self) -> str:
        return f"{self.count}/{self.known}"


@dataclass(frozen=True)
class SummaryStats:
    """汇总统计结果，counts 的键顺序固定"""

    n: int
    counts: Dict[str, Count] = field(default_factory=dict)
    histograms: Dict[str, Dict[str, int]] = field(default_factory=dict)

    def __getitem__(self, key: str) -> Count:
        return self.counts[key]

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "counts": {k: {"count": c.count, "known": c.known} for k, c in self.counts.items()},
            "histograms": {k: dict(h) for k, h in self.histograms.items()},
        }


def _yes(question_id: str) -> Tuple[Callable, Callable]:
    """已回答即可判定，答 yes 计数"""
    return (lambda r: question_id in r.answers,
            lambda r: r.answer_value(question_id) == "yes")


def _dev_count(r: ProductRecord) -> bool:
    n = r.n_developers
    return isinstance(n, int) and not isinstance(n, bool)


def _languages_known(r: ProductRecord) -> bool:
    return bool(r.languages) and "unclear" not in r.languages


def _trackers(r: ProductRecord) -> frozenset:
    return frozenset(r.answer_value("maintain.issue_tracker", ()))


NOT_A_TRACKER = frozenset({"e-mail", "none", "unclear"})
VERSION_CONTROL_TOOLS = frozenset({"svn", "cvs", "git", "github"})

# (键, 可判定条件, 计数条件)
STAT_DEFINITIONS = (
    ("open_source", lambda r: r.development_model is not None, lambda r: r.is_open_source),
    ("alive", lambda r: True, lambda r: r.status == STATUS_ALIVE),
    ("dead", lambda r: True, lambda r: r.status == STATUS_DEAD),
    ("unclear", lambda r: True, lambda r: r.status not in (STATUS_ALIVE, STATUS_DEAD)),
    ("windows", lambda r: bool(r.platforms), lambda r: "Windows" in r.platforms),
    ("windows_only", lambda r: bool(r.platforms),
     lambda r: "Windows" in r.platforms and not r.platforms & {"Linux", "OSX"}),
    ("cpp", _languages_known, lambda r: "C++" in r.languages),
    ("few_devs", _dev_count, lambda r: r.n_developers <= 5),
    ("two_or_fewer_devs", _dev_count, lambda r: r.n_developers <= 2),
    ("install_instructions",) + _yes("install.instructions"),
    ("linear_instructions",
     lambda r: r.answer_value("install.instructions") == "yes" and "install.instructions_linear" in r.answers,
     lambda r: r.answer_value("install.instructions_linear") == "yes"),
    ("automated_install",) + _yes("install.automated"),
    ("install_validation",) + _yes("install.validation"),
    ("one_step_install", lambda r: "install.steps" in r.answers, lambda r: r.answer_value("install.steps") == 1),
    ("uninstall_unavailable", lambda r: "install.uninstall" in r.answers,
     lambda r: r.answer_value("install.uninstall") == "unavail"),
    ("issue_tracker_used", lambda r: bool(_trackers(r)) and _trackers(r) != {"unclear"},
     lambda r: bool(_trackers(r) - NOT_A_TRACKER)),
    ("version_control_used",
     lambda r: r.answer_value("maintain.version_control", "unclear") != "unclear",
     lambda r: r.answer_value("maintain.version_control") in VERSION_CONTROL_TOOLS),
    ("getting_started",) + _yes("usability.getting_started"),
    ("user_manual",) + _yes("usability.user_manual"),
    ("developer_guide",) + _yes("transparency.dev_process"),
)


def _count(records: Sequence[ProductRecord], known, hit) -> Count:
    judged = [r for r in records if known(r)]
    return Count(sum(1 for r in judged if hit(r)), len(judged))


def _histogram(values) -> Dict[str, int]:
    counter = Counter(v for v in values if v is not None)
    return dict(sorted(counter.items(), key=lambda kv: (-kv[1], kv[0])))


def summary_stats(records: Sequence[ProductRecord]) -> SummaryStats:
    """
    计算产品记录的汇总统计

    每项统计给出 (数量, 可判定记录数)；未回答或答 unclear 的记录不计入可判定数。

    Args:
        records: 产品记录

    Returns:
        SummaryStats: 统计结果
    """
    counts = {key: _count(records, known, hit) for key, known, hit in STAT_DEFINITIONS}
    one_step = {
        group: sum(1 for r in records if r.group == group and r.answer_value("install.steps") == 1)
        for group in PRODUCT_GROUPS
    }
    histograms = {
        "license_open_source": _histogram(r.license for r in records if r.is_open_source),
        "version_control": _histogram(r.answer_value("maintain.version_control") for r in records),
        "issue_tracker": _histogram(
            "+".join(sorted(_trackers(r))) if _trackers(r) else None for r in records
        ),
        "languages": _histogram(
            "+".join(sorted(r.languages)) if r.languages else None for r in records
        ),
        "one_step_install_by_group": one_step,
    }
    return SummaryStats(len(records), counts, histograms)


def group_partition(records: Sequence[ProductRecord]) -> Dict[str, List[str]]:
    """
    按分组划分产品名称

    Args:
        records: 产品记录

    Returns:
        dict: 分组 -> 产品名列表（保持记录顺序），三个分组总会出现
    """
    partition: Dict[str, List[str]] = {group: [] for group in PRODUCT_GROUPS}
    for record in records:
        partition.setdefault(record.group, []).append(record.name)
    return partition
