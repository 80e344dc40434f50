"""
排名报告与绘图数据
"""

import datetime
from dataclasses import dataclass, field
from statistics import fmean
from typing import Dict, List, Optional, Sequence, Tuple

from ahp.ranking import AhpResult
from dataset.stats import group_partition
from models.constants import (PRODUCT_GROUPS, RELATIVE_SCORE_CAVEAT, REPORT_SCHEMA_VERSION,
                              TOOL_VERSION)
from models.errors import ReportError
from models.product import ProductRecord
from models.quality import Quality


@dataclass(frozen=True)
class ReportRow:
    """报告中的一行：一个产品的名次、最终得分与各质量属性得分"""

    rank: int
    name: str
    group: str
    final: float
    scores: Dict[Quality, float] = field(default_factory=dict)


@dataclass(frozen=True)
class RankingReport:
    """
    完整的排名报告

    rows 按最终得分降序排列，得分相同按名称排序，rank 为 1..n 的连续名次。
    """

    rows: Tuple[ReportRow, ...]
    qualities: Tuple[Quality, ...]
    method: str
    mapping_name: str
    weights: Dict[Quality, float]
    per_quality_cr: Dict[Quality, Optional[float]]
    group_means: Dict[str, Optional[float]]
    group_quality_means: Dict[Quality, Dict[str, Optional[float]]]
    reference_date: Optional[datetime.date] = None
    caveat: str = RELATIVE_SCORE_CAVEAT
    schema_version: int = REPORT_SCHEMA_VERSION
    tool_version: str = TOOL_VERSION

    def group_of(self) -> Dict[str, str]:
        return {row.name: row.group for row in self.rows}


@dataclass(frozen=True)
class Bar:
    product: str
    group: str
    score: float


@dataclass(frozen=True)
class PlotSeries:
    """一张条形图的数据，quality 为 None 表示最终得分"""

    label: str
    quality: Optional[Quality]
    bars: Tuple[Bar, ...]

    @property
    def slug(self) -> str:
        return self.quality.value if self.quality else "final"


def _ordered(pairs):
    """按得分降序、名称升序排列"""
    return sorted(pairs, key=lambda p: (-p[1], p[0]))


def _group_means(scores: Dict[str, float], partition: Dict[str, List[str]]) -> Dict[str, Optional[float]]:
    return {
        group: (fmean(scores[name] for name in names) if names else None)
        for group, names in partition.items()
    }


def build_report(result: AhpResult,
                 records: Optional[Sequence[ProductRecord]] = None,
                 reference_date: Optional[datetime.date] = None) -> RankingReport:
    """
    由计算结果构建排名报告

    Args:
        result (AhpResult): 层次分析结果
        records: 产品记录，给出时其产品集合必须与结果一致，分组以记录为准
        reference_date: 报告附带的参考日期

    Returns:
        RankingReport: 排名报告

    Raises:
        ReportError: 记录与结果的产品集合或分组不一致
    """
    groups = dict(zip(result.products, result.groups))
    if records is not None:
        names = [r.name for r in records]
        if sorted(names) != sorted(result.products):
            missing = sorted(set(result.products) - set(names))
            extra = sorted(set(names) - set(result.products))
            raise ReportError(f"records and grades cover different products (missing {missing}, extra {extra})")
        for record in records:
            if record.group != groups[record.name]:
                raise ReportError(
                    f"{record.name}: group {record.group!r} in records but {groups[record.name]!r} in grades"
                )
        partition = group_partition(records)
    else:
        partition = {group: [] for group in PRODUCT_GROUPS}
        for name, group in groups.items():
            partition.setdefault(group, []).append(name)

    final = dict(zip(result.products, result.final.weights))
    per_quality = {
        q: dict(zip(result.products, result.per_quality[q].weights)) for q in result.qualities
    }
    rows = tuple(
        ReportRow(
            rank=position,
            name=name,
            group=groups[name],
            final=score,
            scores={q: per_quality[q][name] for q in result.qualities},
        )
        for position, (name, score) in enumerate(_ordered(final.items()), start=1)
    )
    return RankingReport(
        rows=rows,
        qualities=result.qualities,
        method=result.method.value,
        mapping_name=result.mapping_name,
        weights=dict(result.weights.weights),
        per_quality_cr=dict(result.per_quality_cr),
        group_means=_group_means(final, partition),
        group_quality_means={q: _group_means(per_quality[q], partition) for q in result.qualities},
        reference_date=reference_date,
    )


def plot_series(report: RankingReport, quality: Optional[Quality] = None) -> PlotSeries:
    """
    取出一张条形图的数据

    Args:
        report (RankingReport): 排名报告
        quality: 质量属性，None 表示最终得分

    Returns:
        PlotSeries: 降序排列的条形数据
    """
    if quality is not None and quality not in report.qualities:
        raise ReportError(f"quality {quality.value} is not part of the report")
    groups = report.group_of()
    if quality is None:
        pairs = [(row.name, row.final) for row in report.rows]
        label = "Final AHP score"
    else:
        pairs = _ordered((row.name, row.scores[quality]) for row in report.rows)
        label = f"AHP score: {quality.display_name}"
    bars = tuple(Bar(name, groups[name], score) for name, score in pairs)
    return PlotSeries(label, quality, bars)


def all_series(report: RankingReport) -> List[PlotSeries]:
    """每个质量属性一张图，再加最终得分图"""
    return [plot_series(report, q) for q in report.qualities] + [plot_series(report)]
