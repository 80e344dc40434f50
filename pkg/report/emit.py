"""
报告的 JSON / CSV 输出与结果目录写入
"""

import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Union

from models.constants import (FIGURES_DIR_NAME, FINAL_CSV_NAME, REPORT_FILE_NAME,
                              SCORE_DECIMALS)
from models.errors import ReportError

from .report import PlotSeries, RankingReport, all_series
from .svg import ChartStyle, render_svg_bars

logger = logging.getLogger(__name__)


def _number(value: float) -> str:
    if not math.isfinite(value):
        raise ReportError(f"cannot emit non-finite number {value!r}")
    return f"{value:.{SCORE_DECIMALS}f}"


def _encode(value: Any, indent: int, level: int = 0) -> str:
    """固定小数位的 JSON 编码，浮点数一律保留 6 位"""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _number(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    inner = " " * (indent * (level + 1))
    outer = " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent, level + 1)}"
                 for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + outer + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{inner}{_encode(v, indent, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + outer + "]"
    raise ReportError(f"cannot emit value of type {type(value).__name__}")


def report_to_json(report: RankingReport) -> Dict[str, Any]:
    """报告转换为 JSON 文档（键顺序固定）"""
    return {
        "schema_version": report.schema_version,
        "tool_version": report.tool_version,
        "reference_date": report.reference_date.isoformat() if report.reference_date else None,
        "method": report.method,
        "saaty_mapping": report.mapping_name,
        "caveat": report.caveat,
        "qualities": [q.value for q in report.qualities],
        "weights": {q.value: w for q, w in report.weights.items()},
        "per_quality_cr": {q.value: cr for q, cr in report.per_quality_cr.items()},
        "group_means": dict(report.group_means),
        "group_quality_means": {q.value: dict(m) for q, m in report.group_quality_means.items()},
        "rows": [
            {
                "rank": row.rank,
                "name": row.name,
                "group": row.group,
                "final": row.final,
                "scores": {q.value: s for q, s in row.scores.items()},
            }
            for row in report.rows
        ],
    }


def emit_json(report: RankingReport) -> str:
    """
    报告序列化为 JSON 文本

    Args:
        report (RankingReport): 排名报告

    Returns:
        str: 确定性的 JSON 文本，得分保留 6 位小数
    """
    return _encode(report_to_json(report), indent=2) + "\n"


def emit_csv(series: PlotSeries) -> str:
    """
    一张图的数据写成 CSV

    Args:
        series (PlotSeries): 条形图数据

    Returns:
        str: product,group,score 三列，得分保留 6 位小数
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["product", "group", "score"])
    for bar in series.bars:
        writer.writerow([bar.product, bar.group, _number(bar.score)])
    return buffer.getvalue()


def write_outputs(report: RankingReport,
                  out_dir: Union[str, Path],
                  style: ChartStyle = ChartStyle(),
                  png: bool = False) -> List[Path]:
    """
    把报告写入结果目录

    目录顶层为 report.json、每个质量属性一个 CSV 与 final.csv，
    图表写在 figures/ 下。

    Args:
        report (RankingReport): 排名报告
        out_dir: 结果目录，不存在时创建
        style (ChartStyle): 图表样式
        png (bool): 是否同时输出 PNG

    Returns:
        list: 写出的文件路径
    """
    out_dir = Path(out_dir)
    figures = out_dir / FIGURES_DIR_NAME
    figures.mkdir(parents=True, exist_ok=True)
    written = []

    def write(path: Path, text: str):
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        written.append(path)

    write(out_dir / REPORT_FILE_NAME, emit_json(report))
    renderer = None
    if png:
        from ui.renderer import ChartRenderer
        renderer = ChartRenderer(style)
    for series in all_series(report):
        csv_name = FINAL_CSV_NAME if series.quality is None else f"{series.slug}.csv"
        write(out_dir / csv_name, emit_csv(series))
        write(figures / f"ahp_{series.slug}.svg", render_svg_bars(series, style))
        if renderer is not None:
            png_path = figures / f"ahp_{series.slug}.png"
            renderer.save_png(series, png_path)
            written.append(png_path)
    logger.info("wrote %d files to %s", len(written), out_dir)
    return written
