"""
子命令实现
每个命令返回退出码：0 成功，1 校验失败，2 文件读写失败
"""

import datetime
import functools
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Union

from ahp.ranking import run_ahp
from dataset.grades import load_grade_matrix
from dataset.liveness import reclassify
from dataset.records import load_records
from dataset.stats import SummaryStats, summary_stats
from grading.schema import dumps_template, loads_template
from grading.template import builtin_template
from models.constants import EXIT_IO, EXIT_OK, EXIT_VALIDATION, STATS_FILE_NAME
from models.errors import AhpToolError, DatasetError
from report.emit import write_outputs
from report.report import RankingReport, build_report
from utils.config_manager import ConfigManager, RunConfig, load_weights

logger = logging.getLogger(__name__)


def _error(message: str):
    print(message, file=sys.stderr)


def exit_codes(command: Callable[..., int]) -> Callable[..., int]:
    """把可预期的异常映射为退出码，校验问题逐行写到标准错误"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs) -> int:
        try:
            return command(*args, **kwargs)
        except OSError as e:
            _error(f"error: {e}")
            return EXIT_IO
        except DatasetError as e:
            for message in e.messages:
                _error(message)
            return EXIT_VALIDATION
        except AhpToolError as e:
            _error(f"error: {e}")
            return EXIT_VALIDATION

    return wrapper


def format_ranking(report: RankingReport) -> str:
    """最终排名表"""
    width = max([len("product")] + [len(row.name) for row in report.rows])
    lines = [f"{'rank':>4}  {'product':<{width}}  {'group':<20}  final"]
    for row in report.rows:
        lines.append(f"{row.rank:>4}  {row.name:<{width}}  {row.group:<20}  {row.final:.6f}")
    return "\n".join(lines)


def format_stats(stats: SummaryStats) -> str:
    """汇总统计，每行 `键: 数量/可判定数`，数量列对齐"""
    width = max((len(key) for key in stats.counts), default=0) + 1
    lines = [f"{key + ':':<{width}} {count}" for key, count in stats.counts.items()]
    for name, histogram in stats.histograms.items():
        entries = ", ".join(f"{k}={v}" for k, v in histogram.items())
        lines.append(f"{name}: {entries}" if entries else f"{name}: -")
    return "\n".join(lines)


@exit_codes
def cmd_rank(config: RunConfig) -> int:
    """
    读取评分矩阵，计算排名并写出报告、CSV 与图表

    Args:
        config (RunConfig): 运行设置

    Returns:
        int: 退出码
    """
    reference_date = config.reference_date or datetime.date.today()
    matrix = load_grade_matrix(config.grades_path)
    records = None
    if config.records_path is not None:
        records = load_records(config.records_path, builtin_template(), config.strict).records
        records = reclassify(records, reference_date)
    weights = load_weights(config.weights, matrix.qualities)

    result = run_ahp(
        matrix,
        weights,
        method=config.priority_method,
        mapping_name=config.saaty_mapping,
        tol=config.eigen_tol,
        max_iter=config.eigen_max_iter,
        workers=config.workers,
    )
    for quality, ratio in result.per_quality_cr.items():
        logger.debug("%s: CR=%s", quality.value, "n/a" if ratio is None else f"{ratio:.6f}")
    report = build_report(result, records, reference_date)
    write_outputs(report, config.output_dir, png=config.png)
    print(format_ranking(report))
    return EXIT_OK


@exit_codes
def cmd_stats(records_path: Union[str, Path],
              reference_date: Optional[datetime.date] = None,
              out_dir: Union[str, Path] = ".",
              strict: bool = True) -> int:
    """
    打印产品记录的汇总统计并写出 stats.json

    Args:
        records_path: 产品记录文件
        reference_date: 给出时按此日期重新判定存活状态
        out_dir: stats.json 所在目录
        strict (bool): 严格校验

    Returns:
        int: 退出码
    """
    records = load_records(records_path, builtin_template(), strict).records
    if reference_date is not None:
        records = reclassify(records, reference_date)
    stats = summary_stats(records)

    doc = {"reference_date": reference_date.isoformat() if reference_date else None}
    doc.update(stats.to_json())
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    with open(out_dir / STATS_FILE_NAME, "w", encoding="utf-8", newline="") as f:
        f.write(json.dumps(doc, ensure_ascii=False, indent=2) + "\n")
    print(format_stats(stats))
    return EXIT_OK


def _cross_check(records, matrix) -> List[str]:
    """记录与评分矩阵的产品集合和分组是否一致"""
    problems = []
    grades_groups = matrix.group_of()
    record_groups = {r.name: r.group for r in records}
    for name in sorted(set(grades_groups) - set(record_groups)):
        problems.append(f"{name}: graded but has no record")
    for name in sorted(set(record_groups) - set(grades_groups)):
        problems.append(f"{name}: has a record but no grades")
    for name in sorted(set(grades_groups) & set(record_groups)):
        if grades_groups[name] != record_groups[name]:
            problems.append(f"{name}: group {record_groups[name]} in records but {grades_groups[name]} in grades")
    return problems


@exit_codes
def cmd_validate(records_path: Optional[Union[str, Path]] = None,
                 grades_path: Optional[Union[str, Path]] = None) -> int:
    """
    校验产品记录与评分矩阵，列出全部问题

    Args:
        records_path: 产品记录文件
        grades_path: 评分矩阵文件

    Returns:
        int: 没有问题时为 0，否则为 1
    """
    problems: List[str] = []
    records = matrix = None
    if records_path is not None:
        try:
            parsed = load_records(records_path, builtin_template(), strict=False)
            records = parsed.records
            problems += [str(v) for v in parsed.violations]
        except DatasetError as e:
            problems += e.messages
    if grades_path is not None:
        try:
            matrix = load_grade_matrix(grades_path)
        except DatasetError as e:
            problems += e.messages
    if records is not None and matrix is not None:
        problems += _cross_check(records, matrix)

    for problem in problems:
        _error(problem)
    print(f"{len(problems)} violation{'' if len(problems) == 1 else 's'}")
    return EXIT_OK if not problems else EXIT_VALIDATION


@exit_codes
def cmd_template_export(out: Optional[Union[str, Path]] = None,
                        check: Optional[Union[str, Path]] = None) -> int:
    """
    导出内置模板，或检查模板文件是否与内置模板一致

    Args:
        out: 输出文件，省略时打印到标准输出
        check: 要检查的模板文件

    Returns:
        int: 退出码
    """
    template = builtin_template()
    if check is not None:
        with open(check, "r", encoding="utf-8") as f:
            loaded = loads_template(f.read())
        if loaded != template:
            _error(f"{check}: template differs from the built-in template")
            return EXIT_VALIDATION
        print(f"{check}: matches the built-in template ({template.question_count} questions)")
        return EXIT_OK

    text = dumps_template(template)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.debug("wrote %s", out)
    return EXIT_OK



def cmd_config_init(manager: ConfigManager) -> int:
    """
    把当前生效的配置（默认值加上已有配置文件）写入配置文件

    Args:
        manager (ConfigManager): 已加载的配置

    Returns:
        int: 退出码，写入失败为 2
    """
    if not manager.save_config():
        _error(f"error: could not write {manager.config_file}")
        return EXIT_IO
    print(f"wrote {manager.config_file}")
    return EXIT_OK
