"""
GIS 软件质量评估工具
读取评分模板与评分数据，按质量属性和总体进行层次分析排名

用法:
    python main.py rank --grades fixtures/grades-sample.csv --out out/
    python main.py stats --records fixtures/appendix-b-records.json
    python main.py validate --records fixtures/appendix-b-records.json --grades fixtures/grades-sample.csv
    python main.py template export --out template.json
    python main.py config init
"""

import argparse
import datetime
import sys
from typing import List, Optional

from cli.commands import cmd_config_init, cmd_rank, cmd_stats, cmd_template_export, cmd_validate
from models.constants import EXIT_VALIDATION, TOOL_VERSION
from models.errors import ConfigError
from utils.config_manager import ConfigManager, RunConfig
from utils.logger import setup_logging


def iso_date(text: str) -> datetime.date:
    """命令行日期参数"""
    try:
        return datetime.date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an ISO date (YYYY-MM-DD): {text!r}") from None


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """构建命令行解析器"""
    parser = argparse.ArgumentParser(
        prog="gis-ahp",
        description="Grade GIS software products and rank them with the Analytic Hierarchy Process.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="print debug logging")
    parser.add_argument("--config", help="JSON config file (default: ./ahp_config.json)")
    sub = parser.add_subparsers(dest="command", required=True)

    rank = sub.add_parser("rank", help="rank products per quality and overall")
    rank.add_argument("--grades", required=True, help="grade matrix CSV")
    rank.add_argument("--records", help="product records JSON (enables the group check against records)")
    rank.add_argument("--weights", help="'equal' or a JSON file mapping quality id to weight")
    rank.add_argument("--method", choices=["column", "eigen"], help="priority derivation method")
    rank.add_argument("--mapping", dest="saaty_mapping", choices=["difference", "ratio"],
                      help="grade to Saaty-scale mapping")
    rank.add_argument("--out", required=True, help="output directory")
    rank.add_argument("--reference-date", type=iso_date, help="date echoed into the report (default: today)")
    rank.add_argument("--strict", action=argparse.BooleanOptionalAction, default=None,
                      help="fail on any record violation")
    rank.add_argument("--png", action="store_true", default=None, help="also write PNG figures")
    rank.add_argument("--workers", type=positive_int, help="threads for per-quality work (default: 1)")

    stats = sub.add_parser("stats", help="print summary statistics of product records")
    stats.add_argument("--records", required=True, help="product records JSON")
    stats.add_argument("--reference-date", type=iso_date, help="re-derive liveness against this date")
    stats.add_argument("--out", default=".", help="directory for stats.json (default: .)")
    stats.add_argument("--strict", action=argparse.BooleanOptionalAction, default=None,
                       help="fail on any record violation")

    validate = sub.add_parser("validate", help="check records and grades, listing every violation")
    validate.add_argument("--records", help="product records JSON")
    validate.add_argument("--grades", help="grade matrix CSV")

    template = sub.add_parser("template", help="grading template operations")
    template_sub = template.add_subparsers(dest="template_command", required=True)
    export = template_sub.add_parser("export", help="export the built-in template as JSON")
    export.add_argument("--out", help="output file (default: standard output)")
    export.add_argument("--check", help="compare a template file with the built-in template")

    config = sub.add_parser("config", help="config file operations")
    config_sub = config.add_subparsers(dest="config_command", required=True)
    config_sub.add_parser("init", help="write the effective settings to the config file")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    程序入口

    Args:
        argv: 命令行参数，默认取 sys.argv

    Returns:
        int: 退出码
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    manager = ConfigManager(args.config)

    if args.command == "rank":
        try:
            config = RunConfig.from_sources({
                "grades_path": args.grades,
                "records_path": args.records,
                "output_dir": args.out,
                "weights": args.weights,
                "method": args.method,
                "saaty_mapping": args.saaty_mapping,
                "reference_date": args.reference_date,
                "strict": args.strict,
                "png": args.png,
                "workers": args.workers,
            }, manager)
        except ConfigError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_VALIDATION
        return cmd_rank(config)

    if args.command == "stats":
        strict = manager.get("strict") if args.strict is None else args.strict
        return cmd_stats(args.records, args.reference_date, args.out, bool(strict))

    if args.command == "validate":
        if args.records is None and args.grades is None:
            parser.error("validate needs --records and/or --grades")
        return cmd_validate(args.records, args.grades)

    if args.command == "config":
        return cmd_config_init(manager)

    return cmd_template_export(args.out, args.check)


if __name__ == "__main__":
    sys.exit(main())
