"""
report模块 - 排名报告、JSON/CSV 输出与 SVG 图表
"""

from .report import ReportRow, RankingReport, Bar, PlotSeries, build_report, plot_series, all_series
from .svg import ChartStyle, render_svg_bars, nice_max, bar_length
from .emit import emit_json, emit_csv, report_to_json, write_outputs

__all__ = ['ReportRow', 'RankingReport', 'Bar', 'PlotSeries', 'build_report', 'plot_series',
           'all_series', 'ChartStyle', 'render_svg_bars', 'nice_max', 'bar_length',
           'emit_json', 'emit_csv', 'report_to_json', 'write_outputs']
