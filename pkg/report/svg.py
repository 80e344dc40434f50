"""
确定性的 SVG 水平条形图
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Tuple
from xml.sax.saxutils import escape, quoteattr

from models.constants import GROUP_COLORS, GROUP_DISPLAY_NAMES, GRAY, LIGHT_GRAY
from models.errors import ReportError

from .report import PlotSeries


def hex_color(rgb: Tuple[int, int, int]) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


@dataclass(frozen=True)
class ChartStyle:
    """图表尺寸与配色"""

    width: int = 860
    bar_height: int = 16
    bar_gap: int = 6
    label_width: int = 150
    value_width: int = 80
    margin_top: int = 56
    margin_bottom: int = 64
    margin_left: int = 12
    margin_right: int = 16
    font_size: int = 12
    font_family: str = "sans-serif"
    tick_count: int = 5
    colors: Dict[str, Tuple[int, int, int]] = field(default_factory=lambda: dict(GROUP_COLORS))

    @property
    def plot_left(self) -> int:
        return self.margin_left + self.label_width

    @property
    def plot_width(self) -> int:
        return self.width - self.plot_left - self.value_width - self.margin_right

    def height_for(self, n_bars: int) -> int:
        return self.margin_top + n_bars * (self.bar_height + self.bar_gap) + self.margin_bottom

    def color_of(self, group: str) -> Tuple[int, int, int]:
        return self.colors.get(group, GRAY)


def nice_max(vmax: float) -> float:
    """
    坐标轴上限取 1、2、5 乘以 10 的幂中不小于 vmax 的最小值

    Args:
        vmax (float): 数据最大值

    Returns:
        float: 坐标轴上限，vmax <= 0 时返回 1
    """
    if vmax <= 0:
        return 1.0
    magnitude = 10 ** math.floor(math.log10(vmax))
    for step in (1, 2, 5, 10):
        if vmax <= step * magnitude * (1 + 1e-12):
            return step * magnitude
    return 10 * magnitude


def bar_length(score: float, axis_max: float, plot_width: float) -> float:
    """条形长度与得分成正比"""
    return plot_width * (score / axis_max)


def render_svg_bars(series: PlotSeries, style: ChartStyle = ChartStyle()) -> str:
    """
    渲染一张水平条形图

    条形按 series 的顺序自上而下排列，颜色区分产品分组。
    相同输入输出逐字节相同。

    Args:
        series (PlotSeries): 条形图数据
        style (ChartStyle): 图表样式

    Returns:
        str: 自包含的 SVG 1.1 文档
    """
    if not series.bars:
        raise ReportError(f"cannot draw an empty series: {series.label}")
    n = len(series.bars)
    width, height = style.width, style.height_for(n)
    x0, top = style.plot_left, style.margin_top
    plot_w = style.plot_width
    axis_max = nice_max(max((bar.score for bar in series.bars), default=0.0))
    y_bottom = top + n * (style.bar_height + style.bar_gap)
    fs = style.font_size

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family={quoteattr(style.font_family)} font-size="{fs}">',
        f'  <title>{escape(series.label)}</title>',
        f'  <rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'  <text x="{x0}" y="{top - 28}" font-size="{fs + 4}" font-weight="bold">{escape(series.label)}</text>',
    ]

    for i in range(style.tick_count + 1):
        x = x0 + plot_w * i / style.tick_count
        value = axis_max * i / style.tick_count
        out.append(f'  <line x1="{x:.2f}" y1="{top}" x2="{x:.2f}" y2="{y_bottom}" stroke="{hex_color(LIGHT_GRAY)}" stroke-width="1"/>')
        out.append(f'  <text x="{x:.2f}" y="{y_bottom + 16}" text-anchor="middle">{value:.3f}</text>')
    out.append(f'  <line x1="{x0}" y1="{top}" x2="{x0}" y2="{y_bottom}" stroke="#000000" stroke-width="1"/>')

    y = top + style.bar_gap / 2
    for bar in series.bars:
        length = bar_length(bar.score, axis_max, plot_w)
        mid = y + style.bar_height / 2
        out.append(f'  <text x="{x0 - 6}" y="{mid:.2f}" text-anchor="end" dominant-baseline="middle">'
                   f'{escape(bar.product)}</text>')
        out.append(f'  <rect x="{x0}" y="{y:.2f}" width="{length:.2f}" height="{style.bar_height}" '
                   f'fill="{hex_color(style.color_of(bar.group))}"/>')
        out.append(f'  <text x="{x0 + length + 6:.2f}" y="{mid:.2f}" dominant-baseline="middle">'
                   f'{bar.score:.4f}</text>')
        y += style.bar_height + style.bar_gap

    legend_y = y_bottom + 40
    legend_x = x0
    for group, name in GROUP_DISPLAY_NAMES.items():
        out.append(f'  <rect x="{legend_x}" y="{legend_y - 10}" width="12" height="12" '
                   f'fill="{hex_color(style.color_of(group))}"/>')
        out.append(f'  <text x="{legend_x + 18}" y="{legend_y}">{escape(name)}</text>')
        legend_x += 170

    out.append('</svg>')
    return "\n".join(out) + "\n"
