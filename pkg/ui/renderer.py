"""
图表渲染模块
用 pygame 在离屏 Surface 上绘制条形图并保存为 PNG
"""

import logging
import os
from pathlib import Path
from typing import Union

os.environ.setdefault("SDL_VIDEODRIVER", "dummy")

import pygame

from models.constants import BLACK, GROUP_DISPLAY_NAMES, LIGHT_GRAY, WHITE
from report.report import PlotSeries
from report.svg import ChartStyle, bar_length, nice_max

logger = logging.getLogger(__name__)


class ChartRenderer:
    """PNG 图表渲染类，与 SVG 使用相同的布局"""

    def __init__(self, style: ChartStyle = ChartStyle()):
        """
        初始化渲染器

        Args:
            style (ChartStyle): 图表尺寸与配色
        """
        self.style = style
        pygame.font.init()
        self.init_fonts()

    def init_fonts(self):
        """初始化字体"""
        try:
            self.font = pygame.font.SysFont(self.style.font_family, self.style.font_size + 2)
            self.title_font = pygame.font.SysFont(self.style.font_family, self.style.font_size + 6, bold=True)
        except Exception:
            # 找不到系统字体时使用 pygame 自带字体
            self.font = pygame.font.Font(None, self.style.font_size + 4)
            self.title_font = pygame.font.Font(None, self.style.font_size + 10)

    def draw_text(self, surface, text, position, font=None, anchor="left"):
        """
        绘制一段文字

        Args:
            surface: 目标 Surface
            text (str): 文字
            position (tuple): 锚点坐标
            font: 字体，默认正文字体
            anchor (str): left / right / center，锚点相对文字的位置
        """
        image = (font or self.font).render(text, True, BLACK)
        rect = image.get_rect()
        x, y = position
        if anchor == "right":
            rect.midright = (x, y)
        elif anchor == "center":
            rect.center = (x, y)
        else:
            rect.midleft = (x, y)
        surface.blit(image, rect)

    def draw_chart(self, series: PlotSeries) -> pygame.Surface:
        """
        绘制条形图

        Args:
            series (PlotSeries): 条形图数据

        Returns:
            pygame.Surface: 绘制好的图像
        """
        style = self.style
        n = len(series.bars)
        surface = pygame.Surface((style.width, style.height_for(n)))
        surface.fill(WHITE)
        x0, top = style.plot_left, style.margin_top
        plot_w = style.plot_width
        y_bottom = top + n * (style.bar_height + style.bar_gap)
        axis_max = nice_max(max((bar.score for bar in series.bars), default=0.0))

        self.draw_text(surface, series.label, (x0, top - 28), self.title_font)

        # 网格与刻度
        for i in range(style.tick_count + 1):
            x = round(x0 + plot_w * i / style.tick_count)
            pygame.draw.line(surface, LIGHT_GRAY, (x, top), (x, y_bottom))
            self.draw_text(surface, f"{axis_max * i / style.tick_count:.3f}", (x, y_bottom + 16), anchor="center")
        pygame.draw.line(surface, BLACK, (x0, top), (x0, y_bottom))

        # 条形与标签
        y = top + style.bar_gap / 2
        for bar in series.bars:
            length = bar_length(bar.score, axis_max, plot_w)
            mid = round(y + style.bar_height / 2)
            self.draw_text(surface, bar.product, (x0 - 6, mid), anchor="right")
            pygame.draw.rect(surface, style.color_of(bar.group),
                             (x0, round(y), max(1, round(length)), style.bar_height))
            self.draw_text(surface, f"{bar.score:.4f}", (round(x0 + length + 6), mid))
            y += style.bar_height + style.bar_gap

        # 图例
        legend_x, legend_y = x0, y_bottom + 40
        for group, name in GROUP_DISPLAY_NAMES.items():
            pygame.draw.rect(surface, style.color_of(group), (legend_x, legend_y - 6, 12, 12))
            self.draw_text(surface, name, (legend_x + 18, legend_y))
            legend_x += 170
        return surface

    def save_png(self, series: PlotSeries, path: Union[str, Path]) -> Path:
        """
        绘制并保存为 PNG

        Args:
            series (PlotSeries): 条形图数据
            path: 输出路径

        Returns:
            Path: 输出路径
        """
        path = Path(path)
        pygame.image.save(self.draw_chart(series), str(path))
        logger.debug("saved %s", path)
        return path


def render_png_bars(series: PlotSeries, path: Union[str, Path], style: ChartStyle = ChartStyle()) -> Path:
    """绘制一张条形图并保存为 PNG"""
    return ChartRenderer(style).save_png(series, path)
