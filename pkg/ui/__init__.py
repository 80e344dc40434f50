"""
ui模块 - 基于 pygame 的 PNG 图表渲染
"""

from .renderer import ChartRenderer, render_png_bars

__all__ = ['ChartRenderer', 'render_png_bars']
