"""
cli模块 - 子命令实现
"""

from .commands import (cmd_config_init, cmd_rank, cmd_stats, cmd_validate, cmd_template_export,
                       format_ranking, format_stats)

__all__ = ['cmd_config_init', 'cmd_rank', 'cmd_stats', 'cmd_validate', 'cmd_template_export',
           'format_ranking', 'format_stats']
