"""
utils模块 - 配置管理与日志设置
"""

from .config_manager import ConfigManager, RunConfig, load_weights
from .logger import setup_logging

__all__ = ['ConfigManager', 'RunConfig', 'load_weights', 'setup_logging']
