"""
日志设置
"""

import logging

LOG_FORMAT = "%(levelname)s: %(message)s"


def setup_logging(verbose: bool = False):
    """
    配置根日志记录器

    Args:
        verbose (bool): True 时输出 DEBUG 级别日志，否则只输出 WARNING 及以上
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        force=True,
    )
