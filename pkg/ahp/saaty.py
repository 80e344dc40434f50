"""
评分到 Saaty 标度的映射
"""

from numbers import Integral
from typing import Callable, Dict

from models.constants import GRADE_MAX, GRADE_MIN, SAATY_MAX
from models.errors import ConfigError, GradeError

SaatyMapping = Callable[[int, int], float]


def _check_grade(grade: int) -> None:
    if isinstance(grade, bool) or not isinstance(grade, Integral) or not GRADE_MIN <= grade <= GRADE_MAX:
        raise GradeError(f"grade must be an integer in {GRADE_MIN}..{GRADE_MAX}, got {grade!r}")


def grade_pair_to_saaty(g_j: int, g_k: int) -> float:
    """
    两个产品评分之差映射为 Saaty 判断值

    g_j >= g_k 时取 min(g_j - g_k + 1, 9)，否则取其倒数。

    Args:
        g_j (int): 产品 j 的评分
        g_k (int): 产品 k 的评分

    Returns:
        float: 1/9 到 9 之间的判断值
    """
    _check_grade(g_j)
    _check_grade(g_k)
    value = float(min(abs(g_j - g_k) + 1, SAATY_MAX))
    return value if g_j >= g_k else 1.0 / value


def grade_ratio_to_saaty(g_j: int, g_k: int) -> float:
    """评分之比截断到 [1/9, 9] 作为判断值"""
    _check_grade(g_j)
    _check_grade(g_k)
    if g_j >= g_k:
        return min(g_j / g_k, SAATY_MAX)
    return 1.0 / min(g_k / g_j, SAATY_MAX)


SAATY_MAPPINGS: Dict[str, SaatyMapping] = {
    "difference": grade_pair_to_saaty,
    "ratio": grade_ratio_to_saaty,
}


def get_mapping(name: str) -> SaatyMapping:
    """按名称取映射函数"""
    try:
        return SAATY_MAPPINGS[name]
    except KeyError:
        raise ConfigError(f"unknown saaty mapping {name!r}, expected one of {sorted(SAATY_MAPPINGS)}") from None
