"""
按质量属性排名并汇总为最终得分
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from dataset.grades import GradeMatrix
from models.constants import (CONSISTENCY_RATIO_LIMIT, EIGEN_MAX_ITERATIONS, EIGEN_TOLERANCE,
                              WEIGHT_RENORMALIZE_THRESHOLD, WEIGHT_SUM_TOLERANCE)
from models.errors import AhpError, ConfigError, ConvergenceError, RandomIndexError
from models.quality import Quality, ordered_qualities

from .consistency import consistency_ratio
from .eigen import priority_eigenvector
from .matrix import ComparisonMatrix, PriorityVector, build_comparison_matrix, column_priority
from .saaty import SaatyMapping, get_mapping, grade_pair_to_saaty

logger = logging.getLogger(__name__)


class PriorityMethod(Enum):
    """优先级向量的求解方法"""

    COLUMN_NORMALIZATION = "column_normalization"
    EIGENVECTOR = "eigenvector"

    @classmethod
    def from_flag(cls, flag: str) -> "PriorityMethod":
        """命令行取值 column / eigen 转换为方法"""
        aliases = {"column": cls.COLUMN_NORMALIZATION, "eigen": cls.EIGENVECTOR}
        if flag in aliases:
            return aliases[flag]
        try:
            return cls(flag)
        except ValueError:
            raise ConfigError(f"unknown method {flag!r}, expected column or eigen") from None


@dataclass(frozen=True)
class CriteriaWeights:
    """质量属性权重，非负且和为 1"""

    weights: Mapping[Quality, float]

    def __post_init__(self):
        ordered = {q: float(self.weights[q]) for q in ordered_qualities(self.weights)}
        if len(ordered) != len(self.weights):
            raise ConfigError("criteria weights must be keyed by Quality")
        object.__setattr__(self, "weights", ordered)
        if not ordered:
            raise ConfigError("criteria weights are empty")
        negative = [q.value for q, w in ordered.items() if not w >= 0.0]
        if negative:
            raise ConfigError(f"criteria weights must be non-negative: {negative}")
        total = sum(ordered.values())
        if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ConfigError(f"criteria weights sum to {total!r}, not 1")

    @classmethod
    def equal(cls, qualities: Sequence[Quality]) -> "CriteriaWeights":
        """每个质量属性取相同权重"""
        qualities = ordered_qualities(qualities)
        return cls({q: 1.0 / len(qualities) for q in qualities})

    @classmethod
    def from_raw(cls, raw: Mapping[str, float], qualities: Sequence[Quality]) -> "CriteriaWeights":
        """
        由权重文件的内容构造权重

        未出现的质量属性取 0；和偏离 1 超过阈值时重新归一化并给出警告。

        Args:
            raw: 质量属性 id -> 权重
            qualities: 本次参与排名的质量属性

        Returns:
            CriteriaWeights: 权重
        """
        qualities = ordered_qualities(qualities)
        values: Dict[Quality, float] = {q: 0.0 for q in qualities}
        for key, weight in raw.items():
            try:
                quality = Quality(key)
            except ValueError:
                raise ConfigError(f"unknown quality in weights: {key!r}") from None
            if isinstance(weight, bool) or not isinstance(weight, (int, float)):
                raise ConfigError(f"weight for {key} is not a number: {weight!r}")
            if weight < 0:
                raise ConfigError(f"weight for {key} is negative: {weight}")
            if quality not in values:
                if weight > 0:
                    logger.warning("weight for %s ignored: quality is not graded", key)
                continue
            values[quality] = float(weight)
        total = sum(values.values())
        if total <= 0.0:
            raise ConfigError("criteria weights are all zero")
        if abs(total - 1.0) > WEIGHT_RENORMALIZE_THRESHOLD:
            logger.warning("criteria weights sum to %.6f; renormalizing", total)
        return cls({q: w / total for q, w in values.items()})

    @property
    def qualities(self) -> Tuple[Quality, ...]:
        return tuple(self.weights)

    def to_json(self) -> Dict[str, float]:
        return {q.value: w for q, w in self.weights.items()}


@dataclass(frozen=True)
class AhpResult:
    """一次完整运行的结果"""

    products: Tuple[str, ...]
    groups: Tuple[str, ...]
    qualities: Tuple[Quality, ...]
    per_quality: Dict[Quality, PriorityVector]
    per_quality_cr: Dict[Quality, Optional[float]]
    final: PriorityVector
    method: PriorityMethod
    weights: CriteriaWeights
    mapping_name: str = "difference"
    matrices: Dict[Quality, ComparisonMatrix] = field(default_factory=dict, repr=False, compare=False)


def solve_priority(matrix: ComparisonMatrix,
                   method: PriorityMethod = PriorityMethod.COLUMN_NORMALIZATION,
                   tol: float = EIGEN_TOLERANCE,
                   max_iter: int = EIGEN_MAX_ITERATIONS) -> PriorityVector:
    """按指定方法由比较矩阵求优先级向量"""
    if method is PriorityMethod.EIGENVECTOR:
        return priority_eigenvector(matrix, tol, max_iter)
    return column_priority(matrix)


def rank_quality(matrix: GradeMatrix,
                 quality: Quality,
                 method: PriorityMethod = PriorityMethod.COLUMN_NORMALIZATION,
                 mapping: SaatyMapping = grade_pair_to_saaty,
                 tol: float = EIGEN_TOLERANCE,
                 max_iter: int = EIGEN_MAX_ITERATIONS) -> PriorityVector:
    """
    对单个质量属性排名

    Args:
        matrix (GradeMatrix): 评分矩阵
        quality (Quality): 质量属性
        method (PriorityMethod): 求解方法
        mapping: 评分对到判断值的映射

    Returns:
        PriorityVector: 带产品名称的优先级向量
    """
    comparison = build_comparison_matrix(matrix.column(quality), mapping)
    return solve_priority(comparison, method, tol, max_iter).labelled(matrix.products)


def aggregate(per_quality: Mapping[Quality, PriorityVector], weights: CriteriaWeights) -> PriorityVector:
    """
    按权重汇总各质量属性的优先级向量

    Args:
        per_quality: 质量属性 -> 优先级向量，产品顺序必须一致
        weights (CriteriaWeights): 权重，键必须与 per_quality 相同

    Returns:
        PriorityVector: 最终得分
    """
    if not per_quality:
        raise AhpError("nothing to aggregate")
    if set(per_quality) != set(weights.weights):
        raise AhpError("criteria weights do not match the ranked qualities")
    vectors = [per_quality[q] for q in ordered_qualities(per_quality)]
    first = vectors[0]
    for vector in vectors[1:]:
        if len(vector) != len(first) or vector.products != first.products:
            raise AhpError("per-quality rankings cover mismatched product lists")
    total = np.zeros(len(first))
    for quality, vector in zip(ordered_qualities(per_quality), vectors):
        total += weights.weights[quality] * vector.array
    return PriorityVector(tuple(total), first.products)


def _consistency(matrix: ComparisonMatrix, quality: Quality, tol: float, max_iter: int) -> Optional[float]:
    try:
        ratio = consistency_ratio(matrix, tol, max_iter)
    except RandomIndexError as e:
        logger.debug("%s: consistency ratio skipped: %s", quality.value, e)
        return None
    except ConvergenceError as e:
        logger.warning("%s: consistency ratio left empty: %s", quality.value, e)
        return None
    if ratio > CONSISTENCY_RATIO_LIMIT:
        logger.info("%s: consistency ratio %.4f exceeds %.2f", quality.value, ratio, CONSISTENCY_RATIO_LIMIT)
    return ratio


def run_ahp(matrix: GradeMatrix,
            weights: Optional[CriteriaWeights] = None,
            method: PriorityMethod = PriorityMethod.COLUMN_NORMALIZATION,
            mapping_name: str = "difference",
            tol: float = EIGEN_TOLERANCE,
            max_iter: int = EIGEN_MAX_ITERATIONS,
            workers: int = 1) -> AhpResult:
    """
    完整运行一次层次分析

    各质量属性互不依赖，workers > 1 时并行计算，结果与串行一致。

    Args:
        matrix (GradeMatrix): 评分矩阵
        weights (CriteriaWeights): 权重，默认等权
        method (PriorityMethod): 求解方法
        mapping_name (str): Saaty 映射名称
        workers (int): 并行线程数

    Returns:
        AhpResult: 各质量属性与最终的优先级向量
    """
    mapping = get_mapping(mapping_name)
    weights = weights or CriteriaWeights.equal(matrix.qualities)

    def one(quality: Quality):
        comparison = build_comparison_matrix(matrix.column(quality), mapping)
        vector = solve_priority(comparison, method, tol, max_iter).labelled(matrix.products)
        return quality, comparison, vector, _consistency(comparison, quality, tol, max_iter)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(one, matrix.qualities))
    else:
        outcomes = [one(q) for q in matrix.qualities]

    per_quality = {q: vector for q, _, vector, _ in outcomes}
    final = aggregate(per_quality, weights)
    logger.info("ranked %d products on %d qualities (%s)", len(matrix.products), len(matrix.qualities), method.value)
    return AhpResult(
        products=matrix.products,
        groups=matrix.groups,
        qualities=matrix.qualities,
        per_quality=per_quality,
        per_quality_cr={q: cr for q, _, _, cr in outcomes},
        final=final,
        method=method,
        weights=weights,
        mapping_name=mapping_name,
        matrices={q: comparison for q, comparison, _, _ in outcomes},
    )
