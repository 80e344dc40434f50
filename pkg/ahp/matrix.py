"""
成对比较矩阵、列归一化与优先级向量
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from models.constants import SAATY_MAX, SAATY_MIN, WEIGHT_SUM_TOLERANCE
from models.errors import AhpError

from .saaty import SaatyMapping, grade_pair_to_saaty

# 校验时允许的浮点误差
_BOUND_TOLERANCE = 1e-12


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ComparisonMatrix:
    """正的互反矩阵 A，a[j][k] 表示产品 j 相对 k 的优势程度"""

    entries: np.ndarray

    def __post_init__(self):
        a = _frozen(self.entries)
        object.__setattr__(self, "entries", a)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise AhpError(f"comparison matrix must be square, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise AhpError("comparison matrix holds non-finite entries")
        if not np.all(np.diag(a) == 1.0):
            raise AhpError("comparison matrix diagonal must be 1")
        if np.any(a < SAATY_MIN - _BOUND_TOLERANCE) or np.any(a > SAATY_MAX + _BOUND_TOLERANCE):
            raise AhpError("comparison matrix entries must lie in [1/9, 9]")
        if not np.allclose(a * a.T, 1.0, rtol=0.0, atol=1e-12):
            raise AhpError("comparison matrix is not reciprocal")

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, ComparisonMatrix) and np.array_equal(self.entries, other.entries)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    """列和为 1 的矩阵 B"""

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(self.entries))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class PriorityVector:
    """严格为正、和为 1 的优先级向量，products 与权重一一对应（可为空）"""

    weights: Tuple[float, ...]
    products: Tuple[str, ...] = ()

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "products", tuple(self.products))
        if not weights:
            raise AhpError("priority vector is empty")
        if any(not np.isfinite(w) or w <= 0.0 for w in weights):
            raise AhpError("priority vector entries must be strictly positive")
        if abs(sum(weights) - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise AhpError(f"priority vector sums to {sum(weights)!r}, not 1")
        if self.products and len(self.products) != len(weights):
            raise AhpError("priority vector labels do not match its length")

    @property
    def array(self) -> np.ndarray:
        return np.array(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def labelled(self, products: Sequence[str]) -> "PriorityVector":
        """附上产品名称"""
        return PriorityVector(self.weights, tuple(products))

    def score_of(self, product: str) -> float:
        return self.weights[self.products.index(product)]


def build_comparison_matrix(grades: Sequence[int], mapping: SaatyMapping = grade_pair_to_saaty) -> ComparisonMatrix:
    """
    由一列评分构造成对比较矩阵

    只计算上三角，下三角取倒数，对角线为 1。

    Args:
        grades: n 个产品的评分，n >= 2
        mapping: 评分对到判断值的映射

    Returns:
        ComparisonMatrix: n×n 互反矩阵
    """
    n = len(grades)
    if n < 2:
        raise AhpError(f"at least 2 products are required to compare, got {n}")
    a = np.ones((n, n))
    for j in range(n):
        for k in range(j + 1, n):
            value = mapping(grades[j], grades[k])
            a[j, k] = value
            a[k, j] = 1.0 / value
    return ComparisonMatrix(a)


def normalize_columns(matrix: ComparisonMatrix) -> NormalizedMatrix:
    """每列除以列和"""
    a = matrix.entries
    return NormalizedMatrix(a / a.sum(axis=0))


def priority_from_normalized(normalized: NormalizedMatrix) -> PriorityVector:
    """
    归一化矩阵的行均值作为优先级向量

    Args:
        normalized (NormalizedMatrix): 列归一化后的矩阵

    Returns:
        PriorityVector: 优先级向量
    """
    return PriorityVector(tuple(normalized.entries.mean(axis=1)))


def column_priority(matrix: ComparisonMatrix) -> PriorityVector:
    """列归一化法求优先级向量"""
    return priority_from_normalized(normalize_columns(matrix))
