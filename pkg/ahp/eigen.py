"""
主特征向量的幂迭代求解
"""

import logging

import numpy as np

from models.constants import EIGEN_MAX_ITERATIONS, EIGEN_TOLERANCE
from models.errors import ConvergenceError

from .matrix import ComparisonMatrix, PriorityVector

logger = logging.getLogger(__name__)


def power_iteration(matrix: ComparisonMatrix,
                    tol: float = EIGEN_TOLERANCE,
                    max_iter: int = EIGEN_MAX_ITERATIONS) -> np.ndarray:
    """
    幂迭代求正矩阵的主特征向量，每步按和归一化

    Args:
        matrix (ComparisonMatrix): 比较矩阵
        tol (float): 相邻两次迭代的最大分量差小于该值即收敛
        max_iter (int): 最大迭代次数

    Returns:
        np.ndarray: 和为 1 的特征向量

    Raises:
        ConvergenceError: 超过最大迭代次数仍未收敛
    """
    a = matrix.entries
    v = np.full(matrix.n, 1.0 / matrix.n)
    for step in range(1, max_iter + 1):
        w = a @ v
        w /= w.sum()
        if np.max(np.abs(w - v)) < tol:
            logger.debug("power iteration converged after %d steps", step)
            return w
        v = w
    raise ConvergenceError(f"power iteration did not converge within {max_iter} iterations (tol={tol})")


def priority_eigenvector(matrix: ComparisonMatrix,
                         tol: float = EIGEN_TOLERANCE,
                         max_iter: int = EIGEN_MAX_ITERATIONS) -> PriorityVector:
    """特征向量法求优先级向量"""
    return PriorityVector(tuple(power_iteration(matrix, tol, max_iter)))


def principal_eigenvalue(matrix: ComparisonMatrix, vector: np.ndarray) -> float:
    """由主特征向量估计 λmax：(A·w)_i / w_i 的均值"""
    return float(np.mean((matrix.entries @ vector) / vector))
