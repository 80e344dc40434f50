"""
一致性比率
"""

from models.constants import EIGEN_MAX_ITERATIONS, EIGEN_TOLERANCE, RANDOM_INDEX
from models.errors import RandomIndexError

from .eigen import power_iteration, principal_eigenvalue
from .matrix import ComparisonMatrix


def random_index(n: int) -> float:
    """Saaty 随机一致性指标，n > 10 没有定义"""
    try:
        return RANDOM_INDEX[n]
    except KeyError:
        raise RandomIndexError(f"random index is undefined for n={n} (table covers 1..10)") from None


def consistency_ratio(matrix: ComparisonMatrix,
                      tol: float = EIGEN_TOLERANCE,
                      max_iter: int = EIGEN_MAX_ITERATIONS) -> float:
    """
    计算一致性比率 CR = ((λmax - n) / (n - 1)) / RI(n)

    Args:
        matrix (ComparisonMatrix): 比较矩阵
        tol (float): 幂迭代容差
        max_iter (int): 幂迭代最大次数

    Returns:
        float: 非负的一致性比率，n < 3 时为 0

    Raises:
        RandomIndexError: n > 10
    """
    n = matrix.n
    if n < 3:
        return 0.0
    ri = random_index(n)
    vector = power_iteration(matrix, tol, max_iter)
    lambda_max = principal_eigenvalue(matrix, vector)
    # 数值误差可能让 λmax 略小于 n
    return max(0.0, (lambda_max - n) / (n - 1) / ri)
