"""
ahp模块 - 层次分析法：Saaty 映射、比较矩阵、优先级向量、一致性与汇总
"""

from .saaty import grade_pair_to_saaty, grade_ratio_to_saaty, get_mapping, SAATY_MAPPINGS
from .matrix import (ComparisonMatrix, NormalizedMatrix, PriorityVector, build_comparison_matrix,
                     normalize_columns, priority_from_normalized, column_priority)
from .eigen import power_iteration, priority_eigenvector, principal_eigenvalue
from .consistency import consistency_ratio, random_index
from .ranking import (PriorityMethod, CriteriaWeights, AhpResult, solve_priority, rank_quality,
                      aggregate, run_ahp)

__all__ = ['grade_pair_to_saaty', 'grade_ratio_to_saaty', 'get_mapping', 'SAATY_MAPPINGS',
           'ComparisonMatrix', 'NormalizedMatrix', 'PriorityVector', 'build_comparison_matrix',
           'normalize_columns', 'priority_from_normalized', 'column_priority',
           'power_iteration', 'priority_eigenvector', 'principal_eigenvalue',
           'consistency_ratio', 'random_index',
           'PriorityMethod', 'CriteriaWeights', 'AhpResult', 'solve_priority', 'rank_quality',
           'aggregate', 'run_ahp']
