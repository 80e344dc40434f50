"""
dataset模块 - 评分矩阵、产品记录、存活判定与汇总统计
"""

from .grades import GradeMatrix, parse_grade_matrix, load_grade_matrix, serialize_grade_matrix
from .records import ParsedRecords, parse_records, load_records, serialize_records, records_to_json
from .liveness import classify_liveness, subtract_months, reclassify
from .stats import Count, SummaryStats, summary_stats, group_partition

__all__ = ['GradeMatrix', 'parse_grade_matrix', 'load_grade_matrix', 'serialize_grade_matrix',
           'ParsedRecords', 'parse_records', 'load_records', 'serialize_records', 'records_to_json',
           'classify_liveness', 'subtract_months', 'reclassify',
           'Count', 'SummaryStats', 'summary_stats', 'group_partition']
