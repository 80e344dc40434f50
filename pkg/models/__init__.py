"""
models模块 - 质量属性、评分模板与产品记录的数据模型
"""

from .quality import (Quality, MetricKind, MetricType, Question, QualitySection,
                      GradingTemplate, Answer, Violation, ordered_qualities)
from .product import ProductRecord
from .errors import (AhpToolError, TemplateError, DatasetError, GradeError, AhpError,
                     ConvergenceError, RandomIndexError, ReportError, ConfigError)
from .constants import *

__all__ = ['Quality', 'MetricKind', 'MetricType', 'Question', 'QualitySection',
           'GradingTemplate', 'Answer', 'Violation', 'ordered_qualities', 'ProductRecord',
           'AhpToolError', 'TemplateError', 'DatasetError', 'GradeError', 'AhpError',
           'ConvergenceError', 'RandomIndexError', 'ReportError', 'ConfigError']
