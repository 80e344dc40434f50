"""
grading模块 - 评分模板、答案校验与模板导入导出
"""

from .template import builtin_template, impression_id, SUMMARY_PREFIX
from .validation import validate_answer
from .schema import template_to_json, template_from_json, dumps_template, loads_template

__all__ = ['builtin_template', 'impression_id', 'SUMMARY_PREFIX', 'validate_answer',
           'template_to_json', 'template_from_json', 'dumps_template', 'loads_template']
