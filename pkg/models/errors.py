"""
异常类型定义
所有可预期的失败都从 AhpToolError 派生，命令行据此映射退出码
"""

from typing import Iterable, List


class AhpToolError(Exception):
    """评估工具异常基类"""


class TemplateError(AhpToolError):
    """评分模板结构错误"""


class DatasetError(AhpToolError):
    """数据集解析错误

    一次解析会收集全部问题，messages 中每条都带有位置信息
    """

    def __init__(self, messages: Iterable[str]):
        self.messages: List[str] = list(messages)
        summary = self.messages[0] if self.messages else "invalid dataset"
        if len(self.messages) > 1:
            summary += f" (and {len(self.messages) - 1} more)"
        super().__init__(summary)


class GradeError(AhpToolError, ValueError):
    """评分超出 1-10 范围"""


class AhpError(AhpToolError):
    """层次分析计算错误"""


class ConvergenceError(AhpError):
    """幂迭代未收敛"""


class RandomIndexError(AhpError):
    """矩阵阶数超出随机一致性指标表"""


class ReportError(AhpToolError):
    """报告构建错误"""


class ConfigError(AhpToolError):
    """配置或权重文件错误"""
