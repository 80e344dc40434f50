"""
评估工具常量定义
"""

# 工具版本号
TOOL_VERSION = "1.0.0"

# 报告结构版本号，字段有不兼容变化时递增
REPORT_SCHEMA_VERSION = 1

# 内置模板的题目总数：概要 18 + 度量 57 + 总体印象 13
TEMPLATE_QUESTION_COUNT = 88

# 评分设置
GRADE_MIN = 1
GRADE_MAX = 10
SAATY_MIN = 1.0 / 9.0
SAATY_MAX = 9.0
SCORE_DECIMALS = 6

# 存活判定窗口（月），边界当天算存活
LIVENESS_WINDOW_MONTHS = 18

# 权重之和的容差
WEIGHT_SUM_TOLERANCE = 1e-9
# 权重文件之和偏离超过该值时重新归一化并警告
WEIGHT_RENORMALIZE_THRESHOLD = 1e-6

# 特征向量幂迭代默认参数
EIGEN_TOLERANCE = 1e-12
EIGEN_MAX_ITERATIONS = 10000

# Saaty 随机一致性指标 RI(n)
# 来源: T. L. Saaty, "The Analytic Hierarchy Process", McGraw-Hill, 1980
RANDOM_INDEX = {
    1: 0.0,
    2: 0.0,
    3: 0.58,
    4: 0.90,
    5: 1.12,
    6: 1.24,
    7: 1.32,
    8: 1.41,
    9: 1.45,
    10: 1.49,
}
# 一致性比率可接受上限（仅用于提示）
CONSISTENCY_RATIO_LIMIT = 0.1

# 产品分组
GROUP_DESKTOP_GIS = "desktop_gis"
GROUP_STANDALONE = "standalone_tool"
GROUP_LIBRARY = "programming_library"
PRODUCT_GROUPS = (GROUP_DESKTOP_GIS, GROUP_STANDALONE, GROUP_LIBRARY)
GROUP_DISPLAY_NAMES = {
    GROUP_DESKTOP_GIS: "Desktop GIS",
    GROUP_STANDALONE: "Stand-alone tool",
    GROUP_LIBRARY: "Programming library",
}

# 产品状态
STATUS_ALIVE = "alive"
STATUS_DEAD = "dead"
STATUS_UNCLEAR = "unclear"

# 颜色定义
WHITE = (255, 255, 255)
BLACK = (0, 0, 0)
GRAY = (128, 128, 128)
LIGHT_GRAY = (220, 220, 220)
STEEL_BLUE = (31, 119, 180)
ORANGE = (255, 127, 14)
FOREST_GREEN = (44, 160, 44)

# 分组颜色 - 图表中区分三类产品
GROUP_COLORS = {
    GROUP_DESKTOP_GIS: STEEL_BLUE,
    GROUP_STANDALONE: ORANGE,
    GROUP_LIBRARY: FOREST_GREEN,
}

# 输出文件
REPORT_FILE_NAME = "report.json"
FINAL_CSV_NAME = "final.csv"
STATS_FILE_NAME = "stats.json"
FIGURES_DIR_NAME = "figures"
DEFAULT_CONFIG_FILE = "ahp_config.json"

# 报告中固定附带的说明
RELATIVE_SCORE_CAVEAT = (
    "Scores are relative priorities derived from pairwise comparisons of "
    "the graded products; they should not be read as absolute ranks."
)

# 命令行退出码
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
