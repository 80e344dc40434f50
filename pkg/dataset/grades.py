"""
产品评分矩阵与 CSV 读写
"""

import csv
import io
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from models.constants import GRADE_MAX, GRADE_MIN, PRODUCT_GROUPS
from models.errors import DatasetError
from models.quality import Quality, ordered_qualities

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradeMatrix:
    """n 个产品在若干质量属性上的 1-10 评分，行顺序即产品顺序"""

    products: Tuple[str, ...]
    groups: Tuple[str, ...]
    qualities: Tuple[Quality, ...]
    grades: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        problems = []
        if len(self.products) < 2:
            problems.append(f"at least 2 products are required, got {len(self.products)}")
        if len(set(self.products)) != len(self.products):
            problems.append("product names must be unique")
        if len(self.groups) != len(self.products) or len(self.grades) != len(self.products):
            problems.append("products, groups and grade rows differ in length")
        if not self.qualities:
            problems.append("at least one quality is required")
        if tuple(self.qualities) != ordered_qualities(self.qualities):
            problems.append("qualities must be unique and in canonical order")
        for name, row in zip(self.products, self.grades):
            if len(row) != len(self.qualities):
                problems.append(f"{name}: expected {len(self.qualities)} grades, got {len(row)}")
            elif any(not GRADE_MIN <= g <= GRADE_MAX for g in row):
                problems.append(f"{name}: grades must lie in {GRADE_MIN}..{GRADE_MAX}")
        if problems:
            raise DatasetError(problems)

    @property
    def array(self) -> np.ndarray:
        """n×m 整数矩阵"""
        return np.array(self.grades, dtype=int).reshape(len(self.products), len(self.qualities))

    def column(self, quality: Quality) -> List[int]:
        """某个质量属性下所有产品的评分"""
        try:
            j = self.qualities.index(quality)
        except ValueError:
            raise DatasetError([f"quality {quality.value} is not graded"]) from None
        return [row[j] for row in self.grades]

    def group_of(self) -> Dict[str, str]:
        return dict(zip(self.products, self.groups))


INTEGER = re.compile(r"[+-]?[0-9]+")


def _cell_grade(text: str) -> Optional[int]:
    # 只接受 ASCII 数字
    text = text.strip()
    if not INTEGER.fullmatch(text):
        return None
    return int(text)


def parse_grade_matrix(text: str) -> GradeMatrix:
    """
    解析评分 CSV

    表头为 name,group 加上若干质量属性列；以 # 开头的行和空行被忽略。

    Args:
        text (str): CSV 文本

    Returns:
        GradeMatrix: 评分矩阵，质量列按固定顺序排列

    Raises:
        DatasetError: 收集到的全部问题，每条都带 (行, 列) 位置
    """
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cells = next(csv.reader([line]))
        rows.append((line_no, cells))
    if not rows:
        raise DatasetError(["empty grade file"])

    header_line, header = rows[0]
    header = [h.strip() for h in header]
    errors = []
    if header[:2] != ["name", "group"]:
        errors.append(f"malformed header at line {header_line}: first columns must be name,group")
    columns: List[Quality] = []
    for name in header[2:]:
        try:
            quality = Quality(name)
        except ValueError:
            errors.append(f"malformed header at line {header_line}: unknown quality column {name!r}")
            continue
        if quality in columns:
            errors.append(f"malformed header at line {header_line}: duplicate column {name!r}")
        columns.append(quality)
    if errors:
        raise DatasetError(errors)
    if not columns:
        raise DatasetError([f"malformed header at line {header_line}: no quality columns"])

    canonical = ordered_qualities(columns)
    order = [columns.index(q) for q in canonical]
    products, groups, grades = [], [], []
    first_seen: Dict[str, int] = {}
    for line_no, cells in rows[1:]:
        if len(cells) != len(header):
            errors.append(f"wrong number of fields at ({line_no},*): expected {len(header)}, got {len(cells)}")
            continue
        name, group = cells[0].strip(), cells[1].strip()
        if not name:
            errors.append(f"missing product name at ({line_no},name)")
        elif name in first_seen:
            errors.append(f"duplicate product {name!r} at ({line_no},name), first seen on line {first_seen[name]}")
        else:
            first_seen[name] = line_no
        if group not in PRODUCT_GROUPS:
            errors.append(f"unknown group at ({line_no},group): {group!r}")
        row = []
        for quality, cell in zip(columns, cells[2:]):
            grade = _cell_grade(cell)
            if grade is None:
                errors.append(f"grade is not an integer at ({line_no},{quality.value}): {cell!r}")
            elif not GRADE_MIN <= grade <= GRADE_MAX:
                errors.append(f"grade out of range at ({line_no},{quality.value}): {grade}")
            row.append(grade)
        products.append(name)
        groups.append(group)
        grades.append(tuple(row[i] for i in order))
    if errors:
        raise DatasetError(errors)
    logger.debug("parsed %d products x %d qualities", len(products), len(canonical))
    return GradeMatrix(tuple(products), tuple(groups), canonical, tuple(grades))


def load_grade_matrix(path: Union[str, Path]) -> GradeMatrix:
    """从文件读取评分 CSV"""
    with open(path, "r", encoding="utf-8") as f:
        return parse_grade_matrix(f.read())


def serialize_grade_matrix(matrix: GradeMatrix, comments: Sequence[str] = ()) -> str:
    """
    评分矩阵写成 CSV 文本

    Args:
        matrix (GradeMatrix): 评分矩阵
        comments: 写在表头之前的注释行

    Returns:
        str: CSV 文本，换行符为 \\n
    """
    buffer = io.StringIO()
    for comment in comments:
        buffer.write(f"# {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["name", "group"] + [q.value for q in matrix.qualities])
    for name, group, row in zip(matrix.products, matrix.groups, matrix.grades):
        writer.writerow([name, group] + list(row))
    return buffer.getvalue()
