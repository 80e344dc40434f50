"""
项目存活判定
"""

import calendar
import datetime
import logging
from typing import List, Sequence

from models.constants import LIVENESS_WINDOW_MONTHS, STATUS_ALIVE, STATUS_DEAD
from models.errors import DatasetError
from models.product import ProductRecord

logger = logging.getLogger(__name__)


def subtract_months(day: datetime.date, months: int) -> datetime.date:
    """
    日期减去若干个月，目标月份没有这一天时取该月最后一天

    Args:
        day (datetime.date): 起始日期
        months (int): 月数

    Returns:
        datetime.date: 结果日期
    """
    total = day.year * 12 + (day.month - 1) - months
    year, month = divmod(total, 12)
    month += 1
    last_day = calendar.monthrange(year, month)[1]
    return datetime.date(year, month, min(day.day, last_day))


def classify_liveness(last_updated: datetime.date, reference: datetime.date) -> str:
    """
    按最近更新日期判定项目是否存活

    Args:
        last_updated (datetime.date): 最近一次更新
        reference (datetime.date): 参考日期

    Returns:
        str: "alive" 或 "dead"，正好 18 个月前算存活

    Raises:
        DatasetError: 更新日期晚于参考日期
    """
    if last_updated > reference:
        raise DatasetError([f"last update {last_updated} is after the reference date {reference}"])
    cutoff = subtract_months(reference, LIVENESS_WINDOW_MONTHS)
    return STATUS_ALIVE if last_updated >= cutoff else STATUS_DEAD


def reclassify(records: Sequence[ProductRecord], reference: datetime.date) -> List[ProductRecord]:
    """
    对有更新日期的记录重新判定状态，其余记录保持不变

    Args:
        records: 产品记录
        reference (datetime.date): 参考日期

    Returns:
        list: 新的记录列表
    """
    result = []
    for record in records:
        try:
            last_updated = record.last_updated
        except (TypeError, ValueError):
            logger.warning("%s: unreadable last_updated, status left as %s", record.name, record.status)
            last_updated = None
        if last_updated is None:
            result.append(record)
            continue
        status = classify_liveness(last_updated, reference)
        if status != record.status:
            logger.info("%s: status %s -> %s", record.name, record.status, status)
        result.append(record.with_status(status))
    return result
