"""
测试共用的夹具
"""

import datetime
from pathlib import Path

import pytest

from dataset.grades import load_grade_matrix
from dataset.records import load_records
from grading.template import builtin_template

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GRADES_SAMPLE = FIXTURES / "grades-sample.csv"
RECORDS_SAMPLE = FIXTURES / "appendix-b-records.json"
REFERENCE_DATE = datetime.date(2018, 6, 1)


@pytest.fixture(scope="session")
def template():
    return builtin_template()


@pytest.fixture(scope="session")
def grades_path():
    return GRADES_SAMPLE


@pytest.fixture(scope="session")
def records_path():
    return RECORDS_SAMPLE


@pytest.fixture(scope="session")
def sample_matrix():
    return load_grade_matrix(GRADES_SAMPLE)


@pytest.fixture(scope="session")
def sample_records(template):
    return load_records(RECORDS_SAMPLE, template).records



@pytest.fixture(scope="session")
def reference_date():
    return REFERENCE_DATE
