"""
内置评分模板
概要信息 18 题，13 个质量属性共 57 道度量题，另有每个属性一道 1-10 总体印象题
"""

from functools import lru_cache
from typing import Tuple

from models.constants import TEMPLATE_QUESTION_COUNT
from models.errors import TemplateError
from models.quality import (GradingTemplate, MetricKind, MetricType, Quality,
                            QualitySection, Question)

# 题型简写
YES_NO = MetricType(MetricKind.YES_NO)
YES_STAR_NO = MetricType(MetricKind.YES_STAR_NO)
YES_NO_NA = MetricType(MetricKind.YES_NO_NA)
YES_NO_UNCLEAR = MetricType(MetricKind.YES_NO_UNCLEAR)
NUMBER = MetricType(MetricKind.NUMBER)
DATE = MetricType(MetricKind.DATE)
TEXT = MetricType(MetricKind.TEXT)
URL = MetricType(MetricKind.URL)
URL_SET = MetricType(MetricKind.URL_SET)
GRADE = MetricType(MetricKind.GRADE_1_10)

PLATFORMS = ("Windows", "Linux", "OSX", "Android", "Other")
LANGUAGES = ("FORTRAN", "Matlab", "C", "C++", "Java", "R", "Ruby", "Python",
             "Cython", "BASIC", "Pascal", "IDL", "unclear")
LICENSES = ("gnu_gpl", "bsd", "mit", "terms_of_use", "trial", "none", "unclear")
ISSUE_TRACKERS = ("Trac", "JIRA", "Redmine", "e-mail", "discussion board",
                  "sourceforge", "google code", "git", "none", "unclear")


def choice(*members: str, starred: Tuple[str, ...] = ()) -> MetricType:
    return MetricType(MetricKind.CHOICE, tuple(members), starred)


def enum_set(*members: str) -> MetricType:
    return MetricType(MetricKind.ENUM_SET, tuple(members))


def starred(kind: MetricKind, *options: str) -> MetricType:
    """带星号选项的是/否题"""
    return MetricType(kind, (), tuple(options))


# 概要信息：(短键, 题目, 题型)
SUMMARY_ROWS = (
    ("name", "Software name?", TEXT),
    ("url", "URL of the application?", URL),
    ("educational_institution", "Is the application associated with an educational institution?", TEXT),
    ("purpose", "Short description of the purpose of the software?", TEXT),
    ("n_developers", "Number of developers?", NUMBER),
    ("funding", "Source of funding?", TEXT),
    ("downloads", "Number of downloads?", NUMBER),
    ("release_date", "Initial release date?", DATE),
    ("last_updated", "Date of the last update?", DATE),
    ("status", "Status of the project?", choice("alive", "dead", "unclear")),
    ("license", "Software license?", choice(*LICENSES)),
    ("platforms", "Supported platforms?", enum_set(*PLATFORMS)),
    ("category", "Software category?", choice("concept", "public", "private")),
    ("development_model", "Development model?", choice("open_source", "freeware", "commercial")),
    ("publications_using", "Publications that use the software?", URL_SET),
    ("publications_about", "Publications about the software?", URL_SET),
    ("source_available", "Is the source code available?", YES_NO),
    ("languages", "Programming language(s)?", enum_set(*LANGUAGES)),
)

SUMMARY_PREFIX = "summary."

# 各质量属性的度量题：(id, 题目, 题型, 是否需要安装后才能回答)
QUALITY_ROWS = {
    Quality.INSTALLABILITY: ("install", (
        ("instructions", "Are there installation instructions?", YES_NO, False),
        ("instructions_linear", "Are the installation instructions linear?", YES_NO_NA, False),
        ("automated", "Is there something in place to automate the installation?", YES_STAR_NO, False),
        ("validation", "Is there a specified way to validate the installation, such as a test suite?", YES_STAR_NO, False),
        ("steps", "How many steps were involved in the installation?", NUMBER, False),
        ("packages", "How many software packages need to be installed before or during installation?", NUMBER, False),
        ("uninstall", "Run uninstall, if available. Were any obvious problems caused?",
         choice("unavail", "yes", "no", starred=("yes",)), True),
    )),
    Quality.CORRECTNESS_VERIFIABILITY: ("correctness", (
        ("external_libraries", "Are external libraries used?", starred(MetricKind.YES_NO_UNCLEAR, "yes"), False),
        ("community_confidence", "Does the community have confidence in this library?", YES_NO_UNCLEAR, False),
        ("requirements_spec", "Any reference to the requirements specifications of the program?",
         starred(MetricKind.YES_NO_UNCLEAR, "yes"), False),
        ("confidence_techniques", "What tools or techniques are used to build confidence of correctness?", TEXT, False),
        ("tutorial_output", "If there is a getting started tutorial, is the output as expected?",
         starred(MetricKind.YES_NO_NA, "no"), True),
    )),
    Quality.RELIABILITY: ("reliability", (
        ("install_break", "Did the software break during installation?", YES_STAR_NO, False),
        ("tutorial_break", "If there is a getting started tutorial, did the software break during it?",
         starred(MetricKind.YES_NO_NA, "yes"), True),
    )),
    Quality.ROBUSTNESS: ("robustness", (
        ("garbage_input", "Does the software handle garbage input reasonably?", starred(MetricKind.YES_NO, "no"), True),
        ("line_endings", "For any plain text input files, are all of CR, LF and CR+LF handled?",
         starred(MetricKind.YES_NO_NA, "no"), True),
    )),
    Quality.PERFORMANCE: ("performance", (
        ("evidence", "Is there evidence that performance was considered?", YES_STAR_NO, False),
    )),
    Quality.USABILITY: ("usability", (
        ("getting_started", "Is there a getting started tutorial?", YES_NO, False),
        ("standard_example", "Is there a standard example that is explained?", YES_NO, False),
        ("user_manual", "Is there a user manual?", YES_NO, False),
        ("look_and_feel", "Does the application have the usual look and feel for the platform it is on?",
         starred(MetricKind.YES_NO, "no"), True),
        ("visibility_problems", "Are there any features that show a lack of visibility?",
         starred(MetricKind.YES_NO, "no"), True),
        ("user_characteristics", "Are expected user characteristics documented?", YES_NO, False),
        ("support_model", "What is the user support model?", TEXT, False),
    )),
    Quality.MAINTAINABILITY: ("maintain", (
        ("multiple_versions", "Is there a history of multiple versions of the software?", YES_NO_UNCLEAR, False),
        ("contribution_info", "Is there any information on how code is reviewed, or how to contribute?", YES_STAR_NO, False),
        ("changelog", "Is there a changelog?", YES_NO, False),
        ("maintenance_type", "What is the maintenance type?",
         enum_set("corrective", "adaptive", "perfective", "unclear"), False),
        ("issue_tracker", "What issue tracking tool is employed?", enum_set(*ISSUE_TRACKERS), False),
        ("bugs_fixed", "Are the majority of identified bugs fixed?", starred(MetricKind.YES_NO_UNCLEAR, "no"), False),
        ("version_control", "Which version control system is in use?",
         choice("svn", "cvs", "git", "github", "unclear"), False),
        ("design_evidence", "Is there evidence that maintainability was considered in the design?", YES_STAR_NO, False),
        ("code_clones", "Are there code clones?", starred(MetricKind.YES_NO_UNCLEAR, "yes"), False),
    )),
    Quality.REUSABILITY: ("reuse", (
        ("portions_reused", "Are any portions of the software used by another package?", YES_STAR_NO, False),
        ("design_evidence", "Is there evidence in the documentation that reusability was considered?",
         starred(MetricKind.YES_NO_UNCLEAR, "yes"), False),
    )),
    Quality.PORTABILITY: ("port", (
        ("platforms", "What platforms is the software advertised to work on?", enum_set(*PLATFORMS), False),
        ("special_steps", "Are special steps taken in the source code to handle portability?",
         starred(MetricKind.YES_NO_NA, "yes"), False),
        ("not_important", "Is portability explicitly identified as NOT being important?", YES_NO, False),
        ("evidence", "Convincing evidence present that portability has been achieved?", YES_STAR_NO, False),
    )),
    Quality.UNDERSTANDABILITY: ("understand", (
        ("indentation", "Consistent indentation and formatting style?", YES_NO_NA, False),
        ("coding_standard", "Explicit identification of a coding standard?", starred(MetricKind.YES_NO_NA, "yes"), False),
        ("identifiers", "Are the code identifiers consistent, distinctive, and meaningful?",
         starred(MetricKind.YES_NO_NA, "no"), False),
        ("hardcoded_constants", "Are constants (other than 0 or 1) hard coded into the program?",
         starred(MetricKind.YES_NO_NA, "yes"), False),
        ("comments", "Comments are clear, indicate what is being done, not how?", starred(MetricKind.YES_NO_NA, "no"), False),
        ("algorithm_references", "Is the name or URL of any algorithms used mentioned?",
         starred(MetricKind.YES_NO_NA, "no"), False),
        ("parameter_order", "Parameters are in the same order for all functions?", starred(MetricKind.YES_NO_NA, "no"), False),
        ("modularized", "Is the code modularized?", starred(MetricKind.YES_NO_NA, "no"), False),
        ("file_names", "Descriptive names of source code files?", starred(MetricKind.YES_NO_NA, "no"), False),
        ("design_document", "Is a design document provided?", starred(MetricKind.YES_NO_NA, "yes"), False),
    )),
    Quality.INTEROPERABILITY: ("interop", (
        ("external_systems", "Does the software interoperate with external systems?", YES_STAR_NO, False),
        ("workflow", "Is there a workflow that uses other software packages?", YES_STAR_NO, False),
        ("api_defined", "If there are external interactions, is the API clearly defined?",
         starred(MetricKind.YES_NO_NA, "yes"), False),
    )),
    Quality.TRANSPARENCY: ("transparency", (
        ("dev_process", "Is the development process defined?", starred(MetricKind.YES_NO_NA, "yes"), False),
        ("external_examination", "Ease of external examination relative to other products considered?", GRADE, False),
    )),
    Quality.REPRODUCIBILITY: ("repro", (
        ("dev_environment", "Is there a record of the environment used for development and testing?", YES_STAR_NO, False),
        ("test_data", "Is test data available for verification?", YES_NO, False),
        ("context_tools", "Are automated tools used to capture experimental context?", YES_STAR_NO, False),
    )),
}


def impression_id(quality: Quality) -> str:
    """总体印象题的 id"""
    return f"{QUALITY_ROWS[quality][0]}.impression"


def _section(quality: Quality) -> QualitySection:
    prefix, rows = QUALITY_ROWS[quality]
    questions = tuple(
        Question(f"{prefix}.{key}", prompt, metric, quality, requires_install)
        for key, prompt, metric, requires_install in rows
    )
    impression = Question(
        impression_id(quality),
        f"Overall impression of {quality.value}?",
        GRADE,
        quality,
    )
    return QualitySection(quality, questions, impression)


@lru_cache(maxsize=None)
def builtin_template() -> GradingTemplate:
    """
    返回内置评分模板

    Returns:
        GradingTemplate: 模板对象，多次调用返回同一实例
    """
    summary = tuple(
        Question(SUMMARY_PREFIX + key, prompt, metric)
        for key, prompt, metric in SUMMARY_ROWS
    )
    template = GradingTemplate(summary, tuple(_section(q) for q in Quality))
    if template.question_count != TEMPLATE_QUESTION_COUNT:
        raise TemplateError(f"built-in template holds {template.question_count} questions, expected {TEMPLATE_QUESTION_COUNT}")
    return template
