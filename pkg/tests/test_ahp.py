"""层次分析数值核心的测试"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ahp.consistency import consistency_ratio, random_index
from ahp.eigen import power_iteration, priority_eigenvector
from ahp.matrix import (ComparisonMatrix, PriorityVector, build_comparison_matrix,
                        column_priority, normalize_columns, priority_from_normalized)
from ahp.ranking import (CriteriaWeights, PriorityMethod, aggregate, rank_quality, run_ahp)
from ahp.saaty import get_mapping, grade_pair_to_saaty, grade_ratio_to_saaty
from dataset.grades import GradeMatrix
from models.constants import GROUP_LIBRARY, GROUP_STANDALONE, PRODUCT_GROUPS
from models.errors import (AhpError, ConfigError, ConvergenceError, GradeError,
                           RandomIndexError)
from models.quality import Quality

PROPERTY = settings(max_examples=200, derandomize=True, deadline=None)

grades = st.integers(min_value=1, max_value=10)


def grade_columns(min_size=2, max_size=8):
    return st.lists(grades, min_size=min_size, max_size=max_size)


def consistent(w):
    w = np.asarray(w, dtype=float)
    return ComparisonMatrix(w[:, None] / w[None, :])


def one_quality(column, quality=Quality.USABILITY):
    names = tuple(f"P{i:02d}" for i in range(len(column)))
    return GradeMatrix(names, (GROUP_LIBRARY,) * len(column), (quality,), tuple((g,) for g in column))


def brute_force_priorities(column):
    """直接按定义逐项计算：比较矩阵、列和、归一化、行均值"""
    n = len(column)
    a = [[1.0] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            if j == k:
                continue
            diff = column[j] - column[k]
            value = float(min(abs(diff) + 1, 9))
            a[j][k] = value if diff >= 0 else 1.0 / value
    sums = [sum(a[j][k] for j in range(n)) for k in range(n)]
    return [sum(a[j][k] / sums[k] for k in range(n)) / n for j in range(n)]


# Saaty 映射

@pytest.mark.parametrize("g_j, g_k, expected", [
    (5, 5, 1.0),
    (10, 1, 9.0),
    (1, 10, 1.0 / 9.0),
    (7, 4, 4.0),
    (4, 7, 0.25),
    (9, 1, 9.0),
    (8, 3, 6.0),
])
def test_grade_pair_to_saaty(g_j, g_k, expected):
    assert grade_pair_to_saaty(g_j, g_k) == expected


@pytest.mark.parametrize("g_j, g_k", [(0, 5), (5, 11), (True, 5), (5.0, 3)])
def test_grade_pair_rejects_bad_grades(g_j, g_k):
    with pytest.raises(GradeError):
        grade_pair_to_saaty(g_j, g_k)


def test_ratio_mapping():
    assert grade_ratio_to_saaty(8, 4) == 2.0
    assert grade_ratio_to_saaty(4, 8) == 0.5
    assert grade_ratio_to_saaty(10, 1) == 9.0
    assert grade_ratio_to_saaty(1, 10) == pytest.approx(1.0 / 9.0)


def test_unknown_mapping_name():
    assert get_mapping("ratio") is grade_ratio_to_saaty
    with pytest.raises(ConfigError):
        get_mapping("log")


# 比较矩阵

def test_equal_grades_give_all_ones():
    assert np.array_equal(build_comparison_matrix([6, 6, 6]).entries, np.ones((3, 3)))


def test_matrix_for_nine_five_one():
    matrix = build_comparison_matrix([9, 5, 1])
    expected = [[1, 5, 9], [1 / 5, 1, 5], [1 / 9, 1 / 5, 1]]
    assert np.allclose(matrix.entries, expected, rtol=0, atol=1e-15)


def test_single_pair_matrix():
    assert np.allclose(build_comparison_matrix([3, 8]).entries, [[1, 1 / 6], [6, 1]], rtol=0, atol=1e-15)


def test_matrix_needs_two_products():
    with pytest.raises(AhpError):
        build_comparison_matrix([5])


def test_matrix_is_read_only():
    matrix = build_comparison_matrix([2, 4])
    with pytest.raises(ValueError):
        matrix.entries[0, 1] = 3.0


@pytest.mark.parametrize("entries", [
    [[1, 2], [0.4, 1]],
    [[2, 1], [1, 1]],
    [[1, 12], [1 / 12, 1]],
    [[1, 2, 3], [0.5, 1, 4]],
])
def test_invalid_comparison_matrices(entries):
    with pytest.raises(AhpError):
        ComparisonMatrix(np.array(entries, dtype=float))


@PROPERTY
@given(grade_columns())
def test_reciprocity_holds_exactly(column):
    a = build_comparison_matrix(column).entries
    n = len(column)
    for j in range(n):
        for k in range(j + 1, n):
            assert a[k, j] == 1.0 / a[j, k]
            assert 1.0 / 9.0 <= a[j, k] <= 9.0


@PROPERTY
@given(grade_columns(), st.integers(min_value=-9, max_value=9))
def test_shift_leaves_matrix_unchanged(column, shift):
    shifted = [g + shift for g in column]
    if not all(1 <= g <= 10 for g in shifted):
        shifted = [g - min(column) + 1 for g in column]
    assert build_comparison_matrix(shifted) == build_comparison_matrix(column)


# 列归一化

def test_normalize_all_ones():
    normalized = normalize_columns(build_comparison_matrix([4, 4, 4]))
    assert np.allclose(normalized.entries, 1 / 3)
    assert priority_from_normalized(normalized).weights == pytest.approx((1 / 3,) * 3)


def test_column_sums_for_nine_five_one():
    a = build_comparison_matrix([9, 5, 1]).entries
    assert a.sum(axis=0) == pytest.approx([1 + 1 / 5 + 1 / 9, 6.2, 15.0])


def test_priorities_for_nine_five_one():
    vector = column_priority(build_comparison_matrix([9, 5, 1]))
    assert vector.weights == pytest.approx((0.723, 0.216, 0.061), abs=1e-3)


@PROPERTY
@given(grade_columns(max_size=12))
def test_normalized_columns_sum_to_one(column):
    normalized = normalize_columns(build_comparison_matrix(column))
    assert np.allclose(normalized.entries.sum(axis=0), 1.0, rtol=0, atol=1e-12)
    assert np.all((normalized.entries >= 0) & (normalized.entries <= 1))


@PROPERTY
@given(grade_columns(min_size=2, max_size=4))
def test_matches_brute_force_definition(column):
    vector = column_priority(build_comparison_matrix(column))
    assert np.allclose(vector.weights, brute_force_priorities(column), rtol=0, atol=1e-12)


@PROPERTY
@given(grade_columns(max_size=12))
def test_priority_vectors_are_normalized(column):
    vector = column_priority(build_comparison_matrix(column))
    assert abs(sum(vector.weights) - 1.0) <= 1e-9
    assert all(w > 0 for w in vector.weights)


# 一致矩阵

def test_consistent_matrix_fixed_point():
    w = (0.5, 0.3, 0.2)
    matrix = consistent(w)
    assert column_priority(matrix).weights == pytest.approx(w, abs=1e-12)
    assert priority_eigenvector(matrix).weights == pytest.approx(w, abs=1e-12)
    assert consistency_ratio(matrix) == pytest.approx(0.0, abs=1e-6)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(arrays(np.float64, st.integers(min_value=2, max_value=6),
              elements=st.floats(min_value=1.0, max_value=9.0)))
def test_consistent_matrices_recover_weights(raw):
    w = raw / raw.sum()
    matrix = consistent(raw)
    assert np.allclose(column_priority(matrix).weights, w, rtol=0, atol=1e-12)
    assert np.allclose(priority_eigenvector(matrix, tol=1e-12).weights, w, rtol=0, atol=1e-6)
    assert consistency_ratio(matrix) <= 1e-6


# 特征向量法

def test_eigenvector_of_all_ones_is_uniform():
    vector = priority_eigenvector(build_comparison_matrix([3, 3, 3, 3]))
    assert vector.weights == pytest.approx((0.25,) * 4)


def test_eigenvector_agrees_with_column_method():
    matrix = build_comparison_matrix([9, 5, 1])
    column = np.array(column_priority(matrix).weights)
    eigen = np.array(priority_eigenvector(matrix).weights)
    assert np.max(np.abs(column - eigen)) < 0.02


def test_eigenvector_matches_repeated_squaring():
    matrix = build_comparison_matrix([9, 5, 1, 7])
    a = matrix.entries.copy()
    for _ in range(30):
        a = a @ a
        a /= a.sum()
    oracle = a.sum(axis=1) / a.sum()
    assert np.allclose(power_iteration(matrix), oracle, rtol=0, atol=1e-9)


def test_non_convergence_is_reported():
    with pytest.raises(ConvergenceError):
        power_iteration(build_comparison_matrix([9, 5, 1, 7, 2]), tol=1e-15, max_iter=1)


# 一致性比率

def test_random_index_table():
    assert random_index(3) == 0.58
    assert random_index(10) == 1.49
    with pytest.raises(RandomIndexError):
        random_index(11)


def test_consistency_ratio_small_and_uniform():
    assert consistency_ratio(build_comparison_matrix([2, 9])) == 0.0
    assert consistency_ratio(build_comparison_matrix([5, 5, 5])) == pytest.approx(0.0, abs=1e-12)


def test_consistency_ratio_undefined_above_ten():
    with pytest.raises(RandomIndexError):
        consistency_ratio(build_comparison_matrix(list(range(1, 11)) + [5]))


@PROPERTY
@given(grade_columns(min_size=3, max_size=10))
def test_consistency_ratio_is_finite_and_non_negative(column):
    matrix = build_comparison_matrix(sorted(column))
    ratio = consistency_ratio(matrix)
    assert np.isfinite(ratio) and ratio >= 0.0
    w = power_iteration(matrix)
    lambda_max = float(np.max(matrix.entries @ w / w))
    oracle = max(0.0, (lambda_max - matrix.n) / (matrix.n - 1) / random_index(matrix.n))
    assert ratio <= oracle + 1e-9


# 单个质量属性的排名

def test_uniform_grades_give_uniform_priorities():
    vector = rank_quality(one_quality([5, 5, 5, 5]), Quality.USABILITY)
    assert vector.weights == pytest.approx((0.25,) * 4)
    assert vector.products == ("P00", "P01", "P02", "P03")


@pytest.mark.parametrize("method", list(PriorityMethod))
def test_increasing_grades_give_increasing_priorities(method):
    vector = rank_quality(one_quality([1, 3, 4, 8, 9]), Quality.USABILITY, method)
    assert list(vector.weights) == sorted(vector.weights)
    assert len(set(vector.weights)) == 5


@PROPERTY
@given(st.lists(st.integers(min_value=1, max_value=9), min_size=2, max_size=8))
def test_monotone_dominance_without_clamp(column):
    vector = rank_quality(one_quality(column), Quality.USABILITY).weights
    for j, g_j in enumerate(column):
        for k, g_k in enumerate(column):
            if g_j > g_k:
                assert vector[j] > vector[k]


@PROPERTY
@given(grade_columns(max_size=10))
def test_monotone_dominance_with_clamp(column):
    vector = rank_quality(one_quality(column), Quality.USABILITY).weights
    for j, g_j in enumerate(column):
        for k, g_k in enumerate(column):
            if g_j > g_k:
                assert vector[j] >= vector[k] - 1e-15


@PROPERTY
@given(grade_columns(max_size=8), st.randoms(use_true_random=False))
def test_permutation_equivariance(column, rnd):
    order = list(range(len(column)))
    rnd.shuffle(order)
    base = rank_quality(one_quality(column), Quality.USABILITY).weights
    permuted = rank_quality(one_quality([column[i] for i in order]), Quality.USABILITY).weights
    assert np.allclose(permuted, [base[i] for i in order], rtol=0, atol=1e-12)


def test_sample_installability_is_led_by_libraries(sample_matrix):
    vector = rank_quality(sample_matrix, Quality.INSTALLABILITY)
    groups = sample_matrix.group_of()
    ranked = sorted(vector.products, key=lambda name: (-vector.score_of(name), name))
    assert all(groups[name] == GROUP_LIBRARY for name in ranked[:10])


# 权重与汇总

def test_equal_weights():
    weights = CriteriaWeights.equal(list(Quality))
    assert len(weights.weights) == 13
    assert all(w == pytest.approx(1 / 13) for w in weights.weights.values())


def test_weights_from_raw_fill_missing_and_renormalize(caplog):
    qualities = [Quality.INSTALLABILITY, Quality.USABILITY, Quality.REPRODUCIBILITY]
    weights = CriteriaWeights.from_raw({"installability": 3, "usability": 1}, qualities)
    assert weights.weights == {
        Quality.INSTALLABILITY: 0.75, Quality.USABILITY: 0.25, Quality.REPRODUCIBILITY: 0.0,
    }
    assert "renormalizing" in caplog.text


@pytest.mark.parametrize("raw", [
    {"speed": 1},
    {"usability": -1},
    {"usability": "heavy"},
    {"usability": 0},
])
def test_bad_weights(raw):
    with pytest.raises(ConfigError):
        CriteriaWeights.from_raw(raw, [Quality.USABILITY])


def test_weights_must_sum_to_one():
    with pytest.raises(ConfigError):
        CriteriaWeights({Quality.USABILITY: 0.5})


def test_aggregate_single_quality_is_identity():
    vector = PriorityVector((0.6, 0.4), ("A", "B"))
    weights = CriteriaWeights.equal([Quality.USABILITY])
    assert aggregate({Quality.USABILITY: vector}, weights).weights == pytest.approx((0.6, 0.4))


def test_aggregate_symmetric_pair():
    per_quality = {
        Quality.INSTALLABILITY: PriorityVector((0.7, 0.3), ("A", "B")),
        Quality.USABILITY: PriorityVector((0.3, 0.7), ("A", "B")),
    }
    weights = CriteriaWeights.equal(list(per_quality))
    assert aggregate(per_quality, weights).weights == pytest.approx((0.5, 0.5))


def test_aggregate_rejects_mismatched_products():
    per_quality = {
        Quality.INSTALLABILITY: PriorityVector((0.7, 0.3), ("A", "B")),
        Quality.USABILITY: PriorityVector((0.3, 0.7), ("B", "A")),
    }
    with pytest.raises(AhpError):
        aggregate(per_quality, CriteriaWeights.equal(list(per_quality)))


def test_equal_weights_final_is_mean_of_qualities(sample_matrix):
    result = run_ahp(sample_matrix)
    mean = np.mean([result.per_quality[q].array for q in result.qualities], axis=0)
    assert np.allclose(result.final.array, mean, rtol=0, atol=1e-12)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(raw=st.lists(st.floats(min_value=0.01, max_value=10.0), min_size=13, max_size=13),
       scale=st.floats(min_value=0.1, max_value=100.0))
def test_argmax_invariant_under_weight_scaling(sample_matrix, raw, scale):
    matrix = sample_matrix
    base = CriteriaWeights.from_raw({q.value: w for q, w in zip(Quality, raw)}, list(Quality))
    scaled = CriteriaWeights.from_raw({q.value: w * scale for q, w in zip(Quality, raw)}, list(Quality))
    first = run_ahp(matrix, base).final.array
    second = run_ahp(matrix, scaled).final.array
    assert int(np.argmax(first)) == int(np.argmax(second))
    assert np.allclose(first, second, rtol=0, atol=1e-12)


# 完整运行

def test_identical_products():
    matrix = GradeMatrix(("A", "B"), (GROUP_LIBRARY, GROUP_LIBRARY), tuple(Quality), ((6,) * 13, (6,) * 13))
    result = run_ahp(matrix)
    assert result.final.weights == pytest.approx((0.5, 0.5))
    assert all(v.weights == pytest.approx((0.5, 0.5)) for v in result.per_quality.values())
    assert all(cr == 0.0 for cr in result.per_quality_cr.values())


def test_dominant_product_holds_the_maximum():
    rows = ((9,) * 13, (4,) * 13, (6,) * 13)
    matrix = GradeMatrix(("Top", "Low", "Mid"), (GROUP_LIBRARY,) * 3, tuple(Quality), rows)
    result = run_ahp(matrix, method=PriorityMethod.EIGENVECTOR)
    assert result.final.products[int(np.argmax(result.final.array))] == "Top"


def test_final_is_weighted_sum(sample_matrix):
    weights = CriteriaWeights.from_raw({"installability": 2, "usability": 1, "transparency": 1}, list(Quality))
    result = run_ahp(sample_matrix, weights)
    expected = sum(weights.weights[q] * result.per_quality[q].array for q in result.qualities)
    assert np.allclose(result.final.array, expected, rtol=0, atol=1e-9)


def test_consistency_ratio_is_skipped_for_large_sets(sample_matrix):
    result = run_ahp(sample_matrix)
    assert set(result.per_quality_cr) == set(Quality)
    assert all(cr is None for cr in result.per_quality_cr.values())


def test_parallel_run_matches_sequential(sample_matrix):
    sequential = run_ahp(sample_matrix, method=PriorityMethod.EIGENVECTOR)
    parallel = run_ahp(sample_matrix, method=PriorityMethod.EIGENVECTOR, workers=4)
    assert parallel.final == sequential.final
    assert parallel.per_quality == sequential.per_quality


def test_standalone_tools_have_lowest_mean_final(sample_matrix):
    result = run_ahp(sample_matrix)
    means = {
        group: np.mean([s for s, g in zip(result.final.weights, sample_matrix.groups) if g == group])
        for group in PRODUCT_GROUPS
    }
    assert means[GROUP_STANDALONE] == min(means.values())
    assert means[GROUP_STANDALONE] < min(m for g, m in means.items() if g != GROUP_STANDALONE)


def test_ratio_mapping_run(sample_matrix):
    result = run_ahp(sample_matrix, mapping_name="ratio")
    assert result.mapping_name == "ratio"
    assert abs(sum(result.final.weights) - 1.0) <= 1e-9
