"""한계식, 부분 평행류 검증, 스타이너 방진 하한 인증 테스트"""
import math

import pandas as pd
import pytest

from transversals.bounds import (
    CYCLIC_REFERENCE_BASE,
    GreedyStep,
    PartialParallelClass,
    bound_report,
    bound_table,
    certify_theorem1,
    check_prolongation_inequality,
    corollary_trend,
    greedy_step_counts,
    p0,
    partial_parallel_classes,
    s_p,
    steiner_transversal_family,
    theorem1_bound,
    verify_prop2,
)
from transversals.constructions import (
    cyclic_square,
    half_sum_square,
    shifted_diagonal_family,
    square_with_transversal,
    steiner_square,
)
from transversals.core import Transversal, TransversalFamily, is_transversal
from transversals.engine import enumerate_transversals
from transversals.fixtures import get_known_system
from utils.error_handler import BadOrder, POutOfRange, PTooLarge, ValidationError

STS_ORDERS = [n for n in range(1, 1001) if n % 6 in (1, 3)]


class TestSp:
    @pytest.mark.parametrize('n,p,expected', [(7, 0, 0), (7, 1, 7), (9, 1, 10), (9, 2, 14), (13, 2, 26), (3, 1, 1)])
    def test_values(self, n, p, expected):
        assert s_p(n, p) == expected

    def test_bad_order(self):
        with pytest.raises(BadOrder):
            s_p(8, 1)

    @pytest.mark.parametrize('p', [-1, 3])
    def test_p_out_of_range(self, p):
        with pytest.raises(POutOfRange):
            s_p(7, p)

    def test_nondecreasing_up_to_p0(self):
        for n in STS_ORDERS:
            values = [s_p(n, p) for p in range(p0(n) + 1)]
            assert values == sorted(values)
            assert values[0] == 0

    @pytest.mark.parametrize('n,expected', [(1, 0), (3, 1), (7, 1), (9, 2), (13, 2), (15, 3)])
    def test_p0(self, n, expected):
        assert p0(n) == expected


class TestTheorem1Bound:
    @pytest.mark.parametrize('n,expected', [(1, 1), (3, 1), (7, 2), (9, 9), (13, 36), (15, 240)])
    def test_values(self, n, expected):
        assert theorem1_bound(n) == expected

    def test_exact_for_large_orders(self):
        bound = theorem1_bound(999)
        assert isinstance(bound, int)
        assert bound > 10 ** 500

    def test_bad_order(self):
        with pytest.raises(BadOrder):
            theorem1_bound(11)

    def test_corollary_trend_is_bounded(self):
        for n in STS_ORDERS:
            if n >= 100:
                assert abs(corollary_trend(n)) < 2


class TestProp2:
    @pytest.mark.parametrize('points,p', [(7, 1), (9, 1), (9, 2), (13, 1), (13, 2), (15, 1), (15, 2)])
    def test_exhaustive(self, points, p):
        result = verify_prop2(get_known_system(points), p)
        assert result.passed
        assert result.exhaustive
        assert result.max_observed <= s_p(points, p)
        assert len(result.witness) == p

    def test_fano_single_triple_is_tight(self, fano):
        result = verify_prop2(fano, 1)
        assert result.max_observed == 7
        assert result.classes_checked == 7

    def test_empty_class(self, fano):
        result = verify_prop2(fano, 0)
        assert result.max_observed == 0
        assert result.classes_checked == 1

    def test_no_class_of_size_p(self, fano):
        with pytest.raises(PTooLarge):
            verify_prop2(fano, 2)

    def test_sampled_is_deterministic(self, sts13):
        first = verify_prop2(sts13, 2, exhaustive=False, samples=200, seed=5)
        second = verify_prop2(sts13, 2, exhaustive=False, samples=200, seed=5)
        assert first == second
        assert first.passed
        assert not first.exhaustive

    def test_partial_parallel_classes(self, sts9):
        classes = list(partial_parallel_classes(sts9, 2))
        assert len(classes) == 12
        assert all(len(cls.covered) == 6 for cls in classes)

    def test_class_must_be_disjoint(self):
        with pytest.raises(ValidationError):
            PartialParallelClass.of([(0, 1, 2), (2, 3, 4)])


class TestSteinerTransversals:
    def test_three_points_gives_all(self, sts3):
        square = steiner_square(sts3)
        generated = {t.cols for t in steiner_transversal_family(sts3, 0, 1)}
        assert generated == {t.cols for t in enumerate_transversals(square)}

    def test_fano(self, fano):
        square = steiner_square(fano)
        generated = [t.cols for t in steiner_transversal_family(fano, 0, 1)]
        assert len(generated) == 15
        assert all(is_transversal(square, Transversal(cols)) for cols in generated)
        assert len(set(generated)) == 15

    def test_nine_points_two_triples(self, sts9, steiner9):
        generated = {t.cols for t in steiner_transversal_family(sts9, 2, 2)}
        assert len(generated) == 48
        assert all(is_transversal(steiner9, Transversal(cols)) for cols in generated)

    def test_bad_range(self, fano):
        with pytest.raises(ValidationError):
            steiner_transversal_family(fano, 2, 1)


class TestGreedySteps:
    def test_nine(self):
        assert greedy_step_counts(9) == [GreedyStep(0, 12, 12), GreedyStep(1, 2, 2)]

    def test_seven(self):
        assert greedy_step_counts(7) == [GreedyStep(0, 7, 7)]

    def test_all_orders_to_1000(self):
        for n in STS_ORDERS:
            steps = greedy_step_counts(n)
            assert len(steps) == p0(n)
            assert all(step.available >= step.closed_form >= 1 for step in steps)


class TestCertifyTheorem1:
    @pytest.mark.parametrize('points', [3, 7, 9, 13])
    def test_known_systems(self, points):
        sts = get_known_system(points)
        cert = certify_theorem1(sts, steiner_square(sts))
        assert cert.passed
        assert cert.count >= cert.bound == theorem1_bound(points)
        assert cert.generated >= cert.bound

    @pytest.mark.slow
    def test_fifteen_points(self):
        sts = get_known_system(15)
        cert = certify_theorem1(sts, steiner_square(sts), workers=0)
        assert cert.passed
        assert cert.bound == 240


class TestProlongationInequality:
    @pytest.mark.parametrize('n', [3, 5, 7])
    @pytest.mark.parametrize('k', [1, 3])
    def test_shifted_diagonals(self, n, k):
        family = TransversalFamily(shifted_diagonal_family(n).transversals[:k], True)
        result = check_prolongation_inequality(half_sum_square(n), family, square_with_transversal(k))
        assert result.passed
        assert result.order == n + k
        assert result.prolonged_count >= result.corner_count * result.avoiding_count

    def test_worked_example(self, example_square, example_family):
        result = check_prolongation_inequality(example_square, example_family, cyclic_square(2))
        assert result.corner_count == 0
        assert result.avoiding_count == 1
        assert result.passed


class TestBoundReport:
    def test_nine(self):
        report = bound_report(9)
        assert report.applicable
        assert report.p0 == 2
        assert report.s_table == [(0, 0), (1, 10), (2, 14)]
        assert report.theorem1_bound == 9
        assert report.theorem1_log == pytest.approx(math.log(9))
        assert report.taranenko_log == pytest.approx(9 * math.log(9) - 18)
        assert report.corollary_lower_log == pytest.approx(1.5 * math.log(9))
        assert report.cyclic_reference_log == pytest.approx(9 * math.log(CYCLIC_REFERENCE_BASE))
        assert report.flags['taranenko_o_n_omitted']

    def test_not_applicable(self):
        report = bound_report(8)
        assert not report.applicable
        assert report.theorem1_bound is None
        assert report.cyclic_reference_log is None

    def test_bad_order(self):
        with pytest.raises(ValidationError):
            bound_report(0)

    def test_to_dict(self):
        data = bound_report(7).to_dict()
        assert data['s_table'] == [[0, 0], [1, 7]]
        assert data['theorem1_bound'] == 2

    def test_table(self):
        table = bound_table(range(7, 10))
        assert list(table['n']) == [7, 8, 9]
        bounds_column = table['theorem1_bound'].tolist()
        assert bounds_column[0] == 2 and bounds_column[2] == 9
        assert pd.isna(bounds_column[1])
        assert list(table['applicable']) == [True, False, True]
