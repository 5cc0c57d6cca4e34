"""
횡단선 개수 한계식
s(p), p0, 스타이너 방진 횡단선 하한, 부분 평행류 전수 검증, 횡단선 생성기, 로그 한계 리포트
"""

import logging
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import pandas as pd

from config.engine_config import EngineConfig
from performance_monitor import monitor_performance
from transversals.constructions import prolongation, relabel_corner
from transversals.core import (
    LatinSquare,
    SteinerTripleSystem,
    Transversal,
    TransversalFamily,
    is_transversal,
)
from transversals.engine import count_avoiding, count_transversals
from utils.error_handler import AppError, BadOrder, POutOfRange, PTooLarge, ValidationError

logger = logging.getLogger(__name__)

# 순환 방진 점근 하한의 밑 (참고값, 검증 대상 아님)
CYCLIC_REFERENCE_BASE = 3.246


@dataclass(frozen=True)
class PartialParallelClass:
    """서로 점을 공유하지 않는 삼중들과 그 합집합 K(p)"""
    triples: Tuple[Tuple[int, int, int], ...]
    covered: frozenset

    @classmethod
    def of(cls, triples: Iterable[Tuple[int, int, int]]) -> 'PartialParallelClass':
        triples = tuple(triples)
        covered = frozenset(x for t in triples for x in t)
        if len(covered) != 3 * len(triples):
            raise ValidationError("삼중들이 서로소가 아닙니다", {'triples': [list(t) for t in triples]})
        return cls(triples=triples, covered=covered)

    def __len__(self) -> int:
        return len(self.triples)


@dataclass(frozen=True)
class Prop2Verification:
    order: int
    p: int
    max_observed: int
    bound: int
    passed: bool
    classes_checked: int
    exhaustive: bool
    witness: Tuple[Tuple[int, int, int], ...] = ()


@dataclass(frozen=True)
class GreedyStep:
    """p번째 단계에서 고를 수 있는 삼중 수의 두 표현"""
    p: int
    available: int
    closed_form: int


@dataclass(frozen=True)
class Theorem1Certificate:
    order: int
    bound: int
    count: int
    generated: int
    passed: bool


@dataclass(frozen=True)
class ProlongationCheck:
    order: int
    k: int
    prolonged_count: int
    corner_count: int
    avoiding_count: int
    passed: bool


@dataclass
class BoundReport:
    """차수 n 하나에 대한 한계값 리포트"""
    order: int
    applicable: bool
    s_table: List[Tuple[int, int]] = field(default_factory=list)
    p0: Optional[int] = None
    theorem1_bound: Optional[int] = None
    theorem1_log: Optional[float] = None
    taranenko_log: float = 0.0
    corollary_lower_log: float = 0.0
    cyclic_reference_log: Optional[float] = None
    flags: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = asdict(self)
        data['s_table'] = [list(row) for row in self.s_table]
        return data


def _check_sts_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1 or n % 6 not in (1, 3):
        raise BadOrder(n)


def s_p(n: int, p: int) -> int:
    """p개 서로소 삼중의 합집합과 만나는 삼중 수의 상한 s(p)"""
    _check_sts_order(n)
    if isinstance(p, bool) or not isinstance(p, int) or p < 0 or 3 * p > n:
        raise POutOfRange(n, p)
    return 3 * p * (n - 1) // 2 - p * (3 * p - 1)


def p0(n: int) -> int:
    """p0 = ceil((n-1)/6)"""
    _check_sts_order(n)
    return -(-(n - 1) // 6)


def theorem1_bound(n: int) -> int:
    """스타이너 방진 횡단선 수의 폐형식 하한 (정확한 유리수 계산 후 내림)"""
    _check_sts_order(n)
    if n == 1:
        # 폐형식이 정의되지 않음, [[0]]의 횡단선 수
        return 1
    q = p0(n)
    value = Fraction(6 ** (q - 1) * math.factorial(n // 3), math.factorial(q) * q)
    return math.floor(value)


def corollary_trend(n: int) -> float:
    """ln(bound) * 6/n - ln n, n/6 (ln n + O(1)) 형태의 O(1) 항"""
    return math.log(theorem1_bound(n)) * 6 / n - math.log(n)


def partial_parallel_classes(sts: SteinerTripleSystem, p: int) -> Iterator[PartialParallelClass]:
    """크기 p의 부분 평행류를 삼중 인덱스 증가 순으로 한 번씩 생성"""
    triples = sts.triples

    def extend(start: int, chosen: List[Tuple[int, int, int]], covered: set) -> Iterator[PartialParallelClass]:
        if len(chosen) == p:
            yield PartialParallelClass(triples=tuple(chosen), covered=frozenset(covered))
            return
        for index in range(start, len(triples)):
            block = triples[index]
            if covered.isdisjoint(block):
                chosen.append(block)
                yield from extend(index + 1, chosen, covered | set(block))
                chosen.pop()

    return extend(0, [], set())


def _meeting_count(sts: SteinerTripleSystem, covered: frozenset) -> int:
    return sum(1 for block in sts.triples if not covered.isdisjoint(block))


def _sample_classes(sts: SteinerTripleSystem, p: int, samples: int, seed: int) -> Iterator[PartialParallelClass]:
    rng = random.Random(seed)
    triples = list(sts.triples)
    for _ in range(samples):
        rng.shuffle(triples)
        chosen = []
        covered: set = set()
        for block in triples:
            if covered.isdisjoint(block):
                chosen.append(block)
                covered.update(block)
                if len(chosen) == p:
                    break
        if len(chosen) == p:
            yield PartialParallelClass.of(sorted(chosen))


@monitor_performance("verify_prop2")
def verify_prop2(sts: SteinerTripleSystem,
                 p: int,
                 exhaustive: bool = True,
                 samples: Optional[int] = None,
                 seed: Optional[int] = None) -> Prop2Verification:
    """p개 서로소 삼중의 합집합과 만나는 삼중 수 <= s(p)"""
    n = sts.points
    bound = s_p(n, p)

    if exhaustive:
        classes = partial_parallel_classes(sts, p)
    else:
        classes = _sample_classes(
            sts, p,
            EngineConfig.PROP2_SAMPLE_SIZE if samples is None else samples,
            EngineConfig.PROP2_SEED if seed is None else seed,
        )

    best = -1
    witness: Tuple[Tuple[int, int, int], ...] = ()
    checked = 0
    for cls in classes:
        checked += 1
        meeting = _meeting_count(sts, cls.covered)
        if meeting > best:
            best, witness = meeting, cls.triples

    if checked == 0:
        raise PTooLarge(n, p)

    result = Prop2Verification(
        order=n, p=p, max_observed=best, bound=bound, passed=best <= bound,
        classes_checked=checked, exhaustive=exhaustive, witness=witness,
    )
    logger.info(f"부분 평행류 검증: 차수 {n}, p={p}, 최대 {best} <= {bound}: {result.passed} ({checked}개 부분 평행류)")
    return result


def _oriented_cols(n: int, cls: PartialParallelClass, orientation: int) -> Tuple[int, ...]:
    cols = list(range(n))
    for bit, (a, b, c) in enumerate(cls.triples):
        if orientation >> bit & 1:
            cols[a], cols[b], cols[c] = b, c, a
        else:
            cols[a], cols[b], cols[c] = c, a, b
    return tuple(cols)


def steiner_transversal_family(sts: SteinerTripleSystem, p_min: int, p_max: int) -> Iterator[Transversal]:
    """부분 평행류와 방향 선택으로 스타이너 방진의 횡단선 생성"""
    _check_sts_order(sts.points)
    if not 0 <= p_min <= p_max:
        raise ValidationError(f"잘못된 p 범위: {p_min}..{p_max}", {'p_min': p_min, 'p_max': p_max}, 'BAD_P_RANGE')

    def generate() -> Iterator[Transversal]:
        for p in range(p_min, p_max + 1):
            if 3 * p > sts.points:
                break
            for cls in partial_parallel_classes(sts, p):
                for orientation in range(1 << p):
                    yield Transversal(_oriented_cols(sts.points, cls, orientation))

    return generate()


def greedy_step_counts(n: int) -> List[GreedyStep]:
    """탐욕 선택 단계별 선택 가능 삼중 수와 s(p0) 포화 조건 확인"""
    _check_sts_order(n)
    total = n * (n - 1) // 6
    steps = []
    for p in range(p0(n)):
        available = total - s_p(n, p)
        numerator = (n - 3 * p) * (n - 6 * p - 1)
        closed_form, remainder = divmod(numerator, 6)
        if remainder or available < closed_form or closed_form < 1:
            raise AppError(
                f"단계 부등식 위반: n={n}, p={p}, {available} >= {numerator}/6 >= 1",
                500, 'INVARIANT_VIOLATION', {'order': n, 'p': p}
            )
        steps.append(GreedyStep(p=p, available=available, closed_form=closed_form))

    if s_p(n, p0(n)) < total:
        raise AppError(f"s(p0) < n(n-1)/6: n={n}", 500, 'INVARIANT_VIOLATION', {'order': n})
    return steps


def bound_report(n: int) -> BoundReport:
    """차수 n의 횡단선 하한과 로그 한계값"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f"차수는 양의 정수여야 합니다: {n!r}", {'order': n}, 'BAD_ORDER')

    applicable = n % 6 in (1, 3)
    report = BoundReport(
        order=n,
        applicable=applicable,
        taranenko_log=n * math.log(n) - 2 * n,
        corollary_lower_log=n / 6 * math.log(n),
        cyclic_reference_log=n * math.log(CYCLIC_REFERENCE_BASE) if n % 2 else None,
        flags={
            'taranenko_o_n_omitted': True,
            'corollary_o1_omitted': True,
            'cyclic_reference_only': True,
        },
    )
    if applicable:
        q = p0(n)
        report.p0 = q
        report.s_table = [(p, s_p(n, p)) for p in range(q + 1)]
        report.theorem1_bound = theorem1_bound(n)
        report.theorem1_log = math.log(report.theorem1_bound)
    return report


def bound_table(orders: Iterable[int]) -> pd.DataFrame:
    """차수별 리포트를 한 행씩 담은 표"""
    rows = []
    for n in orders:
        report = bound_report(n)
        rows.append({
            'n': n,
            'p0': report.p0,
            'theorem1_bound': report.theorem1_bound,
            'ln_bound': report.theorem1_log,
            'n/6 ln n': report.corollary_lower_log,
            'n ln n - 2n': report.taranenko_log,
            'applicable': report.applicable,
        })
    return pd.DataFrame(rows, columns=['n', 'p0', 'theorem1_bound', 'ln_bound', 'n/6 ln n', 'n ln n - 2n', 'applicable']).astype(object)


@monitor_performance("certify_theorem1")
def certify_theorem1(sts: SteinerTripleSystem, square: LatinSquare,
                     workers: Optional[int] = None) -> Theorem1Certificate:
    """t(S_n) >= 폐형식 하한, 생성기만으로도 하한 이상인지 확인"""
    bound = theorem1_bound(sts.points)
    count = count_transversals(square, workers=workers).count

    generated = set()
    for transversal in steiner_transversal_family(sts, 0, p0(sts.points)):
        if not is_transversal(square, transversal):
            raise AppError(f"생성된 대각선이 횡단선이 아닙니다: {transversal.cols}", 500, 'INVARIANT_VIOLATION')
        generated.add(transversal.cols)

    passed = count >= bound and len(generated) >= bound
    return Theorem1Certificate(order=sts.points, bound=bound, count=count,
                               generated=len(generated), passed=passed)


def check_prolongation_inequality(square: LatinSquare,
                                  family: TransversalFamily,
                                  corner: LatinSquare,
                                  workers: Optional[int] = None) -> ProlongationCheck:
    """t(Â_k) >= t(C) * t(A; T_0..T_{k-1})"""
    prolonged = prolongation(square, family, relabel_corner(corner, square.order))
    prolonged_count = count_transversals(prolonged, workers=workers).count
    corner_count = count_transversals(corner, workers=workers).count
    avoiding = count_avoiding(square, family, workers=workers).count
    return ProlongationCheck(
        order=prolonged.order, k=len(family),
        prolonged_count=prolonged_count, corner_count=corner_count, avoiding_count=avoiding,
        passed=prolonged_count >= corner_count * avoiding,
    )
