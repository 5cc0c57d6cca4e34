"""
횡단선 계산 엔진
비트마스크 백트래킹으로 정확한 개수 세기, 열거, 회피 개수, 서로소 모음 탐색, 전수 오라클
"""

import logging
import multiprocessing
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from config.engine_config import EngineConfig
from performance_monitor import monitor_performance
from transversals.core import (
    LatinSquare,
    Transversal,
    TransversalFamily,
    is_transversal,
    make_family,
)
from utils.error_handler import NotATransversal, OrderTooLarge, ValidationError

logger = logging.getLogger(__name__)

# 행별 선택지: (열, 열 비트, 기호 비트)
Option = Tuple[int, int, int]
Options = Tuple[Tuple[Option, ...], ...]


@dataclass(frozen=True)
class CountResult:
    """정확한 개수와 탐색 통계"""
    count: int
    nodes_visited: int
    elapsed: float


@dataclass(frozen=True)
class AvoidanceMask:
    """금지 칸 집합, 행별 열 비트마스크"""
    order: int
    row_masks: Tuple[int, ...]

    @classmethod
    def empty(cls, order: int) -> 'AvoidanceMask':
        return cls(order, (0,) * order)

    @classmethod
    def from_family(cls, order: int, family: TransversalFamily) -> 'AvoidanceMask':
        masks = [0] * order
        for member in family:
            for r, c in member.cells():
                masks[r] |= 1 << c
        return cls(order, tuple(masks))

    def forbids(self, row: int, col: int) -> bool:
        return bool(self.row_masks[row] >> col & 1)

    def cells(self) -> set:
        return {(r, c) for r in range(self.order) for c in range(self.order) if self.forbids(r, c)}


def _check_order(square: LatinSquare, limit: Optional[int]) -> None:
    limit = EngineConfig.MAX_ORDER if limit is None else limit
    if square.order > limit:
        raise OrderTooLarge(square.order, limit)


def _row_options(square: LatinSquare, mask: Optional[AvoidanceMask] = None) -> Options:
    n = square.order
    return tuple(
        tuple(
            (c, 1 << c, 1 << square.grid[r][c])
            for c in range(n)
            if mask is None or not mask.forbids(r, c)
        )
        for r in range(n)
    )


def _feasible(options: Options, row: int, used_cols: int, used_syms: int) -> bool:
    """남은 행마다 선택지가 있고 남은 열/기호마다 놓일 칸이 있는지 (전방 검사)"""
    open_cols = open_syms = 0
    for r in range(row, len(options)):
        row_open = False
        for _, col_bit, sym_bit in options[r]:
            if used_cols & col_bit or used_syms & sym_bit:
                continue
            open_cols |= col_bit
            open_syms |= sym_bit
            row_open = True
        if not row_open:
            return False
    full = (1 << len(options)) - 1
    return (open_cols | used_cols) == full and (open_syms | used_syms) == full


def _count_from(options: Options, row: int, used_cols: int, used_syms: int, stats: List[int]) -> int:
    if row == len(options):
        return 1
    if not _feasible(options, row, used_cols, used_syms):
        return 0
    total = 0
    for _, col_bit, sym_bit in options[row]:
        if used_cols & col_bit or used_syms & sym_bit:
            continue
        stats[0] += 1
        total += _count_from(options, row + 1, used_cols | col_bit, used_syms | sym_bit, stats)
    return total


def _count_branch(task: Tuple[Options, Option]) -> Tuple[int, int]:
    """첫 행의 한 선택지 아래 부분 트리 (작업자 프로세스용)"""
    options, (_, col_bit, sym_bit) = task
    stats = [1]
    count = _count_from(options, 1, col_bit, sym_bit, stats)
    return count, stats[0]


def _count(options: Options, workers: int) -> Tuple[int, int]:
    if not options:
        return 1, 0
    if workers <= 1 or len(options) < 2:
        stats = [0]
        return _count_from(options, 0, 0, 0, stats), stats[0]

    tasks = [(options, choice) for choice in options[0]]
    with multiprocessing.Pool(processes=min(workers, max(len(tasks), 1))) as pool:
        results = pool.map(_count_branch, tasks)
    return sum(c for c, _ in results), sum(v for _, v in results)


def _timed_count(square: LatinSquare, mask: Optional[AvoidanceMask], workers: Optional[int]) -> CountResult:
    workers = EngineConfig.resolve_workers(workers)
    start = time.perf_counter()
    count, nodes = _count(_row_options(square, mask), workers)
    elapsed = time.perf_counter() - start
    logger.info(f"횡단선 {count}개 (차수 {square.order}, 노드 {nodes}, 작업자 {workers}, {elapsed:.3f}초)")
    return CountResult(count=count, nodes_visited=nodes, elapsed=elapsed)


@monitor_performance("count_transversals")
def count_transversals(square: LatinSquare,
                       workers: Optional[int] = None,
                       max_order: Optional[int] = None) -> CountResult:
    """t(A): 방진의 횡단선 개수"""
    _check_order(square, max_order)
    return _timed_count(square, None, workers)


def _check_family(square: LatinSquare, family: TransversalFamily) -> None:
    for member in family:
        if not is_transversal(square, member):
            raise NotATransversal(member.cols)


@monitor_performance("count_avoiding")
def count_avoiding(square: LatinSquare,
                   family: TransversalFamily,
                   workers: Optional[int] = None,
                   max_order: Optional[int] = None) -> CountResult:
    """t(A; T_0..T_{k-1}): 주어진 횡단선과 칸을 공유하지 않는 횡단선 개수"""
    _check_order(square, max_order)
    _check_family(square, family)
    return _timed_count(square, AvoidanceMask.from_family(square.order, family), workers)


def _walk(options: Options, row: int, used_cols: int, used_syms: int, cols: List[int]) -> Iterator[Tuple[int, ...]]:
    if row == len(options):
        yield tuple(cols)
        return
    if not _feasible(options, row, used_cols, used_syms):
        return
    for col, col_bit, sym_bit in options[row]:
        if used_cols & col_bit or used_syms & sym_bit:
            continue
        cols.append(col)
        yield from _walk(options, row + 1, used_cols | col_bit, used_syms | sym_bit, cols)
        cols.pop()


def _generate(options: Options, limit: Optional[int]) -> Iterator[Transversal]:
    emitted = 0
    if limit is not None and limit <= 0:
        return
    for cols in _walk(options, 0, 0, 0, []):
        yield Transversal(cols)
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def enumerate_transversals(square: LatinSquare,
                           limit: Optional[int] = None,
                           mask: Optional[AvoidanceMask] = None,
                           max_order: Optional[int] = None) -> Iterator[Transversal]:
    """횡단선을 cols 사전식 순서로 한 번씩 생성"""
    _check_order(square, max_order)
    return _generate(_row_options(square, mask), limit)


@monitor_performance("enumerate_transversals")
def visit_transversals(square: LatinSquare,
                       visitor: Callable[[Transversal], None],
                       limit: Optional[int] = None,
                       max_order: Optional[int] = None) -> int:
    """각 횡단선에 visitor를 순서대로 호출하고 개수 반환"""
    emitted = 0
    for transversal in enumerate_transversals(square, limit=limit, max_order=max_order):
        visitor(transversal)
        emitted += 1
    return emitted


def has_transversal(square: LatinSquare, max_order: Optional[int] = None) -> bool:
    return next(enumerate_transversals(square, limit=1, max_order=max_order), None) is not None


@monitor_performance("find_disjoint_family")
def find_disjoint_family(square: LatinSquare,
                         k: int,
                         max_order: Optional[int] = None) -> Optional[TransversalFamily]:
    """서로소 횡단선 k개를 결정적 백트래킹으로 탐색, 없으면 None"""
    _check_order(square, max_order)
    n = square.order
    if not 0 <= k <= n:
        raise ValidationError(f"k={k}은(는) 0..{n} 범위여야 합니다", {'k': k, 'order': n}, 'BAD_FAMILY_SIZE')

    chosen: List[Transversal] = []

    def extend(forbidden: List[int]) -> bool:
        if len(chosen) == k:
            return True
        # 서로소 횡단선은 0행의 열이 모두 다르므로 0행 열을 증가 순으로 고정
        first_col = chosen[-1].cols[0] if chosen else -1
        mask = AvoidanceMask(n, tuple(
            forbidden[r] | (((1 << (first_col + 1)) - 1) if r == 0 else 0) for r in range(n)
        ))
        for candidate in _generate(_row_options(square, mask), None):
            chosen.append(candidate)
            updated = list(forbidden)
            for r, c in candidate.cells():
                updated[r] |= 1 << c
            if extend(updated):
                return True
            chosen.pop()
        return False

    if not extend([0] * n):
        logger.info(f"서로소 횡단선 {k}개 모음이 없습니다 (차수 {n})")
        return None
    return make_family(square, chosen, require_disjoint=True)


@monitor_performance("brute_force_count")
def brute_force_count(square: LatinSquare, max_order: Optional[int] = None) -> CountResult:
    """n! 개 대각선을 모두 검사하는 독립 오라클"""
    limit = EngineConfig.ORACLE_MAX_ORDER if max_order is None else max_order
    if square.order > limit:
        raise OrderTooLarge(square.order, limit)

    start = time.perf_counter()
    count = 0
    visited = 0
    for cols in permutations(range(square.order)):
        visited += 1
        if is_transversal(square, Transversal(cols)):
            count += 1
    return CountResult(count=count, nodes_visited=visited, elapsed=time.perf_counter() - start)


def family_from_cols(square: LatinSquare, cols_list: Sequence[Sequence[int]]) -> TransversalFamily:
    """cols 목록에서 검증된 모음 생성"""
    return make_family(square, [Transversal(tuple(cols)) for cols in cols_list])
