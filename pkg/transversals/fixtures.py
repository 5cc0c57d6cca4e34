"""
내장 예제 데이터
연장 예제(3차 방진, 횡단선 T_0/T_1, 보조 방진, 기대 결과)와 검증용 스타이너 삼중계
"""

from typing import Dict, List, Sequence, Tuple

from transversals.constructions import bose_sts, half_sum_square
from transversals.core import SteinerTripleSystem, validate_sts
from utils.error_handler import BadOrder

# 연장 예제
EXAMPLE_SQUARE = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
EXAMPLE_FAMILY = [[1, 2, 0], [2, 0, 1]]    # T_0 = {(0,1,1),(1,2,0),(2,0,2)}, T_1 = {(0,2,2),(1,0,1),(2,1,0)}
EXAMPLE_CORNER = [[3, 4], [4, 3]]
EXAMPLE_PROLONGED = [
    [0, 3, 4, 1, 2],
    [4, 2, 3, 0, 1],
    [3, 4, 1, 2, 0],
    [2, 1, 0, 3, 4],
    [1, 0, 2, 4, 3],
]

# 순환 차분족 기본 블록
DIFFERENCE_FAMILIES: Dict[int, List[Tuple[int, int, int]]] = {
    7: [(0, 1, 3)],
    13: [(0, 1, 4), (0, 2, 7)],
}


def develop(base_blocks: Sequence[Tuple[int, int, int]], points: int) -> List[Tuple[int, int, int]]:
    """기본 블록을 mod points로 평행이동"""
    return [tuple((x + shift) % points for x in block) for block in base_blocks for shift in range(points)]


def fano_triples() -> List[Tuple[int, int, int]]:
    return develop(DIFFERENCE_FAMILIES[7], 7)


def get_known_system(points: int) -> SteinerTripleSystem:
    """차분족(7, 13) 또는 보스 구성(3n, n 홀수)으로 만든 내장 삼중계"""
    if points in DIFFERENCE_FAMILIES:
        return validate_sts(points, develop(DIFFERENCE_FAMILIES[points], points))
    if points % 3 == 0 and (points // 3) % 2 == 1:
        return bose_sts(half_sum_square(points // 3))
    raise BadOrder(points, f"차수 {points}의 내장 삼중계가 없습니다 (3n(n 홀수), 7, 13 지원)")


# verify theorem1/prop2 기본 차수
KNOWN_ORDERS = (3, 7, 9, 13, 15)
