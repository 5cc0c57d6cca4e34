"""
방진/삼중계 구성
순환 방진, 반합 방진, 보스 삼중계, 스타이너 방진, 횡단선 들어올리기, 연장(prolongation)
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from transversals.core import (
    Grid,
    LatinSquare,
    SteinerTripleSystem,
    Transversal,
    TransversalFamily,
    check_disjoint,
    is_transversal,
    make_family,
    validate_latin_square,
    validate_sts,
)
from utils.error_handler import (
    AppError,
    BadOrder,
    BadSubsquareAlphabet,
    BadSubsquareOrder,
    EvenOrder,
    NotATransversal,
    NotCommutative,
    NotIdempotent,
    OrderTwo,
    ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BosePoint:
    """보스 구성의 점 (x, i), 인덱스 x + n*i"""
    base: int
    layer: int

    def encode(self, n: int) -> int:
        return self.base + n * self.layer

    @classmethod
    def decode(cls, index: int, n: int) -> 'BosePoint':
        return cls(base=index % n, layer=index // n)


def _require_positive(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise BadOrder(n, f"차수는 양의 정수여야 합니다: {n!r}")


def _require_odd(n: int) -> None:
    _require_positive(n)
    if n % 2 == 0:
        raise EvenOrder(n)


def cyclic_square(n: int) -> LatinSquare:
    """순환군 곱셈표 B_n"""
    _require_positive(n)
    return LatinSquare(n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def half_sum_square(n: int) -> LatinSquare:
    """q(x,y) = (x+y)/2 mod n 인 멱등 가환 방진 B'_n"""
    _require_odd(n)
    half = (n + 1) // 2
    return LatinSquare(n, tuple(tuple(((x + y) * half) % n for y in range(n)) for x in range(n)))


def shifted_diagonal_family(n: int) -> TransversalFamily:
    """B'_n의 서로소 횡단선 n개, c번째는 cols[x] = x + c"""
    square = half_sum_square(n)
    members = [Transversal(tuple((x + c) % n for x in range(n))) for c in range(n)]
    return make_family(square, members, require_disjoint=True)


def _require_idempotent_commutative(square: LatinSquare) -> None:
    n = square.order
    for x in range(n):
        if square.grid[x][x] != x:
            raise NotIdempotent(x, square.grid[x][x])
    for x in range(n):
        for y in range(x + 1, n):
            if square.grid[x][y] != square.grid[y][x]:
                raise NotCommutative(x, y)


def bose_sts(square: LatinSquare) -> SteinerTripleSystem:
    """멱등 가환 방진에서 차수 3n의 스타이너 삼중계 구성"""
    _require_idempotent_commutative(square)
    n = square.order

    layered = [
        (BosePoint(x, i).encode(n), BosePoint(y, i).encode(n), BosePoint(square.grid[x][y], (i + 1) % 3).encode(n))
        for i in range(3)
        for x in range(n)
        for y in range(x + 1, n)
    ]
    spine = [tuple(BosePoint(x, i).encode(n) for i in range(3)) for x in range(n)]

    sts = validate_sts(3 * n, layered + spine)
    logger.debug(f"보스 삼중계 생성: 차수 {3 * n}, 삼중 {len(sts.triples)}개")
    return sts


def steiner_square(sts: SteinerTripleSystem) -> LatinSquare:
    """삼중계의 각 삼중을 순서 삼중 6개로 바꾸고 (a,a,a)를 추가한 방진"""
    n = sts.points
    table = sts.pair_table()
    grid = tuple(
        tuple(a if a == b else table[(a, b)] for b in range(n))
        for a in range(n)
    )
    return LatinSquare(n, grid)


def lift_transversal(square: LatinSquare, diag: Transversal) -> Transversal:
    """A의 횡단선 T를 S_3n의 횡단선 T'으로 들어올림"""
    _require_idempotent_commutative(square)
    if not is_transversal(square, diag):
        raise NotATransversal(diag.cols)

    n = square.order
    cols = [0] * (3 * n)
    for a, b in diag.cells():
        if a != b:
            for i in range(3):
                cols[a + n * i] = b + n * i
        else:
            cols[a] = a + n
            cols[a + n] = a + 2 * n
            cols[a + 2 * n] = a
    return Transversal(tuple(cols))


def lift_family(square: LatinSquare, family: TransversalFamily) -> TransversalFamily:
    lifted = tuple(lift_transversal(square, member) for member in family)
    return TransversalFamily(transversals=lifted, disjoint=family.disjoint)


def relabel_corner(corner: LatinSquare, offset: int) -> Grid:
    """보조 방진의 기호를 {offset, ..., offset+k-1}로 옮김"""
    return tuple(tuple(s + offset for s in row) for row in corner.grid)


def prolongation(square: LatinSquare,
                 family: TransversalFamily,
                 corner: Sequence[Sequence[int]]) -> LatinSquare:
    """서로소 횡단선 k개를 새 기호로 바꿔 차수 n+k 방진 구성"""
    n = square.order
    k = len(family)

    check_disjoint(family)
    for member in family:
        if not is_transversal(square, member):
            raise NotATransversal(member.cols)

    if len(corner) != k or any(len(row) != k for row in corner):
        raise BadSubsquareOrder(k, len(corner))
    for row in corner:
        for s in row:
            if isinstance(s, bool) or not isinstance(s, int) or not n <= s < n + k:
                raise BadSubsquareAlphabet(s, n, n + k - 1)
    if k:
        validate_latin_square([[s - n for s in row] for row in corner])
    else:
        return square

    size = n + k
    grid: List[List[Optional[int]]] = [[None] * size for _ in range(size)]
    for r in range(n):
        for c in range(n):
            grid[r][c] = square.grid[r][c]

    for i, member in enumerate(family):
        extra = n + i
        for a, b in member.cells():
            c = square.grid[a][b]
            grid[a][b] = extra
            grid[a][extra] = c
            grid[extra][b] = c

    for i in range(k):
        for j in range(k):
            grid[n + i][n + j] = corner[i][j]

    return validate_latin_square(grid)


def square_with_transversal(k: int) -> LatinSquare:
    """횡단선을 하나 이상 갖는 차수 k 방진 (k != 2)"""
    from transversals.engine import has_transversal

    _require_positive(k)
    if k == 2:
        raise OrderTwo()

    if k % 2 == 1:
        result = cyclic_square(k)
    else:
        base = half_sum_square(k - 1)
        diagonal = shifted_diagonal_family(k - 1).transversals[:1]
        family = TransversalFamily(transversals=diagonal, disjoint=True)
        result = prolongation(base, family, [[k - 1]])

    if not has_transversal(result):
        raise AppError(f"차수 {k} 방진에서 횡단선을 찾지 못했습니다", 500, 'CONSTRUCTION_FAILED', {'order': k})
    return result


def extended_steiner_square(n: int, k: int) -> LatinSquare:
    """S_3n을 들어올린 횡단선 k개로 연장한 차수 3n+k 방진"""
    _require_odd(n)
    if not 0 <= k <= n:
        raise ValidationError(f"k={k}은(는) 0..{n} 범위여야 합니다", {'n': n, 'k': k}, 'BAD_EXTENSION')
    if k == 2:
        raise OrderTwo()

    base = half_sum_square(n)
    steiner = steiner_square(bose_sts(base))
    if k == 0:
        return steiner

    chosen = shifted_diagonal_family(n).transversals[:k]
    lifted = lift_family(base, TransversalFamily(transversals=chosen, disjoint=True))
    family = make_family(steiner, lifted.transversals, require_disjoint=True)
    corner = relabel_corner(square_with_transversal(k), 3 * n)
    return prolongation(steiner, family, corner)


def random_latin_square(n: int, rng: Optional[random.Random] = None) -> LatinSquare:
    """Jacobson-Matthews 마르코프 연쇄로 무작위 라틴 방진 생성"""
    _require_positive(n)
    rng = rng or random.Random()
    if n == 1:
        return LatinSquare(1, ((0,),))

    # cube[r][c][s] = 1 이면 (r, c) 칸의 기호가 s
    cube = [[[0] * n for _ in range(n)] for _ in range(n)]
    for r in range(n):
        for c in range(n):
            cube[r][c][(r + c) % n] = 1

    improper: Optional[Tuple[int, int, int]] = None
    steps = 0
    while steps < n ** 3 or improper is not None:
        if improper is None:
            while True:
                r, c, s = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if cube[r][c][s] == 0:
                    break
            r2 = next(i for i in range(n) if cube[i][c][s] == 1)
            c2 = next(j for j in range(n) if cube[r][j][s] == 1)
            s2 = next(t for t in range(n) if cube[r][c][t] == 1)
        else:
            r, c, s = improper
            r2 = rng.choice([i for i in range(n) if cube[i][c][s] == 1])
            c2 = rng.choice([j for j in range(n) if cube[r][j][s] == 1])
            s2 = rng.choice([t for t in range(n) if cube[r][c][t] == 1])

        cube[r][c][s] += 1
        cube[r][c2][s2] += 1
        cube[r2][c][s2] += 1
        cube[r2][c2][s] += 1
        cube[r][c][s2] -= 1
        cube[r][c2][s] -= 1
        cube[r2][c][s] -= 1
        cube[r2][c2][s2] -= 1

        improper = (r2, c2, s2) if cube[r2][c2][s2] < 0 else None
        steps += 1

    grid = [[cube[r][c].index(1) for c in range(n)] for r in range(n)]
    return validate_latin_square(grid)
