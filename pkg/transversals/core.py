"""
라틴 방진 핵심 타입과 검증
모든 모듈이 공유하는 도메인 타입, 생성 시 검증, 칸 단위 조회
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from utils.error_handler import (
    BadOrder,
    ColumnViolation,
    LengthMismatch,
    NotADiagonal,
    NotATransversal,
    NotDisjoint,
    NotOrthogonal,
    PairDoubled,
    PairUncovered,
    RowViolation,
    SizeMismatch,
    SymbolOutOfRange,
    ValidationError,
)

Grid = Tuple[Tuple[int, ...], ...]
Triple = Tuple[int, int, int]


class OrderedTriple(NamedTuple):
    """(행, 열, 기호) 삼중"""
    row: int
    col: int
    sym: int


@dataclass(frozen=True)
class LatinSquare:
    """검증된 라틴 방진 (준군 곱셈표)"""
    order: int
    grid: Grid

    def symbol(self, row: int, col: int) -> int:
        return self.grid[row][col]

    def triples(self) -> Iterator[OrderedTriple]:
        for r, row in enumerate(self.grid):
            for c, s in enumerate(row):
                yield OrderedTriple(r, c, s)

    def contains(self, triple: OrderedTriple) -> bool:
        return self.grid[triple.row][triple.col] == triple.sym

    def is_idempotent(self) -> bool:
        return all(self.grid[x][x] == x for x in range(self.order))

    def is_commutative(self) -> bool:
        return all(
            self.grid[x][y] == self.grid[y][x]
            for x in range(self.order) for y in range(x + 1, self.order)
        )

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.grid]


@dataclass(frozen=True)
class SteinerTripleSystem:
    """스타이너 삼중계: 점 개수와 정렬된 삼중 목록"""
    points: int
    triples: Tuple[Triple, ...]

    def pair_table(self) -> Dict[Tuple[int, int], int]:
        """점 쌍 -> 세 번째 점"""
        table = {}
        for a, b, c in self.triples:
            table[(a, b)] = table[(b, a)] = c
            table[(a, c)] = table[(c, a)] = b
            table[(b, c)] = table[(c, b)] = a
        return table


@dataclass(frozen=True)
class Transversal:
    """행 -> 열 사상으로 표현한 대각선"""
    cols: Tuple[int, ...]

    def cells(self) -> Iterator[Tuple[int, int]]:
        return enumerate(self.cols)

    def __len__(self) -> int:
        return len(self.cols)


@dataclass(frozen=True)
class TransversalFamily:
    """횡단선 목록, disjoint=True이면 칸을 공유하지 않음"""
    transversals: Tuple[Transversal, ...]
    disjoint: bool

    def __post_init__(self):
        if self.disjoint:
            check_disjoint(self)

    def __len__(self) -> int:
        return len(self.transversals)

    def __iter__(self) -> Iterator[Transversal]:
        return iter(self.transversals)

    def covered_cells(self) -> set:
        return {cell for t in self.transversals for cell in t.cells()}


class SubsquareResult(NamedTuple):
    grid: Grid
    is_latin: bool


def _as_grid(grid: Sequence[Sequence[int]]) -> Grid:
    n = len(grid)
    if n == 0:
        raise SizeMismatch("빈 격자는 라틴 방진이 아닙니다", {'order': 0})
    rows = []
    for r, row in enumerate(grid):
        if len(row) != n:
            raise SizeMismatch(
                f"{r}번 행의 길이 {len(row)}이(가) 차수 {n}와 다릅니다",
                {'row': r, 'length': len(row), 'order': n}
            )
        for c, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError(
                    f"({r}, {c}) 칸의 값 {value!r}이(가) 정수가 아닙니다",
                    {'row': r, 'col': c}
                )
        rows.append(tuple(row))
    return tuple(rows)


def validate_latin_square(grid: Sequence[Sequence[int]]) -> LatinSquare:
    """격자를 검증하여 라틴 방진 생성"""
    cells = _as_grid(grid)
    n = len(cells)

    for r, row in enumerate(cells):
        for c, s in enumerate(row):
            if not 0 <= s < n:
                raise SymbolOutOfRange(r, c, s, n)

    for r, row in enumerate(cells):
        seen = set()
        for s in row:
            if s in seen:
                raise RowViolation(r, s)
            seen.add(s)

    for c in range(n):
        seen = set()
        for r in range(n):
            s = cells[r][c]
            if s in seen:
                raise ColumnViolation(c, s)
            seen.add(s)

    return LatinSquare(order=n, grid=cells)


def validate_sts(points: int, triples: Iterable[Sequence[int]]) -> SteinerTripleSystem:
    """삼중 목록을 정규화하고 스타이너 삼중계 조건을 검사"""
    if isinstance(points, bool) or not isinstance(points, int) or points < 1:
        raise BadOrder(points, f"점 개수는 양의 정수여야 합니다: {points!r}")
    if points % 6 not in (1, 3):
        raise BadOrder(points)

    canonical = []
    for block in triples:
        block = tuple(block)
        if len(block) != 3 or len(set(block)) != 3:
            raise ValidationError(f"삼중 {block}은(는) 서로 다른 세 점이 아닙니다",
                                  {'triple': list(block)}, 'BAD_TRIPLE')
        for x in block:
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < points:
                raise ValidationError(f"삼중 {block}의 점 {x!r}이(가) 범위를 벗어났습니다",
                                      {'triple': list(block), 'points': points}, 'BAD_TRIPLE')
        canonical.append(tuple(sorted(block)))
    canonical.sort()

    covered = set()
    for block in canonical:
        for pair in combinations(block, 2):
            if pair in covered:
                raise PairDoubled(pair)
            covered.add(pair)

    for pair in combinations(range(points), 2):
        if pair not in covered:
            raise PairUncovered(pair)

    return SteinerTripleSystem(points=points, triples=tuple(canonical))


def check_diagonal(order: int, cols: Sequence[int]) -> Transversal:
    """열 선택이 차수 order의 대각선인지 검사"""
    if len(cols) != order:
        raise LengthMismatch(order, len(cols))
    if sorted(cols) != list(range(order)):
        raise NotADiagonal(cols)
    return Transversal(tuple(cols))


def symbols_of(square: LatinSquare, diag: Transversal) -> Tuple[int, ...]:
    return tuple(square.grid[r][c] for r, c in diag.cells())


def is_transversal(square: LatinSquare, diag: Transversal) -> bool:
    """대각선의 기호가 모두 다르면 True"""
    check_diagonal(square.order, diag.cols)
    return len(set(symbols_of(square, diag))) == square.order


def make_transversal(square: LatinSquare, cols: Sequence[int]) -> Transversal:
    """검증된 횡단선 생성"""
    diag = check_diagonal(square.order, cols)
    if not is_transversal(square, diag):
        raise NotATransversal(cols)
    return diag


def make_family(square: LatinSquare,
                members: Iterable[Transversal],
                require_disjoint: bool = False) -> TransversalFamily:
    """횡단선 모음 생성, 서로소 여부는 실제 칸으로 판정"""
    members = tuple(members)
    for member in members:
        if not is_transversal(square, member):
            raise NotATransversal(member.cols)

    seen = set()
    clash = None
    for member in members:
        for cell in member.cells():
            if cell in seen and clash is None:
                clash = cell
            seen.add(cell)

    if clash is not None and require_disjoint:
        raise NotDisjoint(*clash)
    return TransversalFamily(transversals=members, disjoint=clash is None)


def check_disjoint(family: TransversalFamily) -> None:
    """서로소 플래그와 실제 칸이 일치하는지 검사"""
    seen = set()
    for member in family:
        for cell in member.cells():
            if cell in seen:
                raise NotDisjoint(*cell)
            seen.add(cell)


def extract_subsquare(square: LatinSquare,
                      rows: Iterable[int],
                      cols: Iterable[int]) -> SubsquareResult:
    """주어진 행/열의 교차 부분 격자와 라틴 부분방진 여부"""
    row_list = sorted(set(rows))
    col_list = sorted(set(cols))
    m = len(row_list)
    if m != len(col_list) or not 1 < m < square.order:
        raise SizeMismatch(
            f"부분방진 크기가 맞지 않습니다: 행 {len(row_list)}개, 열 {len(col_list)}개, 차수 {square.order}",
            {'rows': row_list, 'cols': col_list, 'order': square.order}
        )
    for index in row_list + col_list:
        if not 0 <= index < square.order:
            raise SizeMismatch(f"인덱스 {index}이(가) 범위를 벗어났습니다",
                               {'index': index, 'order': square.order})

    sub = tuple(tuple(square.grid[r][c] for c in col_list) for r in row_list)
    alphabet = set(sub[0])
    is_latin = (
        len(alphabet) == m
        and all(set(row) == alphabet for row in sub)
        and all({sub[i][j] for i in range(m)} == alphabet for j in range(m))
    )
    return SubsquareResult(grid=sub, is_latin=is_latin)


def transpose(square: LatinSquare) -> LatinSquare:
    return LatinSquare(square.order, tuple(zip(*square.grid)))


def relabel_symbols(square: LatinSquare, perm: Sequence[int]) -> LatinSquare:
    """기호 s를 perm[s]로 바꾼 방진"""
    check_diagonal(square.order, perm)
    return LatinSquare(square.order, tuple(tuple(perm[s] for s in row) for row in square.grid))


def permute_rows(square: LatinSquare, perm: Sequence[int]) -> LatinSquare:
    """새 방진의 r번 행 = 기존 perm[r]번 행"""
    check_diagonal(square.order, perm)
    return LatinSquare(square.order, tuple(square.grid[perm[r]] for r in range(square.order)))


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """칸별 기호 쌍 n^2개가 모두 다르면 직교"""
    if a.order != b.order:
        raise SizeMismatch("두 방진의 차수가 다릅니다", {'left': a.order, 'right': b.order})
    pairs = {(a.grid[r][c], b.grid[r][c]) for r in range(a.order) for c in range(a.order)}
    return len(pairs) == a.order * a.order


def mate_transversals(a: LatinSquare, b: LatinSquare) -> TransversalFamily:
    """직교 짝 b의 각 기호 위치가 a의 횡단선을 이룸"""
    if a.order != b.order:
        raise SizeMismatch("두 방진의 차수가 다릅니다", {'left': a.order, 'right': b.order})
    n = a.order
    seen: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for r in range(n):
        for c in range(n):
            pair = (a.grid[r][c], b.grid[r][c])
            if pair in seen:
                raise NotOrthogonal(pair)
            seen[pair] = (r, c)

    members = tuple(
        Transversal(tuple(b.grid[r].index(s) for r in range(n))) for s in range(n)
    )
    return TransversalFamily(transversals=members, disjoint=True)
