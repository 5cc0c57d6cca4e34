"""JSON / 텍스트 격자 직렬화"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from transversals.core import (
    LatinSquare,
    SteinerTripleSystem,
    Transversal,
    TransversalFamily,
    check_diagonal,
    make_family,
    validate_latin_square,
    validate_sts,
)
from utils.error_handler import SizeMismatch, ValidationError

PathLike = Union[str, Path]


def _parse_error(message: str, details: Dict[str, Any] = None) -> ValidationError:
    return ValidationError(message, details, 'PARSE_ERROR')


def _require_key(data: Any, key: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise _parse_error(f"JSON에 '{key}' 키가 없습니다", {'key': key})
    return data[key]


# 라틴 방진

def square_to_json(square: LatinSquare) -> Dict[str, Any]:
    return {'order': square.order, 'rows': square.to_lists()}


def square_from_json(data: Dict[str, Any]) -> LatinSquare:
    rows = _require_key(data, 'rows')
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise _parse_error("'rows'는 정수 목록의 목록이어야 합니다")
    square = validate_latin_square(rows)
    if 'order' in data and data['order'] != square.order:
        raise SizeMismatch(f"'order' {data['order']}와 행 수 {square.order}가 다릅니다",
                           {'order': data['order'], 'rows': square.order})
    return square


def grid_to_text(rows) -> str:
    return '\n'.join(' '.join(str(s) for s in row) for row in rows) + '\n'


def square_to_text(square: LatinSquare) -> str:
    return grid_to_text(square.grid)


def parse_text_grid(text: str) -> List[List[int]]:
    """공백 구분 정수 격자, 빈 줄은 무시"""
    rows = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([int(token) for token in line.split()])
        except ValueError:
            raise _parse_error(f"{line_no}번째 줄에 정수가 아닌 값이 있습니다", {'line': line_no})
    return rows


def square_from_text(text: str) -> LatinSquare:
    return validate_latin_square(parse_text_grid(text))


# 횡단선 / 모음

def transversal_to_json(transversal: Transversal) -> Dict[str, Any]:
    return {'cols': list(transversal.cols)}


def transversal_from_json(data: Dict[str, Any], order: int) -> Transversal:
    cols = _require_key(data, 'cols')
    if not isinstance(cols, list):
        raise _parse_error("'cols'는 정수 목록이어야 합니다")
    return check_diagonal(order, cols)


def family_to_json(family: TransversalFamily) -> Dict[str, Any]:
    return {
        'disjoint': family.disjoint,
        'transversals': [transversal_to_json(t) for t in family],
    }


def family_from_json(data: Dict[str, Any], square: LatinSquare) -> TransversalFamily:
    """모음을 읽고 방진에 대해 검증, disjoint=true이면 서로소도 검사"""
    members = _require_key(data, 'transversals')
    if not isinstance(members, list):
        raise _parse_error("'transversals'는 목록이어야 합니다")
    transversals = [transversal_from_json(member, square.order) for member in members]
    return make_family(square, transversals, require_disjoint=bool(data.get('disjoint', False)))


# 스타이너 삼중계

def sts_to_json(sts: SteinerTripleSystem) -> Dict[str, Any]:
    return {'points': sts.points, 'triples': [list(t) for t in sts.triples]}


def sts_from_json(data: Dict[str, Any]) -> SteinerTripleSystem:
    points = _require_key(data, 'points')
    triples = _require_key(data, 'triples')
    if not isinstance(triples, list):
        raise _parse_error("'triples'는 목록이어야 합니다")
    return validate_sts(points, triples)


def sts_to_text(sts: SteinerTripleSystem) -> str:
    return grid_to_text(sts.triples)


def sts_from_text(text: str) -> SteinerTripleSystem:
    """한 줄에 삼중 하나, 점 개수는 최대 점 + 1 (빈 입력은 1점계)"""
    triples = parse_text_grid(text)
    for index, triple in enumerate(triples):
        if len(triple) != 3:
            raise _parse_error(f"{index + 1}번째 삼중의 원소가 {len(triple)}개입니다", {'triple': index})
    points = max((max(triple) for triple in triples), default=0) + 1
    return validate_sts(points, triples)


# 파일 입출력

def read_json(path: PathLike) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise _parse_error(f"JSON 파싱 실패: {path}: {e.msg}", {'path': str(path), 'line': e.lineno})


def read_square(path: PathLike) -> LatinSquare:
    """JSON 또는 텍스트 격자 파일에서 방진 읽기"""
    text = Path(path).read_text(encoding='utf-8')
    if text.lstrip().startswith('{'):
        return square_from_json(read_json(path))
    return square_from_text(text)


def read_sts(path: PathLike) -> SteinerTripleSystem:
    """JSON 또는 텍스트 삼중 목록 파일에서 삼중계 읽기"""
    text = Path(path).read_text(encoding='utf-8')
    if text.lstrip().startswith('{'):
        return sts_from_json(read_json(path))
    return sts_from_text(text)


def dumps(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False)
