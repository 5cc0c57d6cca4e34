from flask import jsonify
from functools import wraps
import logging
import traceback

logger = logging.getLogger(__name__)


class AppError(Exception):
    """애플리케이션 에러 클래스"""
    def __init__(self, message, status_code=500, error_code=None, details=None):
        super().__init__(message)
        self.message = message
        self.status_code = status_code
        self.error_code = error_code
        self.details = details or {}

    def to_dict(self):
        return {
            'error': self.message,
            'error_code': self.error_code,
            'details': self.details
        }


class ValidationError(AppError):
    """데이터 검증 에러"""
    def __init__(self, message, details=None, error_code='VALIDATION_ERROR'):
        super().__init__(message, 400, error_code, details)


class LimitError(AppError):
    """계산 한도 초과 에러"""
    def __init__(self, message, details=None, error_code='LIMIT_ERROR'):
        super().__init__(message, 413, error_code, details)


# 라틴 방진 검증 에러

class SymbolOutOfRange(ValidationError):
    def __init__(self, row, col, symbol, order):
        super().__init__(
            f"({row}, {col}) 칸의 기호 {symbol}이(가) 0..{order - 1} 범위를 벗어났습니다",
            {'row': row, 'col': col, 'symbol': symbol, 'order': order},
            'SYMBOL_OUT_OF_RANGE'
        )


class RowViolation(ValidationError):
    def __init__(self, row, symbol):
        super().__init__(
            f"{row}번 행에 기호 {symbol}이(가) 중복됩니다",
            {'row': row, 'symbol': symbol},
            'ROW_VIOLATION'
        )


class ColumnViolation(ValidationError):
    def __init__(self, col, symbol):
        super().__init__(
            f"{col}번 열에 기호 {symbol}이(가) 중복됩니다",
            {'col': col, 'symbol': symbol},
            'COLUMN_VIOLATION'
        )


class SizeMismatch(ValidationError):
    def __init__(self, message, details=None):
        super().__init__(message, details, 'SIZE_MISMATCH')


# 대각선/횡단선 에러

class LengthMismatch(ValidationError):
    def __init__(self, expected, actual):
        super().__init__(
            f"대각선 길이 {actual}이(가) 방진 차수 {expected}와 다릅니다",
            {'expected': expected, 'actual': actual},
            'LENGTH_MISMATCH'
        )


class NotADiagonal(ValidationError):
    def __init__(self, cols):
        super().__init__(
            "열 선택이 순열이 아닙니다",
            {'cols': list(cols)},
            'NOT_A_DIAGONAL'
        )


class NotATransversal(ValidationError):
    def __init__(self, cols, message="횡단선이 아닙니다"):
        super().__init__(message, {'cols': list(cols)}, 'NOT_A_TRANSVERSAL')


class NotDisjoint(ValidationError):
    def __init__(self, row, col):
        super().__init__(
            f"({row}, {col}) 칸이 두 횡단선에 동시에 속합니다",
            {'row': row, 'col': col},
            'NOT_DISJOINT'
        )


class NotOrthogonal(ValidationError):
    def __init__(self, pair):
        super().__init__(
            f"기호 쌍 {pair}이(가) 두 번 나타납니다",
            {'pair': list(pair)},
            'NOT_ORTHOGONAL'
        )


# 스타이너 삼중계 에러

class BadOrder(ValidationError):
    def __init__(self, order, message=None):
        super().__init__(
            message or f"차수 {order}은(는) 1 또는 3 (mod 6)이 아닙니다",
            {'order': order},
            'BAD_ORDER'
        )


class PairUncovered(ValidationError):
    def __init__(self, pair):
        super().__init__(
            f"점 쌍 {pair}을(를) 포함하는 삼중이 없습니다",
            {'pair': list(pair)},
            'PAIR_UNCOVERED'
        )


class PairDoubled(ValidationError):
    def __init__(self, pair):
        super().__init__(
            f"점 쌍 {pair}이(가) 두 삼중에 포함됩니다",
            {'pair': list(pair)},
            'PAIR_DOUBLED'
        )


# 구성 에러

class EvenOrder(ValidationError):
    def __init__(self, order):
        super().__init__(
            f"홀수 차수가 필요합니다: {order}",
            {'order': order},
            'EVEN_ORDER'
        )


class NotIdempotent(ValidationError):
    def __init__(self, x, symbol):
        super().__init__(
            f"({x}, {x}) 칸이 {symbol}입니다 (멱등 아님)",
            {'x': x, 'symbol': symbol},
            'NOT_IDEMPOTENT'
        )


class NotCommutative(ValidationError):
    def __init__(self, x, y):
        super().__init__(
            f"({x}, {y})와 ({y}, {x}) 칸이 다릅니다 (가환 아님)",
            {'x': x, 'y': y},
            'NOT_COMMUTATIVE'
        )


class BadSubsquareOrder(ValidationError):
    def __init__(self, expected, actual):
        super().__init__(
            f"보조 방진 차수 {actual}이(가) 횡단선 수 {expected}와 다릅니다",
            {'expected': expected, 'actual': actual},
            'BAD_SUBSQUARE_ORDER'
        )


class BadSubsquareAlphabet(ValidationError):
    def __init__(self, symbol, low, high):
        super().__init__(
            f"보조 방진 기호 {symbol}이(가) {low}..{high} 범위를 벗어났습니다",
            {'symbol': symbol, 'low': low, 'high': high},
            'BAD_SUBSQUARE_ALPHABET'
        )


class OrderTwo(ValidationError):
    def __init__(self):
        super().__init__(
            "차수 2의 라틴 방진에는 횡단선이 없습니다",
            {'order': 2},
            'ORDER_TWO'
        )


# 한계식 에러

class POutOfRange(ValidationError):
    def __init__(self, order, p):
        super().__init__(
            f"p={p}은(는) 0 <= 3p <= {order} 범위를 벗어났습니다",
            {'order': order, 'p': p},
            'P_OUT_OF_RANGE'
        )


class PTooLarge(ValidationError):
    def __init__(self, order, p):
        super().__init__(
            f"크기 {p}의 부분 평행류가 존재하지 않습니다 (차수 {order})",
            {'order': order, 'p': p},
            'P_TOO_LARGE'
        )


class OrderTooLarge(LimitError):
    def __init__(self, order, limit):
        super().__init__(
            f"차수 {order}이(가) 한도 {limit}을(를) 초과합니다",
            {'order': order, 'limit': limit},
            'ORDER_TOO_LARGE'
        )


def handle_errors(f):
    """에러 핸들링 데코레이터"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except AppError as e:
            logger.warning(f"애플리케이션 에러: {e.message}", extra={
                'error_code': e.error_code,
                'status_code': e.status_code,
                'details': e.details
            })
            return jsonify(e.to_dict()), e.status_code
        except Exception as e:
            logger.error(f"예상치 못한 에러: {str(e)}", extra={
                'traceback': traceback.format_exc()
            })
            return jsonify({
                'error': '서버 내부 오류가 발생했습니다',
                'error_code': 'INTERNAL_ERROR'
            }), 500
    return decorated_function


def log_error(error, context=None):
    """에러 로깅"""
    error_data = {
        'error_type': type(error).__name__,
        'error_message': str(error),
        'context': context or {}
    }

    if hasattr(error, 'status_code'):
        error_data['status_code'] = error.status_code
    if hasattr(error, 'error_code'):
        error_data['error_code'] = error.error_code

    logger.error("에러 발생", extra=error_data)
    return error_data
