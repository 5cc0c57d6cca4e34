from flask import Blueprint, request, jsonify

from transversals import bounds, constructions, engine, formats
from utils.error_handler import ValidationError, handle_errors

# 블루프린트 생성
transversal_api = Blueprint('transversal_api', __name__)

SQUARE_KINDS = {
    'cyclic': constructions.cyclic_square,
    'halfsum': constructions.half_sum_square,
    'with-transversal': constructions.square_with_transversal,
}


def _order_arg():
    raw = request.args.get('order')
    if raw is None:
        raise ValidationError('order 파라미터가 필요합니다', {'param': 'order'})
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f'order 파라미터가 정수가 아닙니다: {raw}', {'param': 'order'})


def _json_body():
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise ValidationError('JSON 본문이 필요합니다')
    return data


@transversal_api.route('/constructions/<kind>', methods=['GET'])
@handle_errors
def construct(kind):
    """방진 구성 API"""
    if kind not in SQUARE_KINDS:
        raise ValidationError(f'지원하지 않는 구성입니다: {kind}', {'kind': kind, 'supported': sorted(SQUARE_KINDS)})
    square = SQUARE_KINDS[kind](_order_arg())
    return jsonify(formats.square_to_json(square))


@transversal_api.route('/squares/validate', methods=['POST'])
@handle_errors
def validate_square():
    """라틴 방진 검증 API"""
    square = formats.square_from_json(_json_body())
    return jsonify({
        'valid': True,
        'order': square.order,
        'idempotent': square.is_idempotent(),
        'commutative': square.is_commutative(),
    })


@transversal_api.route('/transversals/count', methods=['POST'])
@handle_errors
def count_transversals():
    """횡단선 개수 API (avoid 모음이 있으면 회피 개수)"""
    data = _json_body()
    square = formats.square_from_json(data.get('square'))
    if data.get('avoid'):
        family = formats.family_from_json(data['avoid'], square)
        result = engine.count_avoiding(square, family)
    else:
        result = engine.count_transversals(square)
    return jsonify({
        'count': str(result.count),
        'nodes_visited': result.nodes_visited,
        'elapsed': result.elapsed,
    })


@transversal_api.route('/bounds/<int:order>', methods=['GET'])
@handle_errors
def bound_report(order):
    """차수별 한계값 리포트 API"""
    report = bounds.bound_report(order).to_dict()
    if report['theorem1_bound'] is not None:
        report['theorem1_bound'] = str(report['theorem1_bound'])
    return jsonify(report)
