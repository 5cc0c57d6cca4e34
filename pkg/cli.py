#!/usr/bin/env python3
"""
횡단선 도구 명령줄 인터페이스
구성, 개수 세기, 열거, 서로소 모음 탐색, 한계표, 검증, 오라클
"""

import functools
import logging
import random
import sys
from pathlib import Path

import click

from config.engine_config import EngineConfig
from config.env_loader import get_env_var, load_environment_variables
from performance_monitor import configure_logging, log_performance_report
from transversals import bounds, constructions, engine, formats
from transversals.core import is_transversal, validate_latin_square
from transversals.fixtures import (
    EXAMPLE_CORNER,
    EXAMPLE_FAMILY,
    EXAMPLE_PROLONGED,
    EXAMPLE_SQUARE,
    KNOWN_ORDERS,
    get_known_system,
)
from utils.error_handler import AppError, log_error

logger = logging.getLogger(__name__)

CONSTRUCT_KINDS = ['cyclic', 'halfsum', 'bose-sts', 'steiner', 'prolong', 'with-transversal', 'extended', 'random']
VERIFY_CHECKS = ['prop2', 'theorem1', 'bose', 'prolong-example', 'greedy-steps', 'lift']


def _settings(ctx, default_fmt='json', **overrides):
    """그룹 전역 옵션과 하위 명령 옵션 병합"""
    merged = dict(ctx.obj or {})
    merged.update({k: v for k, v in overrides.items() if v is not None})
    merged['fmt'] = merged.get('fmt') or default_fmt
    return merged


def common_options(func):
    """--format, --workers, --limit (그룹/하위 명령 모두 허용)"""
    func = click.option('--limit', type=click.IntRange(min=0), default=None, help='최대 출력 개수')(func)
    func = click.option('--workers', type=click.IntRange(min=0), default=None, help='작업자 수 (0 = CPU 수)')(func)
    func = click.option('--format', 'fmt', type=click.Choice(['json', 'text']), default=None, help='출력 형식')(func)
    return func


def cli_errors(func):
    """도메인 에러는 종료 코드 1"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except AppError as e:
            log_error(e, {'command': func.__name__})
            click.echo(formats.dumps(e.to_dict()), err=True)
            sys.exit(1)
    return wrapper


def _emit(text, output=None):
    if output:
        with open(output, 'w', encoding='utf-8') as handle:
            handle.write(text if text.endswith('\n') else text + '\n')
    else:
        click.echo(text.rstrip('\n'))


def _emit_square(square, fmt, output=None):
    if fmt == 'text':
        _emit(formats.square_to_text(square), output)
    else:
        _emit(formats.dumps(formats.square_to_json(square)), output)


def _emit_sts(sts, fmt, output=None):
    if fmt == 'text':
        _emit(formats.sts_to_text(sts), output)
    else:
        _emit(formats.dumps(formats.sts_to_json(sts)), output)


def _emit_family(family, fmt, output=None):
    if fmt == 'text':
        _emit(''.join(formats.grid_to_text([t.cols]) for t in family), output)
    else:
        _emit(formats.dumps(formats.family_to_json(family)), output)


def _require(value, name):
    if value is None:
        raise click.UsageError(f"{name} 옵션이 필요합니다")
    return value


def _read_corner(path, offset, k):
    """보조 방진 읽기: 0..k-1 기호면 offset만큼 옮기고, 아니면 그대로 전달"""
    text = Path(path).read_text(encoding='utf-8')
    rows = formats.read_json(path)['rows'] if text.lstrip().startswith('{') else formats.parse_text_grid(text)
    if rows and all(isinstance(s, int) and 0 <= s < k for row in rows for s in row):
        return constructions.relabel_corner(validate_latin_square(rows), offset)
    return rows


@click.group()
@common_options
@click.option('--verbose', is_flag=True, help='진단 로그와 성능 리포트 출력')
@click.pass_context
def cli(ctx, fmt, workers, limit, verbose):
    """라틴 방진 횡단선 구성/계산/검증 도구"""
    load_environment_variables()
    configure_logging('INFO' if verbose else get_env_var('LOG_LEVEL', 'WARNING'))
    ctx.obj = {'fmt': fmt, 'workers': workers, 'limit': limit}
    if verbose:
        ctx.call_on_close(log_performance_report)


@cli.command()
@click.argument('kind', type=click.Choice(CONSTRUCT_KINDS))
@click.option('--order', type=int, default=None, help='차수 n')
@click.option('--k', 'k', type=int, default=None, help='연장 횡단선 수 (extended)')
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), default=None)
@click.option('--family', 'family_path', type=click.Path(exists=True, dir_okay=False), default=None)
@click.option('--corner', 'corner_path', type=click.Path(exists=True, dir_okay=False), default=None)
@click.option('--seed', type=int, default=None, help='random 종류의 시드')
@click.option('--output', type=click.Path(dir_okay=False, writable=True), default=None)
@common_options
@click.pass_context
@cli_errors
def construct(ctx, kind, order, k, input_path, family_path, corner_path, seed, output, fmt, workers, limit):
    """방진 또는 삼중계 구성"""
    opts = _settings(ctx, fmt=fmt)

    if kind == 'cyclic':
        _emit_square(constructions.cyclic_square(_require(order, '--order')), opts['fmt'], output)
    elif kind == 'halfsum':
        _emit_square(constructions.half_sum_square(_require(order, '--order')), opts['fmt'], output)
    elif kind == 'with-transversal':
        _emit_square(constructions.square_with_transversal(_require(order, '--order')), opts['fmt'], output)
    elif kind == 'extended':
        _emit_square(constructions.extended_steiner_square(_require(order, '--order'), _require(k, '--k')),
                     opts['fmt'], output)
    elif kind == 'random':
        rng = random.Random(EngineConfig.RANDOM_SQUARE_SEED if seed is None else seed)
        _emit_square(constructions.random_latin_square(_require(order, '--order'), rng), opts['fmt'], output)
    elif kind == 'bose-sts':
        square = formats.read_square(_require(input_path, '--input'))
        _emit_sts(constructions.bose_sts(square), opts['fmt'], output)
    elif kind == 'steiner':
        if input_path:
            sts = formats.read_sts(input_path)
        else:
            sts = get_known_system(_require(order, '--input 또는 --order'))
        _emit_square(constructions.steiner_square(sts), opts['fmt'], output)
    elif kind == 'prolong':
        square = formats.read_square(_require(input_path, '--input'))
        family = formats.family_from_json(formats.read_json(_require(family_path, '--family')), square)
        corner = _read_corner(_require(corner_path, '--corner'), square.order, len(family))
        _emit_square(constructions.prolongation(square, family, corner), opts['fmt'], output)


@cli.command()
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--avoid', 'avoid_path', type=click.Path(exists=True, dir_okay=False), default=None)
@common_options
@click.pass_context
@cli_errors
def count(ctx, input_path, avoid_path, fmt, workers, limit):
    """정확한 횡단선 개수 출력"""
    opts = _settings(ctx, workers=workers)
    square = formats.read_square(input_path)
    if avoid_path:
        family = formats.family_from_json(formats.read_json(avoid_path), square)
        result = engine.count_avoiding(square, family, workers=opts['workers'])
    else:
        result = engine.count_transversals(square, workers=opts['workers'])
    click.echo(str(result.count))


@cli.command(name='enumerate')
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True)
@common_options
@click.pass_context
@cli_errors
def enumerate_command(ctx, input_path, fmt, workers, limit):
    """횡단선을 사전식 순서로 한 줄씩 출력"""
    opts = _settings(ctx, fmt=fmt, limit=limit)
    square = formats.read_square(input_path)

    def visitor(transversal):
        if opts['fmt'] == 'text':
            click.echo(' '.join(str(c) for c in transversal.cols))
        else:
            click.echo(formats.dumps(formats.transversal_to_json(transversal)))

    emitted = engine.visit_transversals(square, visitor, limit=opts['limit'])
    logger.info(f"횡단선 {emitted}개 출력")


@cli.command()
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--k', 'k', type=int, required=True, help='찾을 서로소 횡단선 수')
@click.option('--output', type=click.Path(dir_okay=False, writable=True), default=None)
@common_options
@click.pass_context
@cli_errors
def disjoint(ctx, input_path, k, output, fmt, workers, limit):
    """서로소 횡단선 k개 탐색"""
    opts = _settings(ctx, fmt=fmt)
    square = formats.read_square(input_path)
    family = engine.find_disjoint_family(square, k)
    if family is None:
        click.echo(f"서로소 횡단선 {k}개 모음이 없습니다", err=True)
        sys.exit(1)
    _emit_family(family, opts['fmt'], output)


@cli.command(name='bounds')
@click.option('--from', 'start', type=int, required=True)
@click.option('--to', 'stop', type=int, required=True)
@click.option('--excel', type=click.Path(dir_okay=False, writable=True), default=None, help='엑셀 파일로 저장')
@common_options
@click.pass_context
@cli_errors
def bounds_command(ctx, start, stop, excel, fmt, workers, limit):
    """차수별 스타이너 방진 횡단선 하한과 로그 한계표"""
    opts = _settings(ctx, default_fmt='text', fmt=fmt)
    if start < 1 or start > stop:
        raise click.UsageError(f"빈 범위입니다: {start}..{stop}")

    orders = range(start, stop + 1)
    if opts['fmt'] == 'json':
        click.echo(formats.dumps([bounds.bound_report(n).to_dict() for n in orders]))
        return

    table = bounds.bound_table(orders)
    if excel:
        table.to_excel(excel, index=False, engine='openpyxl')
        logger.info(f"한계표 저장: {excel}")
    click.echo(table.fillna('n/a').to_string(index=False))


def _systems(input_path, order):
    """--input, --order 순으로, 둘 다 없으면 내장 삼중계 전부"""
    if input_path:
        return [formats.read_sts(input_path)]
    if order is not None:
        return [get_known_system(order)]
    return [get_known_system(n) for n in KNOWN_ORDERS]


def _verdict(passed, summary, counterexample=None):
    if passed:
        click.echo(f"PASS {summary}")
        return
    click.echo(f"FAIL {summary}")
    if counterexample is not None:
        click.echo(formats.dumps(counterexample))
    sys.exit(1)


@cli.command()
@click.argument('check', type=click.Choice(VERIFY_CHECKS))
@click.option('--order', type=int, default=None)
@click.option('--p', 'p', type=int, default=None)
@click.option('--exhaustive/--sample', default=True, help='부분 평행류 전수/표본 검증')
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), default=None)
@common_options
@click.pass_context
@cli_errors
def verify(ctx, check, order, p, exhaustive, input_path, fmt, workers, limit):
    """예제와 한계식 검증 (통과 0, 실패 1)"""
    opts = _settings(ctx, workers=workers)

    if check == 'prolong-example':
        square = validate_latin_square(EXAMPLE_SQUARE)
        family = engine.family_from_cols(square, EXAMPLE_FAMILY)
        result = constructions.prolongation(square, family, EXAMPLE_CORNER)
        expected = tuple(tuple(row) for row in EXAMPLE_PROLONGED)
        _verdict(result.grid == expected, "연장 예제 Â_2 일치",
                 {'expected': EXAMPLE_PROLONGED, 'actual': result.to_lists()})

    elif check == 'theorem1':
        for sts in _systems(input_path, order):
            square = constructions.steiner_square(sts)
            cert = bounds.certify_theorem1(sts, square, workers=opts['workers'])
            _verdict(cert.passed,
                     f"t(S_{cert.order}) = {cert.count}, 생성 {cert.generated} >= {cert.bound}",
                     {'order': cert.order, 'count': cert.count, 'generated': cert.generated, 'bound': cert.bound})

    elif check == 'prop2':
        for sts in _systems(input_path, order):
            sizes = [p] if p is not None else range(1, bounds.p0(sts.points) + 1)
            for size in sizes:
                result = bounds.verify_prop2(sts, size, exhaustive=exhaustive)
                _verdict(result.passed,
                         f"차수 {result.order}, p={result.p}: 최대 {result.max_observed} <= s(p)={result.bound}"
                         f" ({result.classes_checked}개)",
                         {'witness': [list(t) for t in result.witness], 'meeting': result.max_observed})

    elif check == 'bose':
        orders = [order] if order is not None else [1, 3, 5, 7, 9]
        for n in orders:
            sts = constructions.bose_sts(constructions.half_sum_square(n))
            expected = 3 * n * (3 * n - 1) // 6
            _verdict(len(sts.triples) == expected, f"보스 STS({3 * n}): 삼중 {len(sts.triples)}개",
                     {'order': 3 * n, 'triples': len(sts.triples), 'expected': expected})

    elif check == 'greedy-steps':
        orders = [order] if order is not None else [n for n in range(1, 1001) if n % 6 in (1, 3)]
        for n in orders:
            bounds.greedy_step_counts(n)
        _verdict(True, f"단계 부등식 {len(orders)}개 차수")

    elif check == 'lift':
        orders = [order] if order is not None else [3, 5]
        for n in orders:
            base = constructions.half_sum_square(n)
            steiner = constructions.steiner_square(constructions.bose_sts(base))
            lifted = set()
            total = 0
            for transversal in engine.enumerate_transversals(base):
                image = constructions.lift_transversal(base, transversal)
                total += 1
                if not is_transversal(steiner, image):
                    _verdict(False, f"들어올린 대각선이 횡단선이 아닙니다 (차수 {n})",
                             {'cols': list(transversal.cols), 'lifted': list(image.cols)})
                lifted.add(image.cols)
            _verdict(len(lifted) == total, f"B'_{n}의 횡단선 {total}개 -> S_{3 * n}의 서로 다른 횡단선 {len(lifted)}개")


@cli.command()
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True)
@click.option('--compare', is_flag=True, help='백트래킹 엔진 결과와 비교')
@common_options
@click.pass_context
@cli_errors
def oracle(ctx, input_path, compare, fmt, workers, limit):
    """n! 대각선 전수 검사로 횡단선 개수 출력"""
    opts = _settings(ctx, workers=workers)
    square = formats.read_square(input_path)
    result = engine.brute_force_count(square)
    click.echo(str(result.count))
    if compare:
        fast = engine.count_transversals(square, workers=opts['workers'])
        if fast.count != result.count:
            click.echo(f"불일치: 엔진 {fast.count}, 오라클 {result.count}", err=True)
            sys.exit(1)


if __name__ == '__main__':
    cli()
