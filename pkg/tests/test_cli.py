"""명령줄 인터페이스 테스트 (CliRunner)"""
import json
import random

import pytest
from click.testing import CliRunner

from cli import CONSTRUCT_KINDS, cli
from transversals import formats
from transversals.constructions import (
    bose_sts,
    cyclic_square,
    extended_steiner_square,
    half_sum_square,
    random_latin_square,
    square_with_transversal,
    steiner_square,
)
from transversals.core import validate_latin_square
from transversals.fixtures import EXAMPLE_FAMILY, EXAMPLE_PROLONGED, EXAMPLE_SQUARE, KNOWN_ORDERS, get_known_system


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def b3_file(tmp_path):
    path = tmp_path / 'b3.json'
    path.write_text(formats.dumps(formats.square_to_json(cyclic_square(3))), encoding='utf-8')
    return str(path)


@pytest.fixture
def b2_file(tmp_path):
    path = tmp_path / 'b2.txt'
    path.write_text('0 1\n1 0\n', encoding='utf-8')
    return str(path)


@pytest.fixture
def family_file(tmp_path):
    path = tmp_path / 'family.json'
    path.write_text(json.dumps({
        'disjoint': True,
        'transversals': [{'cols': cols} for cols in EXAMPLE_FAMILY],
    }), encoding='utf-8')
    return str(path)


class TestConstruct:
    def test_cyclic_text(self, runner):
        result = runner.invoke(cli, ['construct', 'cyclic', '--order', '3', '--format', 'text'])
        assert result.exit_code == 0
        assert result.output == '0 1 2\n1 2 0\n2 0 1\n'

    def test_group_format_option(self, runner):
        result = runner.invoke(cli, ['--format', 'text', 'construct', 'cyclic', '--order', '1'])
        assert result.exit_code == 0
        assert result.output == '0\n'

    def test_default_json(self, runner):
        result = runner.invoke(cli, ['construct', 'halfsum', '--order', '3'])
        assert result.exit_code == 0
        assert json.loads(result.output) == {'order': 3, 'rows': [[0, 2, 1], [2, 1, 0], [1, 0, 2]]}

    def test_bose_from_file(self, runner, tmp_path):
        path = tmp_path / 'a.json'
        path.write_text(formats.dumps(formats.square_to_json(half_sum_square(3))), encoding='utf-8')
        result = runner.invoke(cli, ['construct', 'bose-sts', '--input', str(path)])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data['points'] == 9
        assert len(data['triples']) == 12

    def test_prolong(self, runner, tmp_path, family_file):
        square_path = tmp_path / 'a.txt'
        square_path.write_text(formats.grid_to_text(EXAMPLE_SQUARE), encoding='utf-8')
        corner_path = tmp_path / 'c.txt'
        corner_path.write_text('0 1\n1 0\n', encoding='utf-8')
        result = runner.invoke(cli, [
            'construct', 'prolong', '--input', str(square_path),
            '--family', family_file, '--corner', str(corner_path), '--format', 'text',
        ])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == '0 3 4 1 2'

    def test_output_file(self, runner, tmp_path):
        target = tmp_path / 'out.json'
        result = runner.invoke(cli, ['construct', 'steiner', '--order', '7', '--output', str(target)])
        assert result.exit_code == 0
        assert formats.read_square(target).order == 7

    def test_extended(self, runner):
        result = runner.invoke(cli, ['construct', 'extended', '--order', '3', '--k', '1'])
        assert result.exit_code == 0
        assert json.loads(result.output)['order'] == 10

    def test_random_is_seeded(self, runner):
        first = runner.invoke(cli, ['construct', 'random', '--order', '5', '--seed', '3'])
        second = runner.invoke(cli, ['construct', 'random', '--order', '5', '--seed', '3'])
        assert first.output == second.output

    def test_domain_error_exit_code(self, runner):
        result = runner.invoke(cli, ['construct', 'halfsum', '--order', '4'])
        assert result.exit_code == 1

    def test_missing_order_is_usage_error(self, runner):
        result = runner.invoke(cli, ['construct', 'cyclic'])
        assert result.exit_code == 2


class TestRoundTrip:
    @pytest.fixture
    def inputs(self, tmp_path, family_file):
        square_path = tmp_path / 'a.txt'
        square_path.write_text(formats.grid_to_text(EXAMPLE_SQUARE), encoding='utf-8')
        halfsum_path = tmp_path / 'b3prime.json'
        halfsum_path.write_text(formats.dumps(formats.square_to_json(half_sum_square(3))), encoding='utf-8')
        corner_path = tmp_path / 'c.txt'
        corner_path.write_text('0 1\n1 0\n', encoding='utf-8')
        return {
            'cyclic': (['--order', '5'], cyclic_square(5)),
            'halfsum': (['--order', '5'], half_sum_square(5)),
            'with-transversal': (['--order', '6'], square_with_transversal(6)),
            'extended': (['--order', '3', '--k', '1'], extended_steiner_square(3, 1)),
            'random': (['--order', '5', '--seed', '3'], random_latin_square(5, random.Random(3))),
            'bose-sts': (['--input', str(halfsum_path)], bose_sts(half_sum_square(3))),
            'steiner': (['--order', '7'], steiner_square(get_known_system(7))),
            'prolong': (['--input', str(square_path), '--family', family_file, '--corner', str(corner_path)],
                        validate_latin_square(EXAMPLE_PROLONGED)),
        }

    @pytest.mark.parametrize('fmt', ['json', 'text'])
    @pytest.mark.parametrize('kind', CONSTRUCT_KINDS)
    def test_written_file_reads_back(self, runner, tmp_path, inputs, kind, fmt):
        args, expected = inputs[kind]
        target = tmp_path / f'{kind}.{fmt}'
        result = runner.invoke(cli, ['construct', kind] + args + ['--format', fmt, '--output', str(target)])
        assert result.exit_code == 0
        read = formats.read_sts if kind == 'bose-sts' else formats.read_square
        assert read(target) == expected

    @pytest.mark.parametrize('fmt', ['json', 'text'])
    def test_bose_file_feeds_steiner_and_verify(self, runner, tmp_path, fmt):
        square_path = tmp_path / 'a.json'
        assert runner.invoke(cli, ['construct', 'halfsum', '--order', '3', '--output', str(square_path)]).exit_code == 0
        sts_path = tmp_path / f'sts9.{fmt}'
        result = runner.invoke(cli, ['construct', 'bose-sts', '--input', str(square_path),
                                     '--format', fmt, '--output', str(sts_path)])
        assert result.exit_code == 0

        result = runner.invoke(cli, ['construct', 'steiner', '--input', str(sts_path)])
        assert result.exit_code == 0
        assert json.loads(result.output)['order'] == 9
        for check in (['theorem1'], ['prop2', '--p', '2']):
            result = runner.invoke(cli, ['verify'] + check + ['--input', str(sts_path)])
            assert result.exit_code == 0
            assert result.output.startswith('PASS')


class TestCount:
    def test_count(self, runner, b3_file):
        result = runner.invoke(cli, ['count', '--input', b3_file])
        assert result.exit_code == 0
        assert result.output.strip() == '3'

    def test_avoid(self, runner, b3_file, family_file):
        result = runner.invoke(cli, ['count', '--input', b3_file, '--avoid', family_file])
        assert result.exit_code == 0
        assert result.output.strip() == '1'

    def test_text_input_without_transversals(self, runner, b2_file):
        result = runner.invoke(cli, ['count', '--input', b2_file])
        assert result.output.strip() == '0'

    def test_workers(self, runner, b3_file):
        result = runner.invoke(cli, ['--workers', '2', 'count', '--input', b3_file])
        assert result.output.strip() == '3'

    def test_invalid_square(self, runner, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text('0 1\n0 1\n', encoding='utf-8')
        result = runner.invoke(cli, ['count', '--input', str(path)])
        assert result.exit_code == 1


class TestEnumerateAndDisjoint:
    def test_enumerate_json_lines(self, runner, b3_file):
        result = runner.invoke(cli, ['enumerate', '--input', b3_file])
        assert result.exit_code == 0
        assert [json.loads(line)['cols'] for line in result.output.splitlines()] == [
            [0, 1, 2], [1, 2, 0], [2, 0, 1],
        ]

    def test_enumerate_limit_text(self, runner, b3_file):
        result = runner.invoke(cli, ['enumerate', '--input', b3_file, '--limit', '1', '--format', 'text'])
        assert result.output == '0 1 2\n'

    def test_disjoint(self, runner, b3_file):
        result = runner.invoke(cli, ['disjoint', '--input', b3_file, '--k', '3'])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data['disjoint'] is True
        assert len(data['transversals']) == 3

    def test_disjoint_not_found(self, runner, b2_file):
        result = runner.invoke(cli, ['disjoint', '--input', b2_file, '--k', '1'])
        assert result.exit_code == 1


class TestBounds:
    def test_text_table(self, runner):
        result = runner.invoke(cli, ['bounds', '--from', '7', '--to', '9'])
        assert result.exit_code == 0
        assert 'n/a' in result.output
        assert len(result.output.splitlines()) == 4

    def test_json(self, runner):
        result = runner.invoke(cli, ['bounds', '--from', '9', '--to', '9', '--format', 'json'])
        assert json.loads(result.output)[0]['theorem1_bound'] == 9

    def test_excel(self, runner, tmp_path):
        target = tmp_path / 'bounds.xlsx'
        result = runner.invoke(cli, ['bounds', '--from', '1', '--to', '15', '--excel', str(target)])
        assert result.exit_code == 0
        assert target.exists()

    def test_empty_range(self, runner):
        result = runner.invoke(cli, ['bounds', '--from', '9', '--to', '7'])
        assert result.exit_code == 2


class TestVerify:
    @pytest.mark.parametrize('args', [
        ['prolong-example'],
        ['theorem1', '--order', '9'],
        ['prop2', '--order', '7', '--p', '1'],
        ['prop2', '--order', '13', '--p', '2', '--sample'],
        ['bose'],
        ['greedy-steps', '--order', '999'],
        ['lift', '--order', '3'],
    ])
    def test_passes(self, runner, args):
        result = runner.invoke(cli, ['verify'] + args)
        assert result.exit_code == 0
        assert result.output.startswith('PASS')

    def test_prop2_defaults_to_known_systems(self, runner):
        result = runner.invoke(cli, ['verify', 'prop2'])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        # p = 1..p0 for 3, 7, 9, 13, 15
        assert len(lines) == 1 + 1 + 2 + 2 + 3
        assert all(line.startswith('PASS') for line in lines)

    @pytest.mark.slow
    def test_theorem1_defaults_to_known_systems(self, runner):
        result = runner.invoke(cli, ['--workers', '0', 'verify', 'theorem1'])
        assert result.exit_code == 0
        assert len(result.output.splitlines()) == len(KNOWN_ORDERS)

    def test_prop2_without_class(self, runner):
        result = runner.invoke(cli, ['verify', 'prop2', '--order', '7', '--p', '2'])
        assert result.exit_code == 1


class TestOracle:
    def test_compare(self, runner, b3_file):
        result = runner.invoke(cli, ['oracle', '--input', b3_file, '--compare'])
        assert result.exit_code == 0
        assert result.output.strip() == '3'

    def test_order_too_large(self, runner, tmp_path):
        path = tmp_path / 'b9.txt'
        path.write_text(formats.square_to_text(cyclic_square(9)), encoding='utf-8')
        result = runner.invoke(cli, ['oracle', '--input', str(path)])
        assert result.exit_code == 1
