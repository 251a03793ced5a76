import json
import logging

import pytest

from cli import STATS_HEADER, run
from config import Config
from graph_core import subgraph
from instances import emit_edge_list, figure1_scss, parse_edge_list, write_edge_list


@pytest.fixture
def fig_path():
    return Config.FIGURE1_PATH


@pytest.fixture
def scss_path(tmp_path, figure1):
    path = tmp_path / 'fig_b.txt'
    write_edge_list(str(path), subgraph(figure1, figure1_scss(figure1)))
    return str(path)


def run_json(capsys, *argv):
    code = run([*argv, '--format', 'json'])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


class TestCheck:
    def test_figure1(self, capsys, fig_path):
        code, data = run_json(capsys, 'check', '--input', fig_path)
        assert code == 0
        assert data['strongly_biconnected'] is True
        assert data['articulation_points'] == []
        assert data['sbc_parts'] == [list(range(1, 14))]
        assert data['reason'] is None

    def test_figure1_b(self, capsys, scss_path):
        code, data = run_json(capsys, 'check', '--input', scss_path)
        assert code == 0
        assert data['strongly_connected'] is True
        assert data['strongly_biconnected'] is False
        assert data['articulation_points'] == [5]
        assert 5 in data['strong_articulation_points']
        assert len(data['strong_bridges']) == 14
        assert data['sbc_parts'] == [[1, 2, 3, 5, 9, 10], [4, 5, 6, 7, 8, 11, 12, 13]]

    def test_text_format(self, capsys, scss_path):
        assert run(['check', '--input', scss_path]) == 0
        out = capsys.readouterr().out
        assert "strongly_biconnected: false" in out
        assert "sbc_parts: 1 2 3 5 9 10 | 4 5 6 7 8 11 12 13" in out


class TestSolve:
    def test_alg1(self, capsys, fig_path):
        code, data = run_json(capsys, 'solve', '--input', fig_path, '--root', '5')
        assert code == 0
        assert data['algorithm'] == 'alg1'
        assert data['root'] == 5
        assert data['strongly_biconnected'] is True
        assert 15 <= data['size'] <= data['bound_3n_minus_3'] == 36
        assert len(data['arcs']) == data['size']

    def test_augment_uses_exact_scss(self, capsys, fig_path):
        code, data = run_json(capsys, 'solve', '--input', fig_path, '--alg', 'augment')
        assert code == 0
        assert data['size'] == 15
        assert data['seed_size'] == 14
        assert [12, 2] in data['arcs']

    def test_augment_over_cap_falls_back_to_greedy(self, capsys, fig_path):
        code, data = run_json(capsys, 'solve', '--input', fig_path, '--alg', 'augment', '--cap', '5')
        assert code == 0
        assert data['size'] == 15

    def test_combine(self, capsys, fig_path):
        code, data = run_json(capsys, 'solve', '--input', fig_path, '--alg', 'combine')
        assert code == 0
        assert data['size'] == 15
        assert data['scss_size'] == 14
        assert data['two_vcss_size'] == 15

    def test_combine_with_file(self, capsys, tmp_path, fig_path, figure1):
        path = tmp_path / 'two.txt'
        path.write_text(emit_edge_list(figure1), encoding='utf-8')
        code, data = run_json(capsys, 'solve', '--input', fig_path, '--alg', 'combine',
                              '--two-vcss', str(path))
        assert code == 0
        assert data['two_vcss_size'] == 16

    def test_not_strongly_biconnected(self, capsys, scss_path):
        assert run(['solve', '--input', scss_path]) == 1
        assert "articulation point 5" in capsys.readouterr().err

    def test_root_out_of_range(self, capsys, fig_path):
        assert run(['solve', '--input', fig_path, '--root', '14']) == 2


class TestExactAndMinimize:
    def test_exact(self, capsys, fig_path):
        code, data = run_json(capsys, 'exact', '--input', fig_path)
        assert code == 0
        assert (data['h'], data['i'], data['s']) == (15, 14, 15)
        assert [7, 8] not in data['h_witness']
        assert len(data['s_witness']) == 15
        assert data['explored'] > 0

    def test_exact_over_cap(self, capsys, fig_path):
        assert run(['exact', '--input', fig_path, '--cap', '10']) == 1
        assert "too large" in capsys.readouterr().err

    def test_minimize(self, capsys, fig_path):
        code, data = run_json(capsys, 'minimize', '--input', fig_path)
        assert code == 0
        assert data['start_size'] == 16
        assert data['size'] == 15
        assert data['ratio_to_2n'] == '15/26'

    def test_minimize_from_alg1(self, capsys, fig_path):
        code, data = run_json(capsys, 'minimize', '--input', fig_path, '--from', 'alg1')
        assert code == 0
        assert data['size'] <= data['start_size']


class TestGenAndExport:
    def test_gen_stdout_reparses(self, capsys):
        assert run(['gen', '--family', 'random-ear', '--n', '9', '--extra', '2', '--seed', '4']) == 0
        g = parse_edge_list(capsys.readouterr().out)
        assert g.n == 9

    def test_gen_is_deterministic(self, capsys):
        argv = ['gen', '--family', 'random-sb', '--n', '7', '--extra', '5', '--seed', '3']
        run(argv)
        first = capsys.readouterr().out
        run(argv)
        assert capsys.readouterr().out == first

    def test_gen_to_file(self, capsys, tmp_path):
        out = tmp_path / 'g.txt'
        code, data = run_json(capsys, 'gen', '--family', 'hamiltonian-chords', '--n', '6',
                              '--extra', '3', '--output', str(out))
        assert code == 0
        assert data['m'] == 9
        assert parse_edge_list(out.read_text(encoding='utf-8')).m == 9

    @pytest.mark.parametrize('argv', [
        ['--family', 'hamiltonian-chords', '--n', '3', '--extra', '10'],
        ['--family', 'random-sb', '--n', '2'],
        ['--family', 'random-ear', '--n', '4', '--extra', '-1'],
        ['--family', 'random-sb', '--n', '4', '--extra', '9'],
    ])
    def test_gen_bad_parameters(self, capsys, argv):
        # плохие флаги генератора - ошибка использования, а не ошибка экземпляра
        assert run(['gen', *argv]) == 2
        assert "usage error" in capsys.readouterr().err

    def test_gen_figure1_ignores_n(self, capsys):
        assert run(['gen', '--family', 'figure1', '--n', '1']) == 0

    def test_export_highlight(self, capsys, fig_path):
        assert run(['export', '--input', fig_path, '--highlight', 'exact']) == 0
        out = capsys.readouterr().out
        assert out.startswith('digraph G {')
        assert out.count(Config.DOT_HIGHLIGHT) == 15
        assert "  7 -> 8;" in out


class TestStats:
    def test_rows_in_filename_order(self, capsys, tmp_path, figure1, triangle):
        write_edge_list(str(tmp_path / 'b_fig.txt'), figure1)
        write_edge_list(str(tmp_path / 'a_tri.txt'), triangle)
        (tmp_path / 'c_bad.txt').write_text("3 1\n1 2\n", encoding='utf-8')
        (tmp_path / 'notes.md').write_text("skip", encoding='utf-8')

        # все строки печатаются, но упавший c_bad даёт код 1
        assert run(['stats', '--input', str(tmp_path), '--workers', '2']) == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == ','.join(STATS_HEADER)
        assert lines[1] == 'a_tri.txt,3,3,3,3,1.0000'
        assert lines[2].startswith('b_fig.txt,13,16,')
        assert lines[2].split(',')[4] == '15'
        assert lines[3] == 'c_bad.txt,3,1,,,'
        assert len(lines) == 4

    def test_all_good_exit_zero(self, capsys, tmp_path, figure1, triangle):
        write_edge_list(str(tmp_path / 'a_tri.txt'), triangle)
        write_edge_list(str(tmp_path / 'b_fig.txt'), figure1)
        code, data = run_json(capsys, 'stats', '--input', str(tmp_path))
        assert code == 0
        assert data['failed'] == 0
        assert [row['instance'] for row in data['rows']] == ['a_tri.txt', 'b_fig.txt']

    def test_failed_count_in_json(self, capsys, tmp_path, triangle):
        write_edge_list(str(tmp_path / 'a_tri.txt'), triangle)
        (tmp_path / 'b_bad.txt').write_text("3 1\n1 2\n", encoding='utf-8')
        code, data = run_json(capsys, 'stats', '--input', str(tmp_path))
        assert code == 1
        assert data['failed'] == 1
        assert data['rows'][1]['alg1_size'] == ''

    def test_invalid_utf8_row_fails(self, capsys, tmp_path, triangle):
        write_edge_list(str(tmp_path / 'a_tri.txt'), triangle)
        (tmp_path / 'b_bin.txt').write_bytes(b"3 3\n1 2\n2 3\n3 \xff1\n")
        assert run(['stats', '--input', str(tmp_path)]) == 1
        lines = capsys.readouterr().out.splitlines()
        assert lines[1] == 'a_tri.txt,3,3,3,3,1.0000'
        assert lines[2] == 'b_bin.txt,,,,,'

    def test_clamped_root_is_logged(self, caplog, capsys, tmp_path, triangle):
        write_edge_list(str(tmp_path / 'a_tri.txt'), triangle)
        with caplog.at_level(logging.WARNING, logger='cli'):
            assert run(['stats', '--input', str(tmp_path), '--root', '99']) == 0
        assert any("корень 99" in r.getMessage() and "берём 3" in r.getMessage() for r in caplog.records)
        assert capsys.readouterr().out.splitlines()[1] == 'a_tri.txt,3,3,3,3,1.0000'


class TestUsage:
    def test_missing_input(self, capsys):
        assert run(['check']) == 2

    def test_missing_file(self, capsys, tmp_path):
        assert run(['check', '--input', str(tmp_path / 'nope.txt')]) == 2

    def test_unknown_command(self, capsys):
        assert run(['frobnicate']) == 2

    def test_negative_cap(self, capsys, fig_path):
        assert run(['exact', '--input', fig_path, '--cap', '-1']) == 2

    def test_parse_error_exit_code(self, capsys, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text("3 1\n1 9\n", encoding='utf-8')
        assert run(['check', '--input', str(path)]) == 1
        assert "line 2" in capsys.readouterr().err

    def test_invalid_utf8_exit_code(self, capsys, tmp_path):
        path = tmp_path / 'bin.txt'
        path.write_bytes(b"3 3\n1 2\n2 3\n3 \xff1\n")
        assert run(['check', '--input', str(path)]) == 1
        err = capsys.readouterr().err
        assert "line 4" in err
        assert "invalid UTF-8" in err

    def test_invalid_utf8_two_vcss(self, capsys, fig_path, tmp_path):
        path = tmp_path / 'two.txt'
        path.write_bytes(b"13 1\n\xfe\n")
        assert run(['solve', '--input', fig_path, '--alg', 'combine', '--two-vcss', str(path)]) == 1
        assert "line 2" in capsys.readouterr().err
