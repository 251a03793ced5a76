import logging

import pytest
from pydantic import ValidationError

from config import Config
from connectivity import is_strongly_biconnected
from errors import GeneratorError, ParseError
from graph_core import ArcSubset, build_digraph
from instances import (
    GenSpec, emit_dot, emit_edge_list, gen_hamiltonian_chords, gen_random_ear, gen_random_sb,
    generate, load_figure1, parse_edge_list, parse_undirected_edge_list, read_edge_list,
    read_undirected_edge_list, write_edge_list,
)


class TestParse:
    def test_triangle(self, triangle):
        assert parse_edge_list("3 3\n1 2\n2 3\n3 1\n") == triangle

    def test_comments_and_blank_lines(self, triangle):
        text = "# треугольник\n3 3  # n m\n\n1 2\n2 3 # ребро\n3 1"
        assert parse_edge_list(text) == triangle

    def test_duplicate_is_logged_and_collapsed(self, caplog):
        with caplog.at_level(logging.WARNING, logger='instances'):
            g = parse_edge_list("2 3\n1 2\n2 1\n1 2\n")
        assert g.m == 2
        assert "line 4: duplicate arc 1 2" in caplog.text

    @pytest.mark.parametrize('text,line', [
        ("3 1\n1 4\n", 2),
        ("3 1\n0 2\n", 2),
        ("3 1\n2 2\n", 2),
        ("3 2\n1 2\n2 x\n", 3),
        ("3 1\n1 2 3\n", 2),
        ("0 0\n", 1),
    ])
    def test_errors_carry_line_number(self, text, line):
        with pytest.raises(ParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
        assert str(exc.value).startswith(f"line {line}:")

    def test_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_edge_list("3 3\n1 2\n2 3\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_edge_list("# ничего\n")

    def test_undirected(self):
        n, edges = parse_undirected_edge_list("3 4\n1 2\n2 3\n3 1\n2 1\n")
        assert n == 3
        assert edges == {(0, 1), (1, 2), (0, 2)}

    def test_invalid_utf8_file(self, tmp_path):
        path = tmp_path / 'bin.txt'
        path.write_bytes(b"3 3\n1 2\n2 3\n3 \xff1\n")
        with pytest.raises(ParseError) as exc:
            read_edge_list(str(path))
        # 0xff стоит в четвёртой строке, смещение 14
        assert exc.value.line == 4
        assert "0xff" in str(exc.value)
        assert "offset 14" in str(exc.value)

    def test_invalid_utf8_undirected_file(self, tmp_path):
        path = tmp_path / 'bin.txt'
        path.write_bytes(b"\xc3\n")
        with pytest.raises(ParseError) as exc:
            read_undirected_edge_list(str(path))
        assert exc.value.line == 1

    def test_utf8_comment_is_fine(self, tmp_path):
        path = tmp_path / 'ok.txt'
        path.write_text("# треугольник\n3 3\n1 2\n2 3\n3 1\n", encoding='utf-8')
        assert read_edge_list(str(path)).m == 3


class TestEmit:
    def test_edge_list_is_sorted(self):
        g = build_digraph(3, [(2, 0), (0, 1), (1, 2)])
        assert emit_edge_list(g) == "3 3\n1 2\n2 3\n3 1"

    def test_edge_list_reparses(self, figure1):
        assert parse_edge_list(emit_edge_list(figure1)) == figure1

    def test_dot(self, triangle):
        dot = emit_dot(triangle, ArcSubset(triangle, [1]))
        assert dot == (
            "digraph G {\n"
            "  1;\n  2;\n  3;\n"
            "  1 -> 2;\n"
            f"  2 -> 3 [{Config.DOT_HIGHLIGHT}];\n"
            "  3 -> 1;\n"
            "}\n"
        )

    def test_dot_without_highlight(self, figure1):
        dot = emit_dot(figure1)
        assert dot.count(' -> ') == 16
        assert 'color' not in dot

    def test_write_and_read(self, tmp_path, figure1):
        path = tmp_path / 'fig.txt'
        write_edge_list(str(path), figure1)
        assert path.read_text(encoding='utf-8').endswith('\n')
        assert read_edge_list(str(path)) == figure1


class TestFigure1File:
    def test_shape(self, figure1):
        assert (figure1.n, figure1.m) == (13, 16)
        assert figure1.arc(0) == (4, 12)
        assert figure1.arc(15) == (6, 7)

    def test_custom_path(self, tmp_path, triangle):
        path = tmp_path / 'other.txt'
        path.write_text("3 3\n1 2\n2 3\n3 1\n", encoding='utf-8')
        assert load_figure1(str(path)) == triangle


class TestGenerators:
    @pytest.mark.parametrize('n', [3, 4, 9, 20])
    def test_hamiltonian_chords(self, n):
        g = gen_hamiltonian_chords(n, min(n, n * (n - 1) - n), seed=5)
        assert g.m == n + min(n, n * (n - 1) - n)
        assert g.arcs[:n] == tuple((i, (i + 1) % n) for i in range(n))
        assert is_strongly_biconnected(g)

    def test_hamiltonian_extra_cap(self):
        assert gen_hamiltonian_chords(3, 3, seed=1).m == 6
        with pytest.raises(GeneratorError):
            gen_hamiltonian_chords(3, 4, seed=1)

    @pytest.mark.parametrize('n,target', [(3, 3), (6, 12), (10, 40), (15, 20)])
    def test_random_sb(self, n, target):
        g = gen_random_sb(n, target, seed=2)
        assert (g.n, g.m) == (n, target)
        assert is_strongly_biconnected(g)

    def test_random_sb_range(self):
        with pytest.raises(GeneratorError):
            gen_random_sb(4, 3, seed=0)
        with pytest.raises(GeneratorError):
            gen_random_sb(4, 13, seed=0)

    @pytest.mark.parametrize('seed', range(12))
    def test_random_ear(self, seed):
        g = gen_random_ear(7 + seed, seed % 4, seed)
        assert g.n == 7 + seed
        assert is_strongly_biconnected(g)

    def test_small_n_rejected(self):
        for gen in (gen_hamiltonian_chords, gen_random_ear):
            with pytest.raises(GeneratorError):
                gen(2, 0, 1)

    def test_deterministic(self):
        spec = GenSpec(family='random-ear', n=11, extra_edges=3, seed=42)
        assert generate(spec).arcs == generate(spec).arcs

    def test_generate_dispatch(self, figure1):
        assert generate(GenSpec(family='figure1')) == figure1
        assert generate(GenSpec(family='random-sb', n=6, extra_edges=4, seed=1)).m == 10
        assert generate(GenSpec(family='hamiltonian-chords', n=5, extra_edges=2, seed=1)).m == 7

    def test_unknown_family(self):
        with pytest.raises(ValidationError):
            GenSpec(family='grid', n=5)
