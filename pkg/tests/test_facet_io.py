"""Тесты для модуля файлов граней."""

import json
import os
import tempfile

import pytest

from bistellar_cluster.cluster_algebra import presentation
from bistellar_cluster.complex_core import OrientedSimplex
from bistellar_cluster.errors import NotClosed, OrientationBreak, ParseError
from bistellar_cluster.exchange_graph import enumerate_class
from bistellar_cluster.exchange_matrix import exchange_matrix
from bistellar_cluster.facet_io import (
    format_facets,
    format_info,
    format_matrix,
    format_relations,
    load_chain,
    load_manifold,
    manifold_from_entries,
    parse_facets,
    read_facet_file,
    write_facet_file,
)
from bistellar_cluster.fixtures import load_fixture
from bistellar_cluster.semifields import make_semifield


def _write(tmpdir, text, name="k.txt"):
    path = os.path.join(tmpdir, name)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path


class TestParseFacets:
    """Тесты разбора текста файла граней."""

    def test_plain(self):
        entries = parse_facets("1 2 3\n1,2,4\n")
        assert entries == [(1, (1, 2, 3), None), (2, (1, 2, 4), None)]

    def test_comments_and_blank_lines(self):
        entries = parse_facets("# заголовок\n\n+ 3 2 1  # грань\n")
        assert entries == [(3, (1, 2, 3), 1)]

    def test_signs(self):
        entries = parse_facets("+ 1 2 3\n- 1 2 4\n")
        assert [sign for _, _, sign in entries] == [1, -1]

    def test_bad_token(self):
        with pytest.raises(ParseError) as info:
            parse_facets("1 2 3\n1 x 4\n")
        assert info.value.line == 2

    def test_repeated_vertex(self):
        with pytest.raises(ParseError) as info:
            parse_facets("1 1 2\n")
        assert info.value.line == 1

    def test_sign_without_vertices(self):
        with pytest.raises(ParseError):
            parse_facets("+\n")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_facets("# только комментарий\n")

    def test_missing_file(self):
        with pytest.raises(ParseError, match="Файл не найден"):
            read_facet_file("/nonexistent/k.txt")


class TestLoadManifold:
    """Тесты чтения многообразий."""

    def test_unsigned_gets_orientation(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = _write(tmpdir, "1 2 3\n1 2 4\n1 3 4\n2 3 4\n")
            manifold = load_manifold(path)
            assert [manifold.sign(f) for f in manifold.facets] == [1, -1, 1, -1]

    def test_signed_checked(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = _write(tmpdir, "+ 1 2 3\n+ 1 2 4\n+ 1 3 4\n+ 2 3 4\n")
            with pytest.raises(OrientationBreak):
                load_manifold(path)

    def test_partial_signs(self):
        entries = parse_facets("+ 1 2 3\n1 2 4\n+ 1 3 4\n- 2 3 4\n")
        with pytest.raises(ParseError) as info:
            manifold_from_entries(entries)
        assert info.value.line == 2

    def test_error_mentions_line(self):
        entries = parse_facets("1 2 3\n1 2 4\n1 3 4\n")
        with pytest.raises(NotClosed, match="строка 1"):
            manifold_from_entries(entries)

    def test_duplicate_signed_facet(self):
        entries = parse_facets("+ 1 2 3\n- 1 2 3\n")
        with pytest.raises(ParseError):
            manifold_from_entries(entries)

    def test_load_chain(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = _write(tmpdir, "+ 1 2 3\n- 1 2 4\n1 3 4\n")
            chain = load_chain(path)
            assert chain == [
                OrientedSimplex((1, 2, 3), 1),
                OrientedSimplex((1, 2, 4), -1),
                OrientedSimplex((1, 3, 4), 1),
            ]


class TestWriteFacets:
    """Тесты записи файлов граней."""

    def test_format(self):
        text = format_facets(load_fixture("sphere5"), signed=True)
        assert text.splitlines()[:3] == ["# n=2", "+ 1 2 4", "- 1 2 5"]

    def test_unsigned_by_default(self):
        lines = format_facets(load_fixture("sphere5")).splitlines()
        assert lines[:2] == ["1 2 4", "1 2 5"]
        assert not any(line.startswith(("#", "+", "-")) for line in lines)

    def test_unsigned_file_reloads(self, tmp_path):
        manifold = load_fixture("octahedron")
        path = write_facet_file(manifold, str(tmp_path / "plain.txt"), signed=False)
        assert load_manifold(path).facets == manifold.facets

    @pytest.mark.parametrize("name", ["sphere5", "octahedron", "sphere4_h2", "boundary_delta4"])
    def test_round_trip(self, name):
        manifold = load_fixture(name)
        with tempfile.TemporaryDirectory() as tmpdir:
            path = write_facet_file(manifold, os.path.join(tmpdir, "out", f"{name}.txt"))
            assert load_manifold(path) == manifold

    def test_negated_round_trip(self):
        manifold = load_fixture("sphere5").negated()
        with tempfile.TemporaryDirectory() as tmpdir:
            path = write_facet_file(manifold, os.path.join(tmpdir, "neg.txt"))
            assert load_manifold(path) == manifold


class TestFormatting:
    """Тесты текстовых форматов вывода."""

    def test_matrix_text(self):
        text = format_matrix(exchange_matrix(load_fixture("boundary_delta3")))
        lines = text.splitlines()
        assert lines[0] == "(1,2) (1,3) (1,4) (2,3) (2,4) (3,4)"
        assert len(lines) == 7
        assert set(lines[1].split()) <= {"+1", "-1", "0", "+2", "-2"}

    def test_matrix_structured(self):
        matrix = exchange_matrix(load_fixture("sphere5"))
        document = json.loads(format_matrix(matrix, "structured"))
        assert document["index"][0] == [1, 2]
        assert document["rows"] == matrix.rows()

    def test_info(self):
        text = format_info(load_fixture("boundary_delta4"), {1: 0, 2: 0, 3: 0})
        lines = text.splitlines()
        assert lines[0] == "n=3, f=(5,10,10,5), orientable"
        assert lines[1] == "h=(1,1,1,1,1)"
        assert lines[2] == "g=(1,0,0)"
        assert lines[3] == "type-1 pairs: 0"

    def test_relations_text(self):
        algebra = presentation(enumerate_class(load_fixture("sphere5")))
        text = format_relations(algebra.relations, make_semifield("trivial"))
        assert len(text.splitlines()) == 15
        assert "x(1,2)*x(4,5) = x(1,4)*x(2,5) + x(1,5)*x(2,4)" in text.splitlines()

    def test_relations_structured(self):
        semifield = make_semifield("tropical")
        algebra = presentation(enumerate_class(load_fixture("sphere5")), semifield)
        document = json.loads(format_relations(algebra.relations, semifield, "structured"))
        assert len(document) == 15
        assert set(document[0]) == {"left", "m_plus", "m_minus"}
        assert set(document[0]["m_plus"]) == {"exponents", "coefficient"}
