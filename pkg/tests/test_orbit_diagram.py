"""Тесты для модуля визуализации графа обменов."""

import os
import tempfile

import pytest

from bistellar_cluster import orbit_diagram
from bistellar_cluster.exchange_graph import enumerate_class
from bistellar_cluster.fixtures import load_fixture
from bistellar_cluster.orbit_diagram import build_dot, render_orbit, save_dot


@pytest.fixture(scope="module")
def sphere5_graph():
    return enumerate_class(load_fixture("sphere5"))


class TestBuildDot:
    """Тесты построения описания графа."""

    def test_plain(self, sphere5_graph):
        dot = build_dot(sphere5_graph)
        source = dot.source
        assert source.count(" -- ") == 15
        assert "fillcolor" not in source
        assert "(1,2,4) (1,2,5) (1,3,4) (1,3,5) (2,3,4) (2,3,5)" in source

    def test_styled(self, sphere5_graph):
        source = build_dot(sphere5_graph, styled=True).source
        assert orbit_diagram.DEPTH_COLORS[0] in source
        assert "neato" in source

    def test_without_graphviz(self, sphere5_graph, monkeypatch):
        monkeypatch.setattr(orbit_diagram, "GRAPHVIZ_AVAILABLE", False)
        assert build_dot(sphere5_graph) is None
        assert render_orbit(sphere5_graph) is None


class TestSaveDot:
    """Тесты сохранения текста DOT."""

    def test_save(self, sphere5_graph):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "sub", "orbit.dot")
            result = save_dot(build_dot(sphere5_graph).source, path)
            assert result == path
            with open(path, "r", encoding="utf-8") as f:
                assert "exchange_graph" in f.read()

    def test_empty_source(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            assert save_dot("", os.path.join(tmpdir, "orbit.dot")) is None
