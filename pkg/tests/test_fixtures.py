"""Тесты для встроенного набора триангуляций."""

import numpy as np
import pytest

from bistellar_cluster.complex_core import OrientedSimplex, TriangulatedManifold, face_vectors
from bistellar_cluster.fixtures import (
    fixture_names,
    fixture_path,
    load_fixture,
    random_sphere,
    random_spheres,
)


class TestFixtureNames:
    """Тесты списка встроенных файлов."""

    def test_known_names(self):
        names = fixture_names()
        for name in ("sphere5", "boundary_delta4", "sphere4_h2", "local_h2_alpha", "rp2_6"):
            assert name in names

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="Неизвестный набор"):
            fixture_path("torus")

    def test_local_fixture_is_chain(self):
        chain = load_fixture("local_h1_alpha")
        assert chain == [OrientedSimplex((1, 2, 3), 1), OrientedSimplex((1, 2, 4), -1)]

    def test_manifold_fixtures_load(self):
        for name in fixture_names():
            if name.startswith("local_") or name == "rp2_6":
                continue
            assert isinstance(load_fixture(name), TriangulatedManifold)


class TestRandomSpheres:
    """Тесты генератора случайных сфер."""

    def test_vertex_count(self):
        sphere = random_sphere(np.random.default_rng(1), 7, flips=10)
        assert len(sphere.vertices) == 7
        assert face_vectors(sphere).f == (7, 15, 10)

    def test_too_few_vertices(self):
        with pytest.raises(ValueError):
            random_sphere(np.random.default_rng(1), 3)

    def test_reproducible(self):
        assert random_spheres(5, seed=3) == random_spheres(5, seed=3)

    def test_series(self):
        spheres = random_spheres(50, max_vertices=8, seed=0)
        assert len(spheres) == 50
        for sphere in spheres:
            assert 5 <= len(sphere.vertices) <= 8
            assert face_vectors(sphere).h[1] == len(sphere.vertices) - 3
