"""Встроенный набор триангуляций и генератор случайных сфер."""

import os

import numpy as np

from .bistellar import apply_move, find_bistellar_pairs
from .facet_io import load_chain, load_manifold

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

# Незамкнутые комплексы Λ_α, Λ_β читаются как наборы ориентированных граней
LOCAL_PREFIX = "local_"


def fixture_names():
    """Имена встроенных файлов без расширения."""
    return sorted(
        os.path.splitext(f)[0] for f in os.listdir(DATA_DIR) if f.endswith(".txt")
    )


def fixture_path(name):
    path = os.path.join(DATA_DIR, f"{name}.txt")
    if not os.path.exists(path):
        known = ", ".join(fixture_names())
        raise ValueError(f"Неизвестный набор '{name}'. Доступные: {known}")
    return path


def load_fixture(name):
    """Загружает встроенную триангуляцию.

    Returns:
        TriangulatedManifold или, для локальных комплексов, список
        OrientedSimplex.
    """
    path = fixture_path(name)
    if name.startswith(LOCAL_PREFIX):
        return load_chain(path)
    return load_manifold(path)


def random_sphere(rng, vertices, flips=20):
    """Случайная помеченная двумерная сфера.

    Начиная с границы тетраэдра, добавляет вершины 0-ходами в случайные
    грани, затем делает flips случайных флипов рёбер.

    Args:
        rng: numpy.random.Generator.
        vertices: Число вершин, не меньше 4.
        flips: Число флипов.
    """
    if vertices < 4:
        raise ValueError("Сфера содержит не меньше 4 вершин")
    sphere = load_fixture("boundary_delta3")
    while len(sphere.vertices) < vertices:
        pairs = find_bistellar_pairs(sphere, 0)
        sphere = apply_move(sphere, pairs[int(rng.integers(len(pairs)))])
    for _ in range(flips):
        pairs = find_bistellar_pairs(sphere, 1)
        if not pairs:
            break
        sphere = apply_move(sphere, pairs[int(rng.integers(len(pairs)))])
    return sphere


def random_spheres(count, max_vertices=8, seed=0):
    """Серия случайных сфер с 5..max_vertices вершинами."""
    rng = np.random.default_rng(seed)
    return [
        random_sphere(rng, int(rng.integers(5, max_vertices + 1)), int(rng.integers(0, 15)))
        for _ in range(count)
    ]
