"""Модуль абстрактных симплициальных комплексов.

Симплексы хранятся как возрастающие кортежи положительных целых чисел,
комплексы задаются своими максимальными гранями. Триангулированное
многообразие дополнительно хранит знаки своих n-граней (ориентацию).
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import networkx as nx
import sympy as sp

from .errors import (
    ComplexError,
    FaceNotInComplex,
    NotClosed,
    NotConnected,
    NotManifold,
    NotOrientable,
    NotPure,
    OrientationBreak,
    VertexOverlap,
)

EMPTY_SIMPLEX = ()


def simplex(vertices):
    """Приводит набор вершин к симплексу (возрастающему кортежу).

    Args:
        vertices: Итерируемый набор положительных целых чисел.

    Returns:
        Кортеж вершин по возрастанию.
    """
    labels = list(vertices)
    for v in labels:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ComplexError(f"Метка вершины должна быть положительным целым: {v!r}")
    result = tuple(sorted(set(labels)))
    if len(result) != len(labels):
        raise ComplexError(f"Повторяющиеся вершины в симплексе: {labels}")
    return result


def simplex_key(face):
    """Ключ лексикографического порядка на 2^[m]: сначала размер, затем вершины."""
    return (len(face), face)


def format_face(face):
    """Возвращает запись вида (1,2,3)."""
    return "(" + ",".join(str(v) for v in face) + ")"


def face_label(face):
    """Возвращает метку вида 1_2_3 для имён переменных."""
    return "_".join(str(v) for v in face)


def permutation_sign(sequence):
    """Чётность перестановки, приводящей последовательность к возрастанию."""
    items = list(sequence)
    inversions = 0
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class OrientedSimplex:
    """Симплекс со знаком относительно возрастающего порядка вершин."""

    vertices: tuple
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ComplexError(f"Знак ориентации должен быть ±1: {self.sign}")
        if tuple(sorted(self.vertices)) != tuple(self.vertices):
            raise ComplexError(f"Вершины должны идти по возрастанию: {self.vertices}")

    @classmethod
    def from_sequence(cls, sequence, sign=1):
        """Строит ориентированный симплекс по упорядоченному списку вершин."""
        ordered = list(sequence)
        return cls(simplex(ordered), sign * permutation_sign(ordered))

    @property
    def dimension(self):
        return len(self.vertices) - 1

    def negate(self):
        return OrientedSimplex(self.vertices, -self.sign)

    def __str__(self):
        prefix = "" if self.sign > 0 else "-"
        return prefix + format_face(self.vertices)


class SimplicialComplex:
    """Симплициальный комплекс, заданный максимальными гранями.

    Подграни граней считаются гранями комплекса (замыкание вниз
    вычисляется по запросу).
    """

    def __init__(self, facets, vertex_universe=None):
        faces = {simplex(f) for f in facets}
        maximal = [
            f for f in faces
            if not any(len(g) > len(f) and set(f) <= set(g) for g in faces)
        ]
        self.facets = tuple(sorted(maximal, key=simplex_key))
        labels = [v for f in self.facets for v in f]
        if vertex_universe is None:
            vertex_universe = max(labels, default=0)
        self.vertex_universe = vertex_universe

    @property
    def vertices(self):
        return tuple(sorted({v for f in self.facets for v in f}))

    def contains(self, face):
        face_set = set(face)
        return any(face_set <= set(f) for f in self.facets)

    def faces(self, dimension):
        """Все грани заданной размерности в лексикографическом порядке."""
        result = set()
        for facet in self.facets:
            if len(facet) >= dimension + 1:
                result.update(combinations(facet, dimension + 1))
        return sorted(result)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex({[format_face(f) for f in self.facets]})"


def boundary_complex(face):
    """Граница симплекса как комплекс; граница вершины равна {∅}."""
    face = simplex(face)
    if not face:
        raise ComplexError("У пустого симплекса нет границы")
    return SimplicialComplex([tuple(v for v in face if v != w) for w in face])


def link(complex_, face):
    """Линк грани в комплексе.

    Args:
        complex_: SimplicialComplex или TriangulatedManifold.
        face: Грань комплекса.

    Returns:
        SimplicialComplex из граней, дополняющих face внутри граней комплекса.
    """
    if isinstance(complex_, TriangulatedManifold):
        complex_ = complex_.as_complex()
    face = simplex(face)
    if not complex_.contains(face):
        raise FaceNotInComplex(f"Грань {format_face(face)} не лежит в комплексе", [face])
    face_set = set(face)
    pieces = [
        tuple(v for v in facet if v not in face_set)
        for facet in complex_.facets
        if face_set <= set(facet)
    ]
    return SimplicialComplex(pieces, complex_.vertex_universe)


def join(first, second):
    """Джойн двух комплексов с непересекающимися множествами вершин."""
    common = set(first.vertices) & set(second.vertices)
    if common:
        raise VertexOverlap(f"Комплексы имеют общие вершины: {sorted(common)}")
    facets = [a + b for a in first.facets for b in second.facets]
    universe = max(first.vertex_universe, second.vertex_universe)
    return SimplicialComplex(facets, universe)


def _ridge_incidence(facets):
    """Для каждой (n-1)-грани список пар (грань, позиция удалённой вершины)."""
    incidence = {}
    for facet in facets:
        for position in range(len(facet)):
            ridge = facet[:position] + facet[position + 1:]
            incidence.setdefault(ridge, []).append((facet, position))
    return incidence


def _adjacency_graph(incidence, facets):
    graph = nx.Graph()
    graph.add_nodes_from(facets)
    for ridge, items in incidence.items():
        if len(items) == 2:
            graph.add_edge(items[0][0], items[1][0], ridge=ridge)
    return graph


def _check_pseudomanifold(n, facets):
    for facet in facets:
        if len(facet) != n + 1:
            raise NotPure(
                f"Грань {format_face(facet)} имеет размерность {len(facet) - 1}, "
                f"ожидалась {n}",
                [facet],
            )
    incidence = _ridge_incidence(facets)
    for ridge in sorted(incidence):
        items = incidence[ridge]
        if len(items) != 2:
            raise NotClosed(
                f"Грань {format_face(ridge)} лежит в {len(items)} гранях, ожидалось 2",
                [facet for facet, _ in items],
            )
    graph = _adjacency_graph(incidence, facets)
    if facets and not nx.is_connected(graph):
        parts = sorted(nx.connected_components(graph), key=min)
        raise NotConnected(
            f"Граф смежности граней несвязен ({len(parts)} компонент)",
            sorted(parts[1]),
        )
    return incidence, graph


def _check_vertex_links(facets):
    """Для поверхностей линк каждой вершины должен быть одним циклом."""
    links = {}
    for facet in facets:
        for v in facet:
            edge = tuple(w for w in facet if w != v)
            links.setdefault(v, []).append(edge)
    for v in sorted(links):
        cycle = nx.Graph(links[v])
        if not nx.is_connected(cycle) or any(d != 2 for _, d in cycle.degree()):
            raise NotManifold(
                f"Линк вершины {v} не является циклом",
                [f for f in facets if v in f],
            )


def orient(facets):
    """Согласованно ориентирует n-грани замкнутого псевдомногообразия.

    Лексикографически наименьшая грань получает знак +1, знаки остальных
    распространяются обходом графа смежности так, чтобы индуцированные
    ориентации на общей (n-1)-грани были противоположны.

    Args:
        facets: Набор граней одной размерности.

    Returns:
        Список OrientedSimplex в лексикографическом порядке граней.
    """
    facets = sorted({simplex(f) for f in facets})
    if not facets:
        return []
    n = len(facets[0]) - 1
    incidence, graph = _check_pseudomanifold(n, facets)

    signs = {facets[0]: 1}
    for u, v in nx.bfs_edges(graph, facets[0]):
        ridge = graph.edges[u, v]["ridge"]
        pos_u = next(p for f, p in incidence[ridge] if f == u)
        pos_v = next(p for f, p in incidence[ridge] if f == v)
        signs[v] = -signs[u] * (-1) ** (pos_u + pos_v)

    for ridge, items in incidence.items():
        total = sum(signs[f] * (-1) ** p for f, p in items)
        if total != 0:
            raise NotOrientable(
                f"Противоречие ориентаций на грани {format_face(ridge)}",
                [f for f, _ in items],
            )
    return [OrientedSimplex(f, signs[f]) for f in facets]


class TriangulatedManifold:
    """Замкнутое связное ориентированное псевдомногообразие.

    Args:
        dimension: Размерность n.
        signed_facets: Словарь грань -> знак (±1).
        vertex_universe: Число m, грани лежат в 2^[m]; по умолчанию
            максимальная метка вершины.
        check: Проверять ли корректность; результат хода по
            корректному многообразию можно не перепроверять.
    """

    def __init__(self, dimension, signed_facets, vertex_universe=None, check=True):
        signs = {}
        for facet, sign in signed_facets.items():
            if sign not in (1, -1):
                raise ComplexError(f"Знак грани {format_face(facet)} должен быть ±1")
            signs[simplex(facet)] = sign
        self.dimension = dimension
        self._signs = signs
        self.facets = tuple(sorted(signs))
        labels = {v for f in self.facets for v in f}
        self.vertices = tuple(sorted(labels))
        if vertex_universe is None:
            vertex_universe = max(labels, default=0)
        self.vertex_universe = vertex_universe
        self._face_cache = {}
        if check:
            self._validate()

    def _validate(self):
        incidence, _ = _check_pseudomanifold(self.dimension, self.facets)
        for ridge in sorted(incidence):
            total = sum(self._signs[f] * (-1) ** p for f, p in incidence[ridge])
            if total != 0:
                raise OrientationBreak(
                    f"Сумма граней не является циклом на грани {format_face(ridge)}",
                    [f for f, _ in incidence[ridge]],
                )
        if self.dimension == 2:
            _check_vertex_links(self.facets)

    @property
    def n(self):
        return self.dimension

    def sign(self, facet):
        return self._signs[tuple(facet)]

    def signed_facets(self):
        return dict(self._signs)

    def oriented_facets(self):
        return [OrientedSimplex(f, self._signs[f]) for f in self.facets]

    def _faces_index(self, size):
        index = self._face_cache.get(size)
        if index is None:
            index = {}
            for facet in self.facets:
                for face in combinations(facet, size):
                    index.setdefault(face, []).append(facet)
            self._face_cache[size] = index
        return index

    def faces(self, dimension):
        """Все грани размерности dimension по возрастанию."""
        return sorted(self._faces_index(dimension + 1))

    def ridges(self):
        """ℱ(K): все (n-1)-грани по возрастанию."""
        return self.faces(self.dimension - 1)

    def has_face(self, face):
        face = tuple(face)
        if not face:
            return True
        if len(face) > self.dimension + 1:
            return False
        return face in self._faces_index(len(face))

    def facets_containing(self, face):
        face = tuple(face)
        if not face:
            return list(self.facets)
        return list(self._faces_index(len(face)).get(face, []))

    def as_complex(self):
        return SimplicialComplex(self.facets, self.vertex_universe)

    def key(self):
        """Канонический ключ: отсортированный список граней."""
        return " ".join(format_face(f) for f in self.facets)

    def negated(self):
        """То же многообразие с противоположной ориентацией."""
        return TriangulatedManifold(
            self.dimension,
            {f: -s for f, s in self._signs.items()},
            self.vertex_universe,
        )

    def __eq__(self, other):
        if not isinstance(other, TriangulatedManifold):
            return NotImplemented
        return self.dimension == other.dimension and self._signs == other._signs

    def __hash__(self):
        return hash((self.dimension, self.facets))

    def __repr__(self):
        items = ", ".join(str(s) for s in self.oriented_facets())
        return f"TriangulatedManifold(n={self.dimension}, [{items}])"


def from_facets(facet_list, n=None):
    """Строит и проверяет триангулированное многообразие по списку граней.

    Args:
        facet_list: Список наборов вершин.
        n: Размерность; по умолчанию определяется по первой грани.

    Returns:
        TriangulatedManifold с вычисленной ориентацией.
    """
    facets = [simplex(f) for f in facet_list]
    if not facets:
        raise NotPure("Список граней пуст")
    if n is None:
        n = len(facets[0]) - 1
    if n < 2:
        raise NotPure(f"Размерность должна быть не меньше 2, получено {n}")
    for facet in facets:
        if len(facet) != n + 1:
            raise NotPure(
                f"Грань {format_face(facet)} содержит {len(facet)} вершин, "
                f"ожидалось {n + 1}",
                [facet],
            )
    seen = set()
    for facet in facets:
        if facet in seen:
            raise ComplexError(f"Грань {format_face(facet)} указана дважды", [facet])
        seen.add(facet)
    oriented = orient(facets)
    return TriangulatedManifold(n, {s.vertices: s.sign for s in oriented})


@dataclass(frozen=True)
class FaceVector:
    f: tuple
    h: tuple
    g: tuple


def face_vectors(manifold):
    """Вычисляет f-, h- и g-векторы многообразия.

    h определяется тождеством
    h_0 t^{n+1} + ... + h_{n+1} = (t-1)^{n+1} + f_0 (t-1)^n + ... + f_n.
    """
    n = manifold.dimension
    f = tuple(len(manifold.faces(i)) for i in range(n + 1))
    t = sp.Symbol("t")
    counts = (1,) + f
    polynomial = sum(counts[i] * (t - 1) ** (n + 1 - i) for i in range(n + 2))
    h = tuple(int(c) for c in sp.Poly(sp.expand(polynomial), t).all_coeffs())
    g = (h[0],) + tuple(h[i] - h[i - 1] for i in range(1, (n + 1) // 2 + 1))
    return FaceVector(f=f, h=h, g=g)


def f_from_h(h, n):
    """Восстанавливает f-вектор по h-вектору (обратное преобразование)."""
    return tuple(
        sum(comb(n + 1 - i, j - i) * h[i] for i in range(j + 1))
        for j in range(1, n + 2)
    )
