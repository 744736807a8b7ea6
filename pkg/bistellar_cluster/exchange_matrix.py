"""Модуль матриц обмена.

Обобщённые граничные операторы ∂^(k), порядок пар граней внутри
ориентированного симплекса, матрица обмена B(K) и её мутация μ_α.
Матрицы хранятся плотно в numpy с целыми элементами, строки и столбцы
индексируются (n-1)-гранями в лексикографическом порядке.
"""

from enum import Enum
from itertools import combinations

import numpy as np

from .complex_core import format_face, simplex, simplex_key
from .errors import (
    DimensionMismatch,
    IndexMismatch,
    KOutOfRange,
    NotFaces,
    NotMiddleMove,
)


class SignedChain:
    """Цепь: словарь симплекс -> ненулевой целый коэффициент."""

    def __init__(self, terms=None):
        self.terms = {}
        for face, coefficient in (terms or {}).items():
            if coefficient:
                self.terms[tuple(face)] = coefficient

    def coefficient(self, face):
        return self.terms.get(tuple(face), 0)

    def __add__(self, other):
        terms = dict(self.terms)
        for face, coefficient in other.terms.items():
            terms[face] = terms.get(face, 0) + coefficient
        return SignedChain(terms)

    def __neg__(self):
        return SignedChain({f: -c for f, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, SignedChain):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for face in sorted(self.terms, key=simplex_key, reverse=True):
            coefficient = self.terms[face]
            sign = "+" if coefficient > 0 else "-"
            magnitude = "" if abs(coefficient) == 1 else str(abs(coefficient))
            parts.append(f"{sign} {magnitude}{format_face(face)}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


def boundary_coefficient(oriented, face):
    """Коэффициент грани face в ∂^(k) oriented, где k = |oriented| - |face|.

    Знак равен sign * (-1)^{сумма позиций удалённых вершин}.
    """
    face_set = set(face)
    removed = sum(i for i, v in enumerate(oriented.vertices) if v not in face_set)
    return oriented.sign * (-1) ** removed


def boundary_k(oriented, k):
    """Обобщённый граничный оператор ∂^(k).

    Args:
        oriented: OrientedSimplex.
        k: Число удаляемых вершин, 1 <= k <= dim + 1.

    Returns:
        SignedChain.
    """
    if not 1 <= k <= oriented.dimension + 1:
        raise KOutOfRange(
            f"k должно лежать в диапазоне 1..{oriented.dimension + 1}, получено {k}"
        )
    vertices = oriented.vertices
    terms = {}
    for positions in combinations(range(len(vertices)), k):
        face = tuple(v for i, v in enumerate(vertices) if i not in positions)
        terms[face] = oriented.sign * (-1) ** sum(positions)
    return SignedChain(terms)


class PairOrder(Enum):
    FIRST_PRECEDES = "f≺g"
    SECOND_PRECEDES = "g≺f"
    INCOMPARABLE = "incomparable"


def pair_entry(oriented, f, g):
    """Элемент b^s_{fg} локальной матрицы для граней f, g симплекса s.

    Коэффициент c_{fg} читается для пары с f < g и антисимметризуется.
    """
    common = set(f) & set(g)
    if not common or f == g:
        return 0
    d = len(f) - 1
    k = len(common) - 1
    order = oriented.dimension - 2 * (d - k) + 1
    face = simplex(set(f) ^ set(g))
    if len(face) != oriented.dimension + 1 - order:
        raise DimensionMismatch("Несогласованные размерности граней")
    if f < g:
        return boundary_coefficient(oriented, face)
    return -boundary_coefficient(oriented, face)


def pair_order(oriented, f, g):
    """Порядок пары граней f, g ориентированного симплекса.

    Returns:
        PairOrder: b_{fg} = +1 означает g≺f, b_{fg} = -1 означает f≺g.
    """
    f, g = tuple(f), tuple(g)
    vertices = set(oriented.vertices)
    if not set(f) <= vertices or not set(g) <= vertices:
        raise NotFaces(
            f"{format_face(f)} и {format_face(g)} должны быть гранями "
            f"{format_face(oriented.vertices)}"
        )
    if f == g:
        raise NotFaces("Грани пары должны различаться")
    if len(f) != len(g):
        raise DimensionMismatch("Грани пары должны иметь одну размерность")
    if len(f) - 1 >= oriented.dimension:
        raise DimensionMismatch("Размерность граней должна быть меньше размерности симплекса")
    entry = pair_entry(oriented, f, g)
    if entry == 0:
        return PairOrder.INCOMPARABLE
    return PairOrder.SECOND_PRECEDES if entry > 0 else PairOrder.FIRST_PRECEDES


class ExchangeMatrix:
    """Кососимметричная целочисленная матрица, индексированная гранями."""

    def __init__(self, index, entries):
        self.index = tuple(tuple(f) for f in index)
        self.entries = np.asarray(entries, dtype=np.int64).reshape(
            len(self.index), len(self.index)
        )
        self._positions = {f: i for i, f in enumerate(self.index)}

    @classmethod
    def zeros(cls, index):
        return cls(index, np.zeros((len(index), len(index)), dtype=np.int64))

    def __contains__(self, face):
        return tuple(face) in self._positions

    def position(self, face):
        return self._positions[tuple(face)]

    def entry(self, f, g):
        """b_{fg}; 0, если одной из граней нет в индексе."""
        i = self._positions.get(tuple(f))
        j = self._positions.get(tuple(g))
        if i is None or j is None:
            return 0
        return int(self.entries[i, j])

    def is_skew_symmetric(self):
        return bool(np.array_equal(self.entries, -self.entries.T))

    def reindexed(self, order):
        """Та же матрица в заданном порядке граней."""
        order = [tuple(f) for f in order]
        if sorted(order) != sorted(self.index):
            raise IndexMismatch("Новый порядок должен содержать те же грани")
        positions = [self._positions[f] for f in order]
        return ExchangeMatrix(order, self.entries[np.ix_(positions, positions)])

    def rows(self):
        return [[int(x) for x in row] for row in self.entries]

    def __neg__(self):
        return ExchangeMatrix(self.index, -self.entries)

    def __eq__(self, other):
        if not isinstance(other, ExchangeMatrix):
            return NotImplemented
        return self.index == other.index and bool(np.array_equal(self.entries, other.entries))

    def __repr__(self):
        return f"ExchangeMatrix({len(self.index)}x{len(self.index)})"


def _ridges(oriented):
    vertices = oriented.vertices
    return [vertices[:i] + vertices[i + 1:] for i in range(len(vertices))]


def _accumulate(entries, positions, oriented):
    ridges = [r for r in _ridges(oriented) if r in positions]
    for f, g in combinations(ridges, 2):
        value = pair_entry(oriented, f, g)
        entries[positions[f], positions[g]] += value
        entries[positions[g], positions[f]] -= value


def local_matrix(oriented, index):
    """Матрица B^s: ±1 для пар (n-1)-граней симплекса s, 0 в остальных местах."""
    matrix = ExchangeMatrix.zeros(index)
    _accumulate(matrix.entries, matrix._positions, oriented)
    return matrix


def exchange_matrix_of_chain(oriented_facets, index=None):
    """Сумма локальных матриц по набору ориентированных граней.

    Подходит и для незамкнутых комплексов, например Λ_α и Λ_β.
    """
    oriented_facets = list(oriented_facets)
    if index is None:
        index = sorted({r for s in oriented_facets for r in _ridges(s)})
    matrix = ExchangeMatrix.zeros(index)
    for oriented in oriented_facets:
        _accumulate(matrix.entries, matrix._positions, oriented)
    return matrix


def exchange_matrix(manifold):
    """Матрица обмена B(K) = Σ B^α(K) по всем ориентированным n-граням."""
    return exchange_matrix_of_chain(manifold.oriented_facets(), manifold.ridges())


def mutate(matrix, frame, sets):
    """Мутация μ_α матрицы обмена.

    b̄_{fg} = -b_{σ(f)σ(g)}, если f, g ∈ ℱ(Λ_β), иначе b_{fg}
    (0, если грани нет в исходном индексе).

    Args:
        matrix: B(K).
        frame: MoveLocalFrame среднего хода.
        sets: LocalFaceSets того же хода.

    Returns:
        ExchangeMatrix, индексированная ℱ(L).
    """
    if frame.dimension != 2 * frame.move_type:
        raise NotMiddleMove("Мутация определена только для средних ходов")
    missing = [f for f in sets.lambda_alpha_faces if f not in matrix]
    if missing:
        raise IndexMismatch(
            f"Грани {', '.join(format_face(f) for f in missing)} отсутствуют в индексе"
        )
    present = [f for f in sets.d_beta if f in matrix]
    if present:
        raise IndexMismatch(
            f"Грани {', '.join(format_face(f) for f in present)} уже есть в индексе"
        )

    new_index = sorted((set(matrix.index) - set(sets.d_alpha)) | set(sets.d_beta))
    old_positions = [matrix._positions.get(f, -1) for f in new_index]
    keep = np.array([p >= 0 for p in old_positions], dtype=np.int64)
    take = [max(p, 0) for p in old_positions]
    entries = matrix.entries[np.ix_(take, take)] * np.outer(keep, keep)

    new_positions = {f: i for i, f in enumerate(new_index)}
    block = [new_positions[f] for f in sets.lambda_beta_faces]
    images = [matrix.position(frame.sigma_face(f)) for f in sets.lambda_beta_faces]
    entries[np.ix_(block, block)] = -matrix.entries[np.ix_(images, images)]
    return ExchangeMatrix(new_index, entries)
