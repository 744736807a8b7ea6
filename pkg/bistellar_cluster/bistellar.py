"""Модуль бистеллярных преобразований.

Поиск бистеллярных пар, локальные системы отсчёта ходов (упорядочение
вершин α∪β, знаки граней F_i и H_i, инволюция σ), применение ходов и
последовательностей ходов.
"""

from dataclasses import dataclass
from itertools import combinations

from .complex_core import (
    OrientedSimplex,
    TriangulatedManifold,
    format_face,
    simplex,
)
from .errors import (
    MoveError,
    NotMiddleMove,
    OrientationBreak,
    PairNotValid,
    PairNotValidAtStep,
)


@dataclass(frozen=True, order=True)
class BistellarPair:
    """Бистеллярная пара (α, β): Link(α) = ∂β и β не лежит в комплексе."""

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        if set(self.alpha) & set(self.beta):
            raise MoveError(
                f"α и β пересекаются: {format_face(self.alpha)}, {format_face(self.beta)}"
            )

    @classmethod
    def of(cls, alpha, beta):
        return cls(simplex(alpha), simplex(beta))

    @property
    def move_type(self):
        return len(self.beta) - 1

    def inverse(self):
        return BistellarPair(self.beta, self.alpha)

    def __str__(self):
        return f"{format_face(self.alpha)}|{format_face(self.beta)}"


def is_valid_pair(manifold, pair):
    """Проверяет, что пара задаёт бистеллярный ход в многообразии."""
    n = manifold.dimension
    h = pair.move_type
    if len(pair.alpha) + len(pair.beta) != n + 2:
        return False
    if h == 0:
        return (
            pair.alpha in manifold.facets
            and pair.beta[0] not in manifold.vertices
        )
    star = manifold.facets_containing(pair.alpha)
    if len(star) != h + 1:
        return False
    rest = {v for facet in star for v in facet} - set(pair.alpha)
    if rest != set(pair.beta):
        return False
    return not manifold.has_face(pair.beta)


def find_bistellar_pairs(manifold, h, fresh_vertex=None):
    """Находит все бистеллярные пары типа h.

    Args:
        manifold: TriangulatedManifold.
        h: Тип хода, 0 <= h <= n.
        fresh_vertex: Метка новой вершины для ходов типа 0; по умолчанию
            vertex_universe + 1.

    Returns:
        Список BistellarPair, упорядоченный по α.
    """
    n = manifold.dimension
    if not 0 <= h <= n:
        raise MoveError(f"Тип хода должен лежать в диапазоне 0..{n}, получено {h}")

    if h == 0:
        label = fresh_vertex if fresh_vertex is not None else manifold.vertex_universe + 1
        if label in manifold.vertices:
            raise PairNotValid(f"Вершина {label} уже есть в комплексе")
        return [BistellarPair(facet, (label,)) for facet in manifold.facets]

    pairs = []
    for alpha in manifold.faces(n - h):
        star = manifold.facets_containing(alpha)
        if len(star) != h + 1:
            continue
        beta = tuple(sorted({v for facet in star for v in facet} - set(alpha)))
        if len(beta) != h + 1 or manifold.has_face(beta):
            continue
        pairs.append(BistellarPair(alpha, beta))
    return pairs


def pair_at(manifold, alpha, fresh_vertex=None):
    """Возвращает бистеллярную пару с заданной гранью α или None."""
    alpha = simplex(alpha)
    h = manifold.dimension - len(alpha) + 1
    if not 0 <= h <= manifold.dimension:
        return None
    for pair in find_bistellar_pairs(manifold, h, fresh_vertex):
        if pair.alpha == alpha:
            return pair
    return None


@dataclass(frozen=True)
class MoveLocalFrame:
    """Локальная система отсчёта хода.

    ordering = (v_0, ..., v_{n+1}): сначала вершины α, затем вершины β.
    orientation — общий множитель ε при знаках граней F_i и H_i:
    F_i = ε (-1)^i (v_0..v̂_{n+1-i}..v_{n+1}),
    H_i = ε (-1)^{i+n} (v_0..v̂_i..v_{n+1}).
    Для чётного n и ε = 1 это в точности формулы для F_i и H_i.
    """

    alpha: tuple
    beta: tuple
    ordering: tuple
    dimension: int
    orientation: int = 1

    @property
    def move_type(self):
        return len(self.beta) - 1

    @property
    def pair(self):
        return BistellarPair(self.alpha, self.beta)

    def _drop(self, position):
        return self.ordering[:position] + self.ordering[position + 1:]

    @property
    def old_facets(self):
        """F_0, ..., F_h: грани α*∂β со знаками."""
        n = self.dimension
        return [
            OrientedSimplex.from_sequence(
                self._drop(n + 1 - i), self.orientation * (-1) ** i
            )
            for i in range(self.move_type + 1)
        ]

    @property
    def new_facets(self):
        """H_0, ..., H_{n-h}: грани ∂α*β со знаками."""
        n = self.dimension
        return [
            OrientedSimplex.from_sequence(
                self._drop(i), self.orientation * (-1) ** (i + n)
            )
            for i in range(len(self.alpha))
        ]

    @property
    def sigma(self):
        """Инволюция σ(v_i) = v_{n+1-i} в виде словаря."""
        last = len(self.ordering) - 1
        return {v: self.ordering[last - i] for i, v in enumerate(self.ordering)}

    def sigma_face(self, face):
        table = self.sigma
        return tuple(sorted(table.get(v, v) for v in face))


def _compatible_ordering(manifold, pair):
    ordering = list(pair.alpha) + list(pair.beta)
    n = manifold.dimension
    head = OrientedSimplex.from_sequence(ordering[: n + 1])
    if head.sign != manifold.sign(head.vertices):
        if len(pair.beta) >= 2:
            ordering[-1], ordering[-2] = ordering[-2], ordering[-1]
        else:
            ordering[0], ordering[1] = ordering[1], ordering[0]
    return tuple(ordering)


def _check_frame(manifold, frame):
    for facet in frame.old_facets:
        if manifold.sign(facet.vertices) != facet.sign:
            raise OrientationBreak(
                f"Знак грани {format_face(facet.vertices)} не согласован с ориентацией",
                [facet.vertices],
            )


def local_frame(manifold, pair):
    """Строит систему отсчёта для хода типа h >= 1.

    Упорядочение — возрастающие вершины α, затем возрастающие вершины β;
    если (v_0, ..., v_n) не согласована с ориентацией комплекса, две
    последние вершины β переставляются.
    """
    if not is_valid_pair(manifold, pair):
        raise PairNotValid(f"Пара {pair} не является бистеллярной парой комплекса")
    if pair.move_type < 1:
        raise PairNotValid("Система отсчёта определена только для ходов типа h >= 1")
    frame = MoveLocalFrame(
        pair.alpha, pair.beta, _compatible_ordering(manifold, pair), manifold.dimension
    )
    _check_frame(manifold, frame)
    return frame


def reverse_frame(frame, manifold=None):
    """Система отсчёта обратного хода (β, α) с той же инволюцией σ.

    Упорядочение — блок β, затем блок α исходной системы; множитель ε
    подбирается так, чтобы F'_0 совпала с соответствующей гранью H.

    Args:
        frame: Система отсчёта прямого хода.
        manifold: Комплекс после хода; если задан, знаки проверяются.
    """
    split = len(frame.alpha)
    ordering = frame.ordering[split:] + frame.ordering[:split]
    target = frame.new_facets[-1]
    head = OrientedSimplex.from_sequence(ordering[: frame.dimension + 1])
    if head.vertices != target.vertices:
        raise MoveError("Несогласованная система отсчёта обратного хода")
    reverse = MoveLocalFrame(
        frame.beta, frame.alpha, ordering, frame.dimension, target.sign * head.sign
    )
    if manifold is not None:
        _check_frame(manifold, reverse)
    return reverse


@dataclass(frozen=True)
class LocalFaceSets:
    """Разбиение (n-1)-граней Λ_α и Λ_β для среднего хода."""

    lambda_alpha_faces: tuple
    lambda_beta_faces: tuple
    d_alpha: tuple
    d_beta: tuple

    @property
    def common(self):
        """ℱ(Λ_α)∖D_α = ℱ(Λ_β)∖D_β."""
        excluded = set(self.d_alpha)
        return tuple(f for f in self.lambda_alpha_faces if f not in excluded)


def _ridges_of(facets):
    result = set()
    for facet in facets:
        vertices = facet.vertices
        for i in range(len(vertices)):
            result.add(vertices[:i] + vertices[i + 1:])
    return tuple(sorted(result))


def local_face_sets(frame):
    """Вычисляет D_α, D_β и (n-1)-грани Λ_α, Λ_β для среднего хода (n = 2h)."""
    if frame.dimension != 2 * frame.move_type:
        raise NotMiddleMove(
            f"Ход типа {frame.move_type} на {frame.dimension}-многообразии не средний"
        )
    union = set(frame.alpha) | set(frame.beta)
    d_alpha = sorted(simplex(union - set(pair)) for pair in combinations(frame.beta, 2))
    d_beta = sorted(simplex(union - set(pair)) for pair in combinations(frame.alpha, 2))
    return LocalFaceSets(
        lambda_alpha_faces=_ridges_of(frame.old_facets),
        lambda_beta_faces=_ridges_of(frame.new_facets),
        d_alpha=tuple(d_alpha),
        d_beta=tuple(d_beta),
    )


def apply_move(manifold, pair, check=True):
    """Применяет бистеллярный ход bm_α K = (K∖(α*∂β)) ∪ (∂α*β).

    Неизменённые грани сохраняют знаки, новые получают знаки H_i.
    При check=False результат не перепроверяется (обход больших классов).

    Returns:
        Новый TriangulatedManifold.
    """
    if not is_valid_pair(manifold, pair):
        raise PairNotValid(f"Пара {pair} не является бистеллярной парой комплекса")
    frame = MoveLocalFrame(
        pair.alpha, pair.beta, _compatible_ordering(manifold, pair), manifold.dimension
    )
    _check_frame(manifold, frame)
    signs = manifold.signed_facets()
    for facet in frame.old_facets:
        del signs[facet.vertices]
    for facet in frame.new_facets:
        signs[facet.vertices] = facet.sign
    universe = max(manifold.vertex_universe, max(pair.beta))
    return TriangulatedManifold(manifold.dimension, signs, universe, check=check)


def apply_sequence(manifold, moves, trace=None):
    """Применяет последовательность ходов слева направо.

    Args:
        manifold: Исходный комплекс.
        moves: Список BistellarPair.
        trace: Необязательный список, в который добавляются промежуточные
            комплексы.
    """
    current = manifold
    for step, pair in enumerate(moves):
        if not is_valid_pair(current, pair):
            raise PairNotValidAtStep(
                f"Шаг {step}: пара {pair} недопустима в текущем комплексе", step
            )
        current = apply_move(current, pair)
        if trace is not None:
            trace.append(current)
    return current


def complexes_equal(first, second):
    """Помеченное равенство: одинаковые наборы граней без учёта знаков."""
    return first.dimension == second.dimension and first.facets == second.facets

