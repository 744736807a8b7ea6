"""Модуль PL-инварианта.

Порядок ⪯ между классами по свидетельствующим последовательностям ходов,
цепочки классов по числу вершин для поверхностей, отображения вложения
алгебр классов и проверка перестановочности последовательностей ходов.
"""

import logging
from dataclasses import dataclass, field

from .bistellar import (
    apply_move,
    apply_sequence,
    complexes_equal,
    find_bistellar_pairs,
    is_valid_pair,
    local_face_sets,
    local_frame,
)
from .cluster_algebra import (
    ExchangeRelation,
    Monomial,
    exchange_relations,
    initial_seed,
    presentation,
)
from .errors import BistellarError, WrongDimension
from .exchange_graph import DEFAULT_NODE_CAP, enumerate_class

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrecedesWitness:
    """Последовательность ходов, переводящая source в target."""

    source: object
    target: object
    moves: tuple = ()

    def then(self, other):
        """Конкатенация свидетельств source -> target -> other.target."""
        return PrecedesWitness(self.source, other.target, tuple(self.moves) + tuple(other.moves))


def verify_preceq(witness, h):
    """Проверяет свидетельство [source] ⪯ [target].

    Returns:
        True, если у каждого хода dim α >= h, каждый ход допустим в момент
        применения и результат совпадает с target.
    """
    current = witness.source
    for pair in witness.moves:
        if len(pair.alpha) - 1 < h:
            return False
        if current.dimension + 2 != len(pair.alpha) + len(pair.beta):
            return False
        if not is_valid_pair(current, pair):
            return False
        current = apply_move(current, pair)
    return complexes_equal(current, witness.target)


def _map_monomial(monomial, mapping):
    exponents = {}
    for face, exponent in monomial.powers:
        image = mapping.get(face, face)
        exponents[image] = exponents.get(image, 0) + exponent
    return Monomial.from_dict(exponents, monomial.coefficient)


@dataclass
class EmbeddingMap:
    """Отображение образующих алгебры одного класса в образующие другого.

    Args:
        generator_map: Словарь грань -> грань.
        source: Presentation исходного класса (или None).
        target: Presentation целевого класса (или None).
        domain: Соотношения исходного класса, для которых сохранение
            гарантировано; None означает все соотношения.
    """

    generator_map: dict
    source: object = None
    target: object = None
    domain: tuple = None

    def image(self, face):
        return self.generator_map.get(face, face)

    def is_injective(self):
        return len(set(self.generator_map.values())) == len(self.generator_map)

    def map_relation(self, relation):
        return ExchangeRelation(
            tuple(self.image(f) for f in relation.left),
            _map_monomial(relation.m_plus, self.generator_map),
            _map_monomial(relation.m_minus, self.generator_map),
            _map_monomial(relation.divisor, self.generator_map),
        )

    def missing_generators(self):
        """Образы, которых нет среди образующих целевого класса."""
        if self.target is None:
            return []
        known = set(self.target.generators)
        return sorted(g for g in set(self.generator_map.values()) if g not in known)

    def lost_relations(self):
        """Соотношения исходного класса, образ которых отсутствует в целевом."""
        if self.source is None or self.target is None:
            return []
        keys = self.target.relation_keys()
        return [r for r in self.source.relations if self.map_relation(r).key() not in keys]

    def preserves_relations(self):
        return (
            self.is_injective()
            and not self.missing_generators()
            and not self.lost_relations()
        )

    def lost_domain_relations(self):
        """Соотношения из domain, образ которых отсутствует в целевом классе."""
        if self.domain is None:
            return self.lost_relations()
        if self.target is None:
            return []
        keys = self.target.relation_keys()
        return [r for r in self.domain if self.map_relation(r).key() not in keys]

    def preserves_domain(self):
        return self.is_injective() and not self.lost_domain_relations()

    def compose(self, other):
        """Сначала self, затем other."""
        mapping = {g: other.image(image) for g, image in self.generator_map.items()}
        return EmbeddingMap(mapping, self.source, other.target, self.domain)


def identity_embedding(source, target):
    return EmbeddingMap({g: g for g in source.generators}, source, target)


@dataclass
class ClassChainNode:
    representative: object
    vertex_count: int
    graph: object
    algebra: object


@dataclass
class ClassChain:
    """Цепочка классов K_{m_0}, ..., K_{m_max} и вложения между соседями."""

    levels: list
    embeddings: list = field(default_factory=list)

    def generator_counts(self):
        return [len(level.algebra.generators) for level in self.levels]

    def relation_counts(self):
        return [len(level.algebra.relations) for level in self.levels]

    def composite(self, start, stop):
        """Композиция вложений уровней start -> stop."""
        if start == stop:
            return identity_embedding(self.levels[start].algebra, self.levels[start].algebra)
        result = self.embeddings[start]
        for embedding in self.embeddings[start + 1:stop]:
            result = result.compose(embedding)
        return result

    def direct(self, start, stop):
        return identity_embedding(self.levels[start].algebra, self.levels[stop].algebra)


def single_class_check(chain):
    """Проверяет, что каждый 0-ход из каждой триангуляции уровня m
    попадает в перечисленный класс уровня m+1."""
    for lower, upper in zip(chain.levels, chain.levels[1:]):
        keys = {node.facets for node in upper.graph.nodes}
        label = upper.representative.vertex_universe
        for node in lower.graph.nodes:
            for pair in find_bistellar_pairs(node, 0, fresh_vertex=label):
                if apply_move(node, pair, check=False).facets not in keys:
                    logger.warning(
                        "0-ход %s из уровня %d вне класса уровня %d",
                        pair, lower.vertex_count, upper.vertex_count,
                    )
                    return False
    return True


def build_chain_2d(manifold, m_max, node_cap=DEFAULT_NODE_CAP, semifield=None):
    """Строит цепочку классов поверхности до m_max вершин.

    Представители получаются последовательными 0-ходами в лексикографически
    наименьшую грань; вложения между соседними уровнями тождественны на
    образующих.

    Args:
        manifold: Двумерное TriangulatedManifold.
        m_max: Число вершин последнего уровня.
        node_cap: Предел числа узлов в каждом классе.
        semifield: Полуполе коэффициентов.

    Returns:
        ClassChain.
    """
    if manifold.dimension != 2:
        raise WrongDimension(f"Цепочка строится для n = 2, получено n = {manifold.dimension}")
    m = len(manifold.vertices)
    if m_max < m:
        raise BistellarError(f"m_max = {m_max} меньше числа вершин {m}")

    levels = []
    current = manifold
    while True:
        graph = enumerate_class(current, node_cap)
        algebra = presentation(graph, semifield)
        levels.append(ClassChainNode(current, m, graph, algebra))
        logger.info(
            "Уровень m=%d: %d триангуляций, %d образующих, %d соотношений",
            m, len(graph.nodes), len(algebra.generators), len(algebra.relations),
        )
        if m == m_max:
            break
        pair = find_bistellar_pairs(current, 0)[0]
        current = apply_move(current, pair)
        m += 1

    embeddings = [
        identity_embedding(lower.algebra, upper.algebra)
        for lower, upper in zip(levels, levels[1:])
    ]
    return ClassChain(levels, embeddings)


def untouched_type2_pairs(manifold, pair):
    """Пары типа 2, звезда которых не затронута ходом pair.

    Ни одна удаляемая или добавляемая грань не содержит α пары, и ни одна
    добавляемая грань не содержит β. Тогда звезда α, блок B(K) на ℱ(Λ_α)
    и соотношения пары совпадают в K и bm K.
    """
    if manifold.dimension != 4:
        raise WrongDimension(f"Ожидалось n = 4, получено n = {manifold.dimension}")
    moved = apply_move(manifold, pair)
    removed = set(manifold.facets) - set(moved.facets)
    added = set(moved.facets) - set(manifold.facets)
    result = []
    for candidate in find_bistellar_pairs(manifold, 2):
        alpha, beta = set(candidate.alpha), set(candidate.beta)
        if any(alpha <= set(facet) for facet in removed | added):
            continue
        if any(beta <= set(facet) for facet in added):
            continue
        result.append(candidate)
    return result


def embedding_4d(manifold, pair, node_cap=DEFAULT_NODE_CAP, semifield=None):
    """Вложение алгебры класса [L] в алгебру класса [bm_α L] для n = 4.

    При dim α = 3 удаляемая переменная x_α переходит в лексикографически
    наименьшую из добавленных, остальные образующие тождественны; при
    dim α = 4 все образующие переходят в себя.

    Полное включение соотношений при dim α = 3 не выполняется (см.
    preserves_relations), поэтому domain ограничен соотношениями пар
    самого L, не затронутых ходом; для них сохранение проверяется
    preserves_domain.
    """
    if manifold.dimension != 4:
        raise WrongDimension(f"Вложение определено для n = 4, получено n = {manifold.dimension}")
    dimension = len(pair.alpha) - 1
    if dimension not in (3, 4):
        raise WrongDimension(f"Ожидался ход с dim α ∈ {{3, 4}}, получено {dimension}")
    moved = apply_move(manifold, pair)
    source = presentation(enumerate_class(manifold, node_cap), semifield)
    target = presentation(enumerate_class(moved, node_cap), semifield)
    mapping = {g: g for g in source.generators}
    if dimension == 3:
        added = sorted(set(moved.ridges()) - set(manifold.ridges()))
        mapping[pair.alpha] = added[0]
    seed = initial_seed(manifold, semifield)
    domain = []
    for candidate in untouched_type2_pairs(manifold, pair):
        frame = local_frame(manifold, candidate)
        domain.extend(exchange_relations(seed, frame, local_face_sets(frame)))
    embedding = EmbeddingMap(mapping, source, target, tuple(domain))
    lost = embedding.lost_relations()
    if lost:
        logger.info(
            "Вложение по %s: %d соотношений вне области сохранения", pair, len(lost)
        )
    return embedding


def surviving_type2_pairs(manifold, pair):
    """Делит пары типа 2 комплекса на сохранившиеся и исчезнувшие после хода.

    Returns:
        Кортеж (survived, lost) списков BistellarPair.
    """
    if manifold.dimension != 4:
        raise WrongDimension(f"Ожидалось n = 4, получено n = {manifold.dimension}")
    moved = apply_move(manifold, pair)
    survived, lost = [], []
    for candidate in find_bistellar_pairs(manifold, 2):
        (survived if is_valid_pair(moved, candidate) else lost).append(candidate)
    return survived, lost


def sequences_commute(manifold, first, second):
    """Сравнивает результаты двух последовательностей ходов."""
    return complexes_equal(
        apply_sequence(manifold, first), apply_sequence(manifold, second)
    )


def presentations_equal(first, second):
    """Совпадение образующих и соотношений (без коэффициентов)."""
    return (
        first.generators == second.generators
        and first.relation_keys() == second.relation_keys()
    )
