"""Модуль графа обменов.

Перечисление класса эквивалентности [K] относительно средних
бистеллярных ходов (n = 2h), множество бистеллярных пар класса и
экспорт графа 𝔾_[K] в DOT и в структурированный документ.
"""

import logging
from collections import deque

import networkx as nx

from .bistellar import BistellarPair, apply_move, find_bistellar_pairs
from .complex_core import TriangulatedManifold, simplex
from .errors import BudgetExceeded, NotMiddleMove, ParseError
from .orbit_diagram import build_dot

logger = logging.getLogger(__name__)

DEFAULT_NODE_CAP = 10000


class ExchangeGraph:
    """Граф обменов: узлы — триангуляции класса, рёбра — ходы.

    Args:
        nodes: Список TriangulatedManifold.
        edges: Список (i, j, BistellarPair), пара допустима в узле i и
            переводит его в узел j; каждое ребро хранится один раз.
        depths: Глубина узлов в обходе в ширину.
    """

    def __init__(self, nodes, edges, depths=None):
        self.nodes = list(nodes)
        self.edges = list(edges)
        self.depths = list(depths) if depths is not None else [0] * len(self.nodes)

    def node_pairs(self, index):
        """Все направленные пары 𝒮_bp^L узла с номером index."""
        pairs = []
        for source, target, pair in self.edges:
            if source == index:
                pairs.append(pair)
            if target == index:
                pairs.append(pair.inverse())
        return sorted(pairs)

    def degrees(self):
        result = [0] * len(self.nodes)
        for source, target, _ in self.edges:
            result[source] += 1
            result[target] += 1
        return result

    def as_networkx(self):
        graph = nx.MultiGraph()
        for i, node in enumerate(self.nodes):
            graph.add_node(i, key=node.key(), depth=self.depths[i])
        for source, target, pair in self.edges:
            graph.add_edge(source, target, pair=pair)
        return graph

    def is_connected(self):
        if not self.nodes:
            return False
        return nx.is_connected(self.as_networkx())

    def __eq__(self, other):
        if not isinstance(other, ExchangeGraph):
            return NotImplemented
        return (
            self.nodes == other.nodes
            and self.edges == other.edges
            and self.depths == other.depths
        )

    def __repr__(self):
        return f"ExchangeGraph(nodes={len(self.nodes)}, edges={len(self.edges)})"


def enumerate_class(manifold, node_cap=DEFAULT_NODE_CAP):
    """Перечисляет класс [K] обходом в ширину по всем средним ходам.

    Порядок узлов: глубина обхода, затем ключ (отсортированный список
    граней); рёбра упорядочены по номерам концов.

    Args:
        manifold: TriangulatedManifold чётной размерности.
        node_cap: Предельное число узлов.

    Returns:
        ExchangeGraph.

    Raises:
        BudgetExceeded: Класс содержит больше node_cap триангуляций.
    """
    n = manifold.dimension
    if n % 2:
        raise NotMiddleMove(f"Средние ходы существуют только при чётном n, получено {n}")
    if node_cap < 1:
        raise BudgetExceeded("Предел числа узлов должен быть не меньше 1", node_cap)
    h = n // 2

    nodes = [manifold]
    depths = [0]
    index = {manifold.facets: 0}
    raw_edges = []
    seen = set()
    queue = deque([0])
    warned = False
    while queue:
        current = queue.popleft()
        for pair in find_bistellar_pairs(nodes[current], h):
            target = apply_move(nodes[current], pair, check=False)
            j = index.get(target.facets)
            if j is None:
                if len(nodes) >= node_cap:
                    raise BudgetExceeded(
                        f"Класс содержит больше {node_cap} триангуляций", node_cap
                    )
                j = len(nodes)
                index[target.facets] = j
                nodes.append(target)
                depths.append(depths[current] + 1)
                queue.append(j)
                if not warned and len(nodes) > node_cap * 0.9:
                    logger.warning("Перечисление близко к пределу: %d узлов", len(nodes))
                    warned = True
            key = frozenset([(current, pair), (j, pair.inverse())])
            if key not in seen:
                seen.add(key)
                raw_edges.append((current, j, pair))
        logger.debug("Узел %d обработан, найдено %d узлов", current, len(nodes))

    order = sorted(range(len(nodes)), key=lambda i: (depths[i], nodes[i].facets))
    renumber = {old: new for new, old in enumerate(order)}
    edges = []
    for source, target, pair in raw_edges:
        source, target = renumber[source], renumber[target]
        if source > target:
            source, target, pair = target, source, pair.inverse()
        edges.append((source, target, pair))
    edges.sort()
    logger.info("Класс перечислен: %d узлов, %d рёбер", len(nodes), len(edges))
    return ExchangeGraph(
        [nodes[i] for i in order], edges, [depths[i] for i in order]
    )


def pair_set(graph):
    """𝒮_bp^[K]: все направленные пары класса, замкнутые относительно (α,β) -> (β,α)."""
    pairs = set()
    for _, _, pair in graph.edges:
        pairs.add(pair)
        pairs.add(pair.inverse())
    return pairs


def to_dot(graph):
    """Текст DOT: метки узлов — ключи граней, метки рёбер — "α|β"."""
    dot = build_dot(graph)
    if dot is None:
        raise RuntimeError("Библиотека graphviz не установлена")
    return dot.source


def to_structured(graph):
    """Структурированный документ (словарь, пригодный для JSON)."""
    return {
        "dimension": graph.nodes[0].dimension if graph.nodes else None,
        "nodes": [
            {
                "index": i,
                "depth": graph.depths[i],
                "vertex_universe": node.vertex_universe,
                "facets": [list(f) for f in node.facets],
                "signs": [node.sign(f) for f in node.facets],
            }
            for i, node in enumerate(graph.nodes)
        ],
        "edges": [
            {
                "source": source,
                "target": target,
                "alpha": list(pair.alpha),
                "beta": list(pair.beta),
            }
            for source, target, pair in graph.edges
        ],
    }


def from_structured(document):
    """Восстанавливает ExchangeGraph из документа to_structured."""
    try:
        dimension = document["dimension"]
        nodes, depths = [], []
        for item in document["nodes"]:
            signs = {simplex(f): s for f, s in zip(item["facets"], item["signs"])}
            nodes.append(
                TriangulatedManifold(dimension, signs, item.get("vertex_universe"))
            )
            depths.append(item.get("depth", 0))
        edges = [
            (
                item["source"],
                item["target"],
                BistellarPair(simplex(item["alpha"]), simplex(item["beta"])),
            )
            for item in document["edges"]
        ]
    except (KeyError, TypeError) as e:
        raise ParseError(f"Некорректный документ графа: {e}") from None
    return ExchangeGraph(nodes, edges, depths)
