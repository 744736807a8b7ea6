"""Модуль визуализации графа обменов.

Строит описание графа 𝔾_[K] средствами библиотеки graphviz: текст DOT
и изображение PNG для отчёта.
"""

import os
import tempfile

try:
    import graphviz
    GRAPHVIZ_AVAILABLE = True
except ImportError:
    GRAPHVIZ_AVAILABLE = False


# Заливка узлов по глубине обхода
DEPTH_COLORS = ["#BBDEFB", "#E8F5E9", "#FFF9C4", "#F5F5F5"]


def build_dot(graph, styled=False):
    """Строит объект graphviz.Graph для графа обменов.

    Args:
        graph: ExchangeGraph.
        styled: Добавлять ли оформление (цвета по глубине, шрифты).

    Returns:
        graphviz.Graph или None, если библиотека недоступна.
    """
    if not GRAPHVIZ_AVAILABLE:
        return None

    dot = graphviz.Graph(name="exchange_graph")
    if styled:
        dot.attr(fontname="Arial", fontsize="12", layout="neato", overlap="false")
        dot.attr("node", fontname="Arial", fontsize="8", shape="box")
        dot.attr("edge", fontname="Arial", fontsize="7")

    for i, node in enumerate(graph.nodes):
        if styled:
            color = DEPTH_COLORS[min(graph.depths[i], len(DEPTH_COLORS) - 1)]
            dot.node(f"n{i}", node.key(), style="filled", fillcolor=color)
        else:
            dot.node(f"n{i}", node.key())

    for source, target, pair in graph.edges:
        dot.edge(f"n{source}", f"n{target}", label=str(pair))
    return dot


def render_orbit(graph, output_path=None):
    """Рисует граф обменов в PNG.

    Args:
        graph: ExchangeGraph.
        output_path: Путь для сохранения изображения (без расширения).
            Если None, используется временный файл.

    Returns:
        Путь к файлу PNG или None, если graphviz недоступен.
    """
    dot = build_dot(graph, styled=True)
    if dot is None:
        return None
    dot.format = "png"

    if output_path is None:
        tmpdir = tempfile.mkdtemp()
        output_path = os.path.join(tmpdir, "orbit")

    try:
        return dot.render(output_path, cleanup=True)
    except graphviz.backend.execute.ExecutableNotFound:
        return None


def save_dot(dot_source, output_path):
    """Сохраняет текст DOT в файл.

    Returns:
        Путь к сохранённому файлу или None, если текст пуст.
    """
    if not dot_source:
        return None
    dirname = os.path.dirname(os.path.abspath(output_path))
    os.makedirs(dirname, exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        f.write(dot_source)
    return output_path
