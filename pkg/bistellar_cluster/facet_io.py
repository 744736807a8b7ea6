"""Модуль файлов граней и текстовых форматов вывода.

Формат файла граней: по одной грани в строке, вершины — положительные
целые числа через пробел или запятую. Перед вершинами может стоять знак
ориентации "+" или "-". Пустые строки и текст после "#" игнорируются.

    # двумерная сфера на пяти вершинах
    + 1 2 4
    - 1 2 5
"""

import json
import os

from .complex_core import (
    OrientedSimplex,
    TriangulatedManifold,
    face_vectors,
    format_face,
    from_facets,
    simplex,
)
from .errors import BistellarError, ComplexError, ParseError

# Поддерживаемые форматы вывода
OUTPUT_FORMATS = ("text", "structured", "dot")


def parse_facets(text):
    """Разбирает текст файла граней.

    Args:
        text: Содержимое файла.

    Returns:
        Список кортежей (номер строки, вершины, знак или None).
    """
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].replace(",", " ").strip()
        if not line:
            continue
        tokens = line.split()
        sign = None
        if tokens[0] in ("+", "-"):
            sign = 1 if tokens[0] == "+" else -1
            tokens = tokens[1:]
        elif tokens[0][0] in "+-" and len(tokens[0]) > 1 and not tokens[0][1:].isdigit():
            raise ParseError(f"Некорректный знак '{tokens[0]}'", number)
        if not tokens:
            raise ParseError("Строка содержит знак без вершин", number)
        try:
            vertices = [int(t) for t in tokens]
        except ValueError:
            raise ParseError(f"Вершины должны быть целыми числами: '{raw.strip()}'", number) from None
        try:
            face = simplex(vertices)
        except BistellarError as e:
            raise ParseError(str(e), number) from None
        entries.append((number, face, sign))
    if not entries:
        raise ParseError("Файл не содержит граней")
    return entries


def read_facet_file(path):
    """Читает файл граней.

    Returns:
        Список кортежей (номер строки, вершины, знак или None).
    """
    if not os.path.exists(path):
        raise ParseError(f"Файл не найден: {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_facets(f.read())


def _signs_of(entries):
    signed = [sign is not None for _, _, sign in entries]
    if any(signed) and not all(signed):
        first = next(number for (number, _, sign) in entries if sign is None)
        raise ParseError("Знаки ориентации указаны не у всех граней", first)
    return all(signed)


def _with_line(error, entries):
    """Дополняет ошибку проверки номером строки первой затронутой грани."""
    lines = {face: number for number, face, _ in entries}
    for face in getattr(error, "facets", []):
        if face in lines:
            return type(error)(f"строка {lines[face]}: {error}", error.facets)
    return error


def manifold_from_entries(entries, n=None):
    try:
        if _signs_of(entries):
            signs = {}
            for number, face, sign in entries:
                if face in signs:
                    raise ParseError(f"Грань {format_face(face)} указана дважды", number)
                signs[face] = sign
            dimension = n if n is not None else len(entries[0][1]) - 1
            return TriangulatedManifold(dimension, signs)
        return from_facets([face for _, face, _ in entries], n)
    except ComplexError as e:
        raise _with_line(e, entries) from None


def load_manifold(path):
    """Читает и проверяет замкнутое ориентированное многообразие.

    Если знаки не указаны, ориентация вычисляется; если указаны,
    проверяется, что сумма граней является циклом.
    """
    return manifold_from_entries(read_facet_file(path))


def load_chain(path):
    """Читает набор ориентированных граней без проверки замкнутости.

    Грани без знака считаются положительно ориентированными.
    """
    return [
        OrientedSimplex(face, sign if sign is not None else 1)
        for _, face, sign in read_facet_file(path)
    ]


def format_facets(manifold, signed=False):
    """Текст файла граней для многообразия.

    По умолчанию — только вершины граней; при signed добавляются строка
    "# n=" и знаки ориентации "+"/"-".
    """
    lines = [f"# n={manifold.dimension}"] if signed else []
    for facet in manifold.facets:
        vertices = " ".join(str(v) for v in facet)
        if signed:
            mark = "+" if manifold.sign(facet) > 0 else "-"
            lines.append(f"{mark} {vertices}")
        else:
            lines.append(vertices)
    return "\n".join(lines) + "\n"


def write_facet_file(manifold, path, signed=True):
    """Сохраняет многообразие в файл граней.

    Returns:
        Путь к сохранённому файлу.
    """
    dirname = os.path.dirname(os.path.abspath(path))
    os.makedirs(dirname, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_facets(manifold, signed))
    return path


def _signed(value):
    if value > 0:
        return f"+{value}"
    return str(value)


def format_matrix(matrix, fmt="text"):
    """Выводит матрицу обмена.

    text: строка меток граней, затем строки элементов вида "+1", "-1", "0";
    structured: JSON с индексом граней и целыми элементами.
    """
    if fmt == "structured":
        document = {"index": [list(f) for f in matrix.index], "rows": matrix.rows()}
        return json.dumps(document, ensure_ascii=False)
    lines = [" ".join(format_face(f) for f in matrix.index)]
    for row in matrix.rows():
        lines.append(" ".join(_signed(x) for x in row))
    return "\n".join(lines)


def format_info(manifold, pair_counts):
    """Сводка о многообразии для команды info.

    Args:
        manifold: TriangulatedManifold.
        pair_counts: Словарь тип хода -> число пар.
    """
    vectors = face_vectors(manifold)
    lines = [
        f"n={manifold.dimension}, f=({','.join(str(x) for x in vectors.f)}), orientable",
        f"h=({','.join(str(x) for x in vectors.h)})",
        f"g=({','.join(str(x) for x in vectors.g)})",
    ]
    for h in sorted(pair_counts):
        lines.append(f"type-{h} pairs: {pair_counts[h]}")
    return "\n".join(lines)


def _monomial_document(monomial, semifield):
    return {
        "exponents": [[list(face), exponent] for face, exponent in monomial.powers],
        "coefficient": semifield.render(monomial.coefficient),
    }


def format_relations(relations, semifield, fmt="text"):
    """Выводит соотношения обмена в порядке левых произведений."""
    if fmt == "structured":
        document = [
            {
                "left": [list(f) for f in relation.left],
                "m_plus": _monomial_document(relation.m_plus, semifield),
                "m_minus": _monomial_document(relation.m_minus, semifield),
            }
            for relation in relations
        ]
        return json.dumps(document, ensure_ascii=False)
    return "\n".join(relation.render(semifield) for relation in relations)


def format_chain(chain):
    """Отчёт о цепочке классов: уровень, образующие, соотношения, вложение."""
    lines = []
    for i, level in enumerate(chain.levels):
        text = (
            f"m={level.vertex_count}: триангуляций {len(level.graph.nodes)}, "
            f"образующих {len(level.algebra.generators)}, "
            f"соотношений {len(level.algebra.relations)}"
        )
        if i > 0:
            embedding = chain.embeddings[i - 1]
            status = "сохраняет соотношения" if embedding.preserves_relations() else "теряет соотношения"
            text += f", вложение из m={chain.levels[i - 1].vertex_count}: тождественное, {status}"
        lines.append(text)
    return "\n".join(lines)
