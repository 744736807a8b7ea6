"""Модуль генерации отчётов в формате Word (.docx).

Отчёт о классе триангуляции: векторы граней, матрица обмена, граф
обменов и список соотношений обмена.
"""

import os

from docx import Document
from docx.enum.text import WD_ALIGN_PARAGRAPH
from docx.shared import Cm, Pt

from .complex_core import face_vectors, format_face
from .exchange_graph import pair_set
from .exchange_matrix import exchange_matrix
from .profiles import load_profile

# Матрицы большего размера в отчёт таблицей не выводятся
MAX_MATRIX_TABLE = 24

DEFAULT_SECTIONS = ["title", "face_vectors", "exchange_matrix", "orbit", "relations"]


def _heading(doc, profile, text):
    heading = doc.add_heading(text, level=1)
    for run in heading.runs:
        run.font.name = profile.get("font_name", "Times New Roman")


def _paragraph(doc, profile, text, italic=False, center=False, size_delta=0):
    p = doc.add_paragraph()
    if center:
        p.alignment = WD_ALIGN_PARAGRAPH.CENTER
    run = p.add_run(text)
    run.font.name = profile.get("font_name", "Times New Roman")
    run.font.size = Pt(profile.get("font_size", 12) + size_delta)
    run.italic = italic
    return p


def _add_title(doc, profile, manifold, name):
    title = profile.get("title", "Бистеллярная кластерная алгебра")
    p = doc.add_paragraph()
    p.alignment = WD_ALIGN_PARAGRAPH.CENTER
    run = p.add_run(title)
    run.font.name = profile.get("font_name", "Times New Roman")
    run.font.size = Pt(profile.get("font_size", 12) + 4)
    run.bold = True
    if name:
        _paragraph(doc, profile, name, center=True)
    _paragraph(
        doc, profile,
        f"Размерность n = {manifold.dimension}, вершин {len(manifold.vertices)}, "
        f"граней {len(manifold.facets)}.",
    )


def _add_face_vectors_section(doc, profile, manifold, table_num):
    """Таблица f-, h- и g-векторов."""
    font_name = profile.get("font_name", "Times New Roman")
    font_size = profile.get("font_size", 12)
    _heading(doc, profile, "Векторы граней")

    vectors = face_vectors(manifold)
    table = doc.add_table(rows=1, cols=2)
    table.style = "Table Grid"
    table.rows[0].cells[0].text = "Вектор"
    table.rows[0].cells[1].text = "Значение"
    for label, values in (("f", vectors.f), ("h", vectors.h), ("g", vectors.g)):
        row = table.add_row()
        row.cells[0].text = label
        row.cells[1].text = "(" + ", ".join(str(x) for x in values) + ")"
    for row in table.rows:
        for cell in row.cells:
            for paragraph in cell.paragraphs:
                for run in paragraph.runs:
                    run.font.name = font_name
                    run.font.size = Pt(font_size - 2)

    _paragraph(doc, profile, f"Таблица {table_num}. Векторы граней", italic=True,
               center=True, size_delta=-2)


def _add_matrix_section(doc, profile, manifold, table_num):
    """Матрица обмена B(K) таблицей с подписями граней."""
    font_name = profile.get("font_name", "Times New Roman")
    font_size = profile.get("font_size", 12)
    _heading(doc, profile, "Матрица обмена")

    matrix = exchange_matrix(manifold)
    size = len(matrix.index)
    if size > MAX_MATRIX_TABLE:
        _paragraph(doc, profile, f"Матрица размера {size}×{size} не выводится таблицей.")
        return False

    table = doc.add_table(rows=size + 1, cols=size + 1)
    table.style = "Table Grid"
    for i, face in enumerate(matrix.index):
        table.rows[0].cells[i + 1].text = format_face(face)
        table.rows[i + 1].cells[0].text = format_face(face)
    for i, row in enumerate(matrix.rows()):
        for j, value in enumerate(row):
            table.rows[i + 1].cells[j + 1].text = f"+{value}" if value > 0 else str(value)
    for row in table.rows:
        for cell in row.cells:
            for paragraph in cell.paragraphs:
                paragraph.alignment = WD_ALIGN_PARAGRAPH.CENTER
                for run in paragraph.runs:
                    run.font.name = font_name
                    run.font.size = Pt(max(font_size - 5, 6))

    _paragraph(doc, profile, f"Таблица {table_num}. Матрица обмена B(K)", italic=True,
               center=True, size_delta=-2)
    return True


def _add_orbit_section(doc, profile, graph, image_path):
    _heading(doc, profile, "Граф обменов")
    degrees = graph.degrees()
    _paragraph(
        doc, profile,
        f"Класс содержит {len(graph.nodes)} триангуляций, {len(graph.edges)} рёбер, "
        f"{len(pair_set(graph))} направленных бистеллярных пар. "
        f"Степени узлов: от {min(degrees, default=0)} до {max(degrees, default=0)}.",
    )
    if image_path and os.path.exists(image_path):
        doc.add_picture(image_path, width=Cm(15))
        _paragraph(doc, profile, "Рис. 1. Граф обменов класса", italic=True,
                   center=True, size_delta=-2)
    else:
        _paragraph(doc, profile, "Изображение графа не построено (Graphviz не найден).")


def _add_relations_section(doc, profile, algebra):
    _heading(doc, profile, "Соотношения обмена")
    _paragraph(
        doc, profile,
        f"Образующих: {len(algebra.generators)}, обмениваемых: "
        f"{len(algebra.exchangeable)}, соотношений: {len(algebra.relations)}.",
    )
    for number, relation in enumerate(algebra.relations, start=1):
        _paragraph(doc, profile, f"({number}) {relation.render(algebra.semifield)}")


def generate_report(
    manifold,
    graph=None,
    algebra=None,
    orbit_image=None,
    name="",
    profile_name="default",
    output_path=None,
):
    """Генерирует отчёт о классе триангуляции.

    Args:
        manifold: TriangulatedManifold.
        graph: ExchangeGraph класса (раздел графа пропускается, если None).
        algebra: Presentation (раздел соотношений пропускается, если None).
        orbit_image: Путь к изображению графа обменов.
        name: Подпись (например, имя входного файла).
        profile_name: Имя профиля.
        output_path: Путь для сохранения .docx файла.

    Returns:
        Путь к сгенерированному файлу.
    """
    profile = load_profile(profile_name)
    sections = profile.get("sections", DEFAULT_SECTIONS)

    doc = Document()
    margins = profile.get("margins", {})
    for section in doc.sections:
        section.top_margin = Cm(margins.get("top_cm", 2.0))
        section.bottom_margin = Cm(margins.get("bottom_cm", 2.0))
        section.left_margin = Cm(margins.get("left_cm", 2.5))
        section.right_margin = Cm(margins.get("right_cm", 1.5))

    table_num = 1
    if "title" in sections:
        _add_title(doc, profile, manifold, name)
    if "face_vectors" in sections:
        _add_face_vectors_section(doc, profile, manifold, table_num)
        table_num += 1
    if "exchange_matrix" in sections:
        if _add_matrix_section(doc, profile, manifold, table_num):
            table_num += 1
    if "orbit" in sections and graph is not None:
        _add_orbit_section(doc, profile, graph, orbit_image)
    if "relations" in sections and algebra is not None:
        _add_relations_section(doc, profile, algebra)

    if output_path is None:
        output_dir = os.path.join(os.path.dirname(__file__), "..", "reports")
        basename = os.path.splitext(os.path.basename(name))[0] if name else "class"
        output_path = os.path.join(output_dir, f"report_{basename}.docx")

    output_path = os.path.abspath(output_path)
    os.makedirs(os.path.dirname(output_path), exist_ok=True)
    doc.save(output_path)
    return output_path

