"""Интерфейс командной строки (CLI) для bistellar_cluster.

Коды возврата: 0 — успех, 1 — ошибка проверки данных, 2 — ошибка
параметров запуска.
"""

import argparse
import json
import logging
import os
import sys

from .bistellar import (
    apply_move,
    find_bistellar_pairs,
    local_face_sets,
    local_frame,
    pair_at,
)
from .cluster_algebra import (
    exchange_relations,
    initial_seed,
    mutate_seed,
    presentation,
)
from .errors import BistellarError, ConfigError, PairNotValid
from .exchange_graph import (
    enumerate_class,
    pair_set,
    to_dot,
    to_structured,
)
from .exchange_matrix import exchange_matrix, exchange_matrix_of_chain
from .facet_io import (
    OUTPUT_FORMATS,
    format_chain,
    format_facets,
    format_info,
    format_matrix,
    format_relations,
    load_chain,
    load_manifold,
    write_facet_file,
)
from .fixtures import fixture_names, fixture_path
from .orbit_diagram import render_orbit, save_dot
from .pl_invariant import build_chain_2d, single_class_check
from .profiles import (
    build_run_config,
    delete_profile,
    list_profiles,
    load_profile,
    save_profile,
)
from .reference_checks import run_reference_checks
from .report_generator import generate_report
from .semifields import SEMIFIELDS, make_semifield

logger = logging.getLogger(__name__)


def _add_input(parser):
    parser.add_argument(
        "input",
        help="Файл граней или имя встроенного набора (например, sphere5)",
    )


def _add_common(parser, semifield=False, fmt=False, cap=False, out=False):
    if semifield:
        parser.add_argument(
            "--semifield", "-s",
            choices=sorted(SEMIFIELDS),
            default=None,
            help="Полуполе коэффициентов",
        )
    if fmt:
        parser.add_argument(
            "--format", "-f",
            choices=OUTPUT_FORMATS,
            default=None,
            help="Формат вывода",
        )
    if cap:
        parser.add_argument(
            "--cap",
            type=int,
            default=None,
            help="Предел числа триангуляций в классе",
        )
    if out:
        parser.add_argument(
            "--out", "-o",
            default=None,
            help="Файл для сохранения результата",
        )
    parser.add_argument(
        "--profile", "-p",
        default="default",
        help="Профиль запуска",
    )


def parse_args(args=None):
    """Разбирает аргументы командной строки.

    Args:
        args: Список аргументов (по умолчанию sys.argv).

    Returns:
        Объект с разобранными аргументами.
    """
    parser = argparse.ArgumentParser(
        prog="bistellar",
        description="Бистеллярные ходы, матрицы обмена и кластерные алгебры триангуляций",
    )
    parser.add_argument(
        "--verbose", "-v",
        action="count",
        default=0,
        help="Подробный журнал (-vv для отладки)",
    )

    subparsers = parser.add_subparsers(dest="command", help="Команда")

    info_parser = subparsers.add_parser("info", help="Векторы граней и число пар")
    _add_input(info_parser)
    _add_common(info_parser)

    bmatrix_parser = subparsers.add_parser("bmatrix", help="Матрица обмена B(K)")
    _add_input(bmatrix_parser)
    bmatrix_parser.add_argument(
        "--chain",
        action="store_true",
        help="Вход — незамкнутый набор ориентированных граней (Λ_α, Λ_β)",
    )
    _add_common(bmatrix_parser, fmt=True, out=True)

    move_parser = subparsers.add_parser("move", help="Применить бистеллярный ход")
    _add_input(move_parser)
    move_parser.add_argument("alpha", help="Грань α через запятую, например 1,2")
    move_parser.add_argument(
        "--fresh-vertex",
        type=int,
        default=None,
        help="Метка новой вершины для хода типа 0",
    )
    move_parser.add_argument(
        "--signed",
        action="store_true",
        help="Выводить знаки ориентации граней и строку # n=",
    )
    _add_common(move_parser, out=True)

    orbit_parser = subparsers.add_parser("orbit", help="Граф обменов класса")
    _add_input(orbit_parser)
    orbit_parser.add_argument(
        "--png",
        default=None,
        help="Нарисовать граф в PNG (путь без расширения)",
    )
    _add_common(orbit_parser, fmt=True, cap=True, out=True)

    relations_parser = subparsers.add_parser("relations", help="Соотношения обмена класса")
    _add_input(relations_parser)
    _add_common(relations_parser, semifield=True, fmt=True, cap=True, out=True)

    mutate_parser = subparsers.add_parser("mutate", help="Мутация затравки Φ_α")
    _add_input(mutate_parser)
    mutate_parser.add_argument("alpha", help="Грань α через запятую")
    _add_common(mutate_parser, semifield=True, fmt=True, out=True)

    chain_parser = subparsers.add_parser("chain", help="Цепочка классов поверхности")
    _add_input(chain_parser)
    chain_parser.add_argument("--m-max", type=int, required=True, help="Число вершин последнего уровня")
    _add_common(chain_parser, semifield=True, cap=True, out=True)

    subparsers.add_parser("verify", help="Проверить контрольные значения")

    report_parser = subparsers.add_parser("report", help="Отчёт о классе в .docx")
    _add_input(report_parser)
    _add_common(report_parser, semifield=True, cap=True, out=True)

    prof_parser = subparsers.add_parser("profiles", help="Управление профилями")
    prof_parser.add_argument(
        "action",
        choices=["list", "show", "create", "delete"],
        help="Действие с профилями",
    )
    prof_parser.add_argument("--name", default="default", help="Имя профиля")
    prof_parser.add_argument("--semifield", choices=sorted(SEMIFIELDS), default=None)
    prof_parser.add_argument("--cap", type=int, default=None)

    return parser.parse_args(args)


def _resolve_input(value):
    """Путь к файлу; имя без файла ищется среди встроенных наборов."""
    if os.path.exists(value) or value not in fixture_names():
        return value
    return fixture_path(value)


def _parse_alpha(text):
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise ConfigError(f"Грань α должна быть списком чисел через запятую: '{text}'") from None


def _emit(text, out=None):
    if out:
        dirname = os.path.dirname(os.path.abspath(out))
        os.makedirs(dirname, exist_ok=True)
        with open(out, "w", encoding="utf-8") as f:
            f.write(text if text.endswith("\n") else text + "\n")
        print(f"Результат сохранён: {out}")
    else:
        print(text)


def cmd_info(args):
    """Обработчик команды info."""
    manifold = load_manifold(_resolve_input(args.input))
    counts = {}
    for h in range(1, manifold.dimension + 1):
        counts[h] = len(find_bistellar_pairs(manifold, h))
    print(format_info(manifold, counts))
    return 0


def cmd_bmatrix(args):
    """Обработчик команды bmatrix."""
    config = build_run_config(args)
    path = _resolve_input(args.input)
    if args.chain:
        matrix = exchange_matrix_of_chain(load_chain(path))
    else:
        matrix = exchange_matrix(load_manifold(path))
    fmt = "structured" if config.output_format == "structured" else "text"
    _emit(format_matrix(matrix, fmt), args.out)
    return 0


def _find_pair(manifold, alpha, fresh_vertex):
    pair = pair_at(manifold, alpha, fresh_vertex)
    if pair is None:
        raise PairNotValid(f"Грань ({','.join(map(str, alpha))}) не задаёт бистеллярный ход")
    return pair


def cmd_move(args):
    """Обработчик команды move."""
    config = build_run_config(args)
    manifold = load_manifold(_resolve_input(args.input))
    pair = _find_pair(manifold, _parse_alpha(args.alpha), config.fresh_vertex)
    moved = apply_move(manifold, pair)
    logger.info("Ход %s: %d -> %d граней", pair, len(manifold.facets), len(moved.facets))
    if args.out:
        print(f"Результат сохранён: {write_facet_file(moved, args.out, args.signed)}")
    else:
        _emit(format_facets(moved, args.signed))
    return 0


def cmd_orbit(args):
    """Обработчик команды orbit."""
    config = build_run_config(args)
    manifold = load_manifold(_resolve_input(args.input))
    graph = enumerate_class(manifold, config.node_cap)
    if config.output_format == "dot":
        source = to_dot(graph)
        if args.out:
            print(f"Результат сохранён: {save_dot(source, args.out)}")
        else:
            _emit(source)
    elif config.output_format == "structured":
        _emit(json.dumps(to_structured(graph), ensure_ascii=False), args.out)
    else:
        degrees = graph.degrees()
        summary = (
            f"{len(graph.nodes)} nodes, {len(graph.edges)} edges, "
            f"{len(pair_set(graph))} directed pairs"
        )
        if degrees:
            summary += f"\nстепени узлов: {min(degrees)}..{max(degrees)}"
        _emit(summary, args.out)
    if args.png:
        image = render_orbit(graph, args.png)
        if image:
            print(f"Изображение графа: {image}")
        else:
            print("Изображение не построено (Graphviz не найден)")
    return 0


def cmd_relations(args):
    """Обработчик команды relations."""
    config = build_run_config(args)
    manifold = load_manifold(_resolve_input(args.input))
    graph = enumerate_class(manifold, config.node_cap)
    semifield = make_semifield(config.semifield)
    algebra = presentation(graph, semifield)
    fmt = "structured" if config.output_format == "structured" else "text"
    text = format_relations(algebra.relations, semifield, fmt)
    if fmt == "text":
        text = (
            f"образующих: {len(algebra.generators)}, обмениваемых: "
            f"{len(algebra.exchangeable)}, соотношений: {len(algebra.relations)}\n" + text
        )
    _emit(text, args.out)
    for known, other in algebra.conflicts:
        print(f"Предупреждение: разные коэффициенты у {known.render()}", file=sys.stderr)
    return 0


def cmd_mutate(args):
    """Обработчик команды mutate."""
    config = build_run_config(args)
    manifold = load_manifold(_resolve_input(args.input))
    pair = _find_pair(manifold, _parse_alpha(args.alpha), None)
    frame = local_frame(manifold, pair)
    sets = local_face_sets(frame)
    semifield = make_semifield(config.semifield)
    seed = initial_seed(manifold, semifield)
    mutated = mutate_seed(seed, frame, sets)
    relations = exchange_relations(seed, frame, sets)

    fmt = "structured" if config.output_format == "structured" else "text"
    if fmt == "structured":
        document = {
            "pair": str(pair),
            "relations": json.loads(format_relations(relations, semifield, "structured")),
            "matrix": json.loads(format_matrix(mutated.matrix, "structured")),
            "coefficients": [
                {
                    "face": list(face),
                    "p_plus": semifield.render(c.p_plus),
                    "p_minus": semifield.render(c.p_minus),
                }
                for face, c in sorted(mutated.coefficients.items())
            ],
        }
        _emit(json.dumps(document, ensure_ascii=False), args.out)
        return 0

    lines = [f"ход {pair}", format_relations(relations, semifield), "", "B(L):",
             format_matrix(mutated.matrix)]
    if config.semifield != "trivial":
        lines.append("")
        lines.append("коэффициенты:")
        for face, c in sorted(mutated.coefficients.items()):
            lines.append(
                f"{mutated.cluster[face]}: p+ = {semifield.render(c.p_plus)}, "
                f"p- = {semifield.render(c.p_minus)}"
            )
    _emit("\n".join(lines), args.out)
    return 0


def cmd_chain(args):
    """Обработчик команды chain."""
    config = build_run_config(args)
    manifold = load_manifold(_resolve_input(args.input))
    chain = build_chain_2d(
        manifold, args.m_max, config.node_cap, make_semifield(config.semifield)
    )
    text = format_chain(chain)
    verdict = "да" if single_class_check(chain) else "нет"
    _emit(f"{text}\nодин класс на каждом уровне: {verdict}", args.out)
    return 0


def cmd_verify(args):
    """Обработчик команды verify."""
    results = run_reference_checks()
    failed = 0
    for name, passed, message in results:
        status = "✓" if passed else "✗"
        print(f"  {status} {name}" + (f": {message}" if message else ""))
        failed += not passed
    print(f"Пройдено проверок: {len(results) - failed} из {len(results)}")
    return 1 if failed else 0


def cmd_report(args):
    """Обработчик команды report."""
    config = build_run_config(args)
    path = _resolve_input(args.input)
    manifold = load_manifold(path)
    graph = None
    algebra = None
    if manifold.dimension % 2 == 0:
        print("Перечисление класса...")
        graph = enumerate_class(manifold, config.node_cap)
        algebra = presentation(graph, make_semifield(config.semifield))
    image = render_orbit(graph) if graph is not None else None
    output_path = generate_report(
        manifold,
        graph=graph,
        algebra=algebra,
        orbit_image=image,
        name=os.path.basename(path),
        profile_name=config.profile,
        output_path=args.out,
    )
    print(f"Отчет сохранен: {output_path}")
    return 0


def cmd_profiles(args):
    """Обработчик команды profiles."""
    if args.action == "list":
        print("Доступные профили:")
        for name in list_profiles():
            profile = load_profile(name)
            display = profile.get("display_name", name)
            print(f"  - {name} ({display})")

    elif args.action == "show":
        profile = load_profile(args.name)
        print(f"Профиль: {args.name}")
        for key, value in profile.items():
            print(f"  {key}: {value}")

    elif args.action == "create":
        profile = load_profile("default")
        profile["name"] = args.name
        profile["display_name"] = args.name
        if args.semifield:
            profile["semifield"] = args.semifield
        if args.cap is not None:
            if args.cap < 1:
                raise ConfigError("Предел числа узлов должен быть не меньше 1")
            profile["node_cap"] = args.cap
        save_profile(args.name, profile)
        print(f"Профиль '{args.name}' создан.")

    elif args.action == "delete":
        if not delete_profile(args.name):
            print(f"Профиль '{args.name}' не найден.", file=sys.stderr)
            return 1
        print(f"Профиль '{args.name}' удалён.")

    return 0


COMMANDS = {
    "info": cmd_info,
    "bmatrix": cmd_bmatrix,
    "move": cmd_move,
    "orbit": cmd_orbit,
    "relations": cmd_relations,
    "mutate": cmd_mutate,
    "chain": cmd_chain,
    "verify": cmd_verify,
    "report": cmd_report,
    "profiles": cmd_profiles,
}


def main(args=None):
    """Главная функция CLI.

    Args:
        args: Список аргументов (для тестирования).

    Returns:
        Код возврата.
    """
    parsed = parse_args(args)
    if parsed.verbose:
        level = logging.DEBUG if parsed.verbose > 1 else logging.INFO
        logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    handler = COMMANDS.get(parsed.command)
    if handler is None:
        parse_args(["--help"])
        return 0

    try:
        return handler(parsed)
    except ConfigError as e:
        print(f"Ошибка: {e}", file=sys.stderr)
        return 2
    except (BistellarError, ValueError) as e:
        print(f"Ошибка: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
