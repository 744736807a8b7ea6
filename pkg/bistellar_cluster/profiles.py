"""Модуль профилей запуска.

Хранит и загружает наборы параметров: полуполе коэффициентов, предел
числа узлов, формат вывода и оформление отчёта.
"""

import json
import os
from dataclasses import dataclass

from .errors import ConfigError
from .exchange_graph import DEFAULT_NODE_CAP
from .facet_io import OUTPUT_FORMATS
from .semifields import SEMIFIELDS

# Директория для хранения профилей
PROFILES_DIR = os.path.join(os.path.dirname(__file__), "..", "profiles")

# Переменная окружения с пределом числа узлов по умолчанию
NODE_CAP_ENV = "BISTELLAR_NODE_CAP"

# Профиль по умолчанию
DEFAULT_PROFILE = {
    "name": "default",
    "display_name": "Стандартный",
    "semifield": "trivial",
    "node_cap": DEFAULT_NODE_CAP,
    "output_format": "text",
    "fresh_vertex": None,
    "font_name": "Times New Roman",
    "font_size": 12,
    "margins": {
        "top_cm": 2.0,
        "bottom_cm": 2.0,
        "left_cm": 2.5,
        "right_cm": 1.5,
    },
    "sections": [
        "title",
        "face_vectors",
        "exchange_matrix",
        "orbit",
        "relations",
    ],
    "title": "Бистеллярная кластерная алгебра",
}


def get_profiles_dir():
    """Возвращает абсолютный путь к директории профилей."""
    profiles_dir = os.path.abspath(PROFILES_DIR)
    os.makedirs(profiles_dir, exist_ok=True)
    return profiles_dir


def list_profiles():
    """Возвращает список имён доступных профилей."""
    profiles = ["default"]
    for f in sorted(os.listdir(get_profiles_dir())):
        if f.endswith(".json"):
            name = os.path.splitext(f)[0]
            if name not in profiles:
                profiles.append(name)
    return profiles


def load_profile(name="default"):
    """Загружает профиль.

    Args:
        name: Имя профиля. 'default' для стандартного.

    Returns:
        Словарь с настройками; недостающие поля берутся из профиля по
        умолчанию.
    """
    merged = dict(DEFAULT_PROFILE)
    if name == "default":
        return merged

    filepath = os.path.join(get_profiles_dir(), f"{name}.json")
    if not os.path.exists(filepath):
        return merged

    with open(filepath, "r", encoding="utf-8") as f:
        try:
            profile = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Профиль '{name}' повреждён: {e}") from None
    merged.update(profile)
    return merged


def save_profile(name, profile_data):
    """Сохраняет профиль в JSON."""
    filepath = os.path.join(get_profiles_dir(), f"{name}.json")
    with open(filepath, "w", encoding="utf-8") as f:
        json.dump(profile_data, f, ensure_ascii=False, indent=2)
    return filepath


def delete_profile(name):
    """Удаляет профиль.

    Returns:
        True если профиль был удалён, False если не найден.
    """
    if name == "default":
        return False
    filepath = os.path.join(get_profiles_dir(), f"{name}.json")
    if os.path.exists(filepath):
        os.remove(filepath)
        return True
    return False


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str = None
    semifield: str = "trivial"
    node_cap: int = DEFAULT_NODE_CAP
    output_format: str = "text"
    fresh_vertex: int = None
    profile: str = "default"

    def __post_init__(self):
        if self.node_cap < 1:
            raise ConfigError(f"Предел числа узлов должен быть не меньше 1, получено {self.node_cap}")
        if self.semifield not in SEMIFIELDS:
            raise ConfigError(f"Неизвестное полуполе '{self.semifield}'")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"Неизвестный формат вывода '{self.output_format}'")


def resolve_node_cap(explicit=None, profile=None, environ=None):
    """Предел числа узлов: флаг, затем переменная окружения, затем профиль."""
    if explicit is not None:
        return explicit
    environ = os.environ if environ is None else environ
    value = environ.get(NODE_CAP_ENV)
    if value:
        try:
            return int(value)
        except ValueError:
            raise ConfigError(f"{NODE_CAP_ENV} должно быть целым числом, получено '{value}'") from None
    if profile is not None:
        return int(profile.get("node_cap", DEFAULT_NODE_CAP))
    return DEFAULT_NODE_CAP


def build_run_config(args, environ=None):
    """Собирает RunConfig из аргументов CLI поверх выбранного профиля."""
    profile_name = getattr(args, "profile", None) or "default"
    profile = load_profile(profile_name)
    semifield = getattr(args, "semifield", None) or profile.get("semifield", "trivial")
    output_format = getattr(args, "format", None) or profile.get("output_format", "text")
    fresh_vertex = getattr(args, "fresh_vertex", None)
    if fresh_vertex is None:
        fresh_vertex = profile.get("fresh_vertex")
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        semifield=semifield,
        node_cap=resolve_node_cap(getattr(args, "cap", None), profile, environ),
        output_format=output_format,
        fresh_vertex=fresh_vertex,
        profile=profile_name,
    )
