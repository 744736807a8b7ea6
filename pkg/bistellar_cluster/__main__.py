"""Главная точка входа.

Запуск через: python -m bistellar_cluster <команда> [аргументы]
"""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
