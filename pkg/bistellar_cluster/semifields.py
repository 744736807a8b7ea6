"""Модуль полуполей коэффициентов.

Каждое полуполе — мультипликативная абелева группа со вспомогательным
сложением ⊕, относительно которого умножение дистрибутивно:

- trivial: одноэлементное полуполе {1};
- tropical: мономы Лорана от образующих y_f, ⊕ — покомпонентный минимум
  показателей;
- posrat: положительные рациональные функции от образующих u_f (sympy),
  ⊕ — обычное сложение.
"""

import sympy as sp

from .complex_core import face_label
from .errors import NormalizationImpossible


class TrivialSemifield:
    name = "trivial"

    def one(self):
        return 1

    def multiply(self, a, b):
        return 1

    def invert(self, a):
        return 1

    def divide(self, a, b):
        return 1

    def oplus(self, a, b):
        return 1

    def power(self, a, k):
        return 1

    def generator(self, face):
        return 1

    def equal(self, a, b):
        return True

    def to_sympy(self, a):
        return sp.Integer(1)

    def render(self, a):
        return "1"


class TropicalSemifield:
    """Элемент — кортеж пар (имя образующей, показатель) без нулей."""

    name = "tropical"

    @staticmethod
    def _normalize(exponents):
        return tuple(sorted((g, e) for g, e in exponents.items() if e != 0))

    def one(self):
        return ()

    def multiply(self, a, b):
        total = dict(a)
        for g, e in b:
            total[g] = total.get(g, 0) + e
        return self._normalize(total)

    def invert(self, a):
        return tuple((g, -e) for g, e in a)

    def divide(self, a, b):
        return self.multiply(a, self.invert(b))

    def oplus(self, a, b):
        first, second = dict(a), dict(b)
        names = set(first) | set(second)
        return self._normalize({g: min(first.get(g, 0), second.get(g, 0)) for g in names})

    def power(self, a, k):
        return self._normalize({g: e * k for g, e in a})

    def generator(self, face):
        return ((f"y_{face_label(face)}", 1),)

    def equal(self, a, b):
        return tuple(a) == tuple(b)

    def to_sympy(self, a):
        result = sp.Integer(1)
        for g, e in a:
            result *= sp.Symbol(g, positive=True) ** e
        return result

    def render(self, a):
        if not a:
            return "1"
        return "*".join(g if e == 1 else f"{g}^{e}" for g, e in a)


class PositiveRationalSemifield:
    """Положительные рациональные функции; элементы хранятся как выражения sympy."""

    name = "posrat"

    def one(self):
        return sp.Integer(1)

    def multiply(self, a, b):
        return sp.cancel(a * b)

    def invert(self, a):
        return sp.cancel(1 / a)

    def divide(self, a, b):
        return sp.cancel(a / b)

    def oplus(self, a, b):
        return sp.cancel(a + b)

    def power(self, a, k):
        return sp.cancel(a ** k)

    def generator(self, face):
        return sp.Symbol(f"u_{face_label(face)}", positive=True)

    def equal(self, a, b):
        return sp.cancel(a - b) == 0

    def to_sympy(self, a):
        return sp.sympify(a)

    def render(self, a):
        return str(sp.factor(a))


SEMIFIELDS = {
    "trivial": TrivialSemifield,
    "tropical": TropicalSemifield,
    "posrat": PositiveRationalSemifield,
}


def make_semifield(name):
    """Создаёт полуполе по имени (trivial, tropical, posrat)."""
    try:
        return SEMIFIELDS[name]()
    except KeyError:
        known = ", ".join(SEMIFIELDS)
        raise ValueError(f"Неизвестное полуполе '{name}'. Доступные: {known}") from None


def normalize(semifield, ratio):
    """Нормированная пара (p⁺, p⁻) = (u/(1⊕u), 1/(1⊕u)).

    Returns:
        Кортеж (p_plus, p_minus) с p_plus ⊕ p_minus = 1.
    """
    total = semifield.oplus(semifield.one(), ratio)
    p_plus = semifield.divide(ratio, total)
    p_minus = semifield.invert(total)
    if not semifield.equal(semifield.oplus(p_plus, p_minus), semifield.one()):
        raise NormalizationImpossible(
            f"Не удалось нормировать коэффициент {semifield.render(ratio)}"
        )
    return p_plus, p_minus
