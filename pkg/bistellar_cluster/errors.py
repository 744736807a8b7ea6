"""Исключения пакета.

Все ошибки наследуются от ValueError, поэтому вызывающий код может
перехватывать их так же, как обычные ошибки проверки данных.
"""


class BistellarError(ValueError):
    """Базовое исключение пакета."""


class ComplexError(BistellarError):
    """Ошибка проверки симплициального комплекса.

    Attributes:
        facets: Список граней, к которым относится ошибка.
    """

    def __init__(self, message, facets=None):
        super().__init__(message)
        self.facets = list(facets or [])


class NotPure(ComplexError):
    pass


class NotClosed(ComplexError):
    pass


class NotConnected(ComplexError):
    pass


class NotOrientable(ComplexError):
    pass


class NotManifold(ComplexError):
    pass


class FaceNotInComplex(ComplexError):
    pass


class VertexOverlap(ComplexError):
    pass


class OrientationBreak(ComplexError):
    """Сумма граней со знаками перестала быть циклом."""


class MoveError(BistellarError):
    pass


class PairNotValid(MoveError):
    pass


class PairNotValidAtStep(MoveError):
    def __init__(self, message, step):
        super().__init__(message)
        self.step = step


class NotMiddleMove(MoveError):
    pass


class MatrixError(BistellarError):
    pass


class KOutOfRange(MatrixError):
    pass


class NotFaces(MatrixError):
    pass


class DimensionMismatch(MatrixError):
    pass


class IndexMismatch(MatrixError):
    pass


class AlgebraError(BistellarError):
    pass


class NormalizationImpossible(AlgebraError):
    pass


class DivisorMismatch(AlgebraError):
    pass


class NonDivisible(AlgebraError):
    pass


class WrongDimension(BistellarError):
    pass


class BudgetExceeded(BistellarError):
    """Превышен лимит числа узлов при обходе класса."""

    def __init__(self, message, cap):
        super().__init__(message)
        self.cap = cap


class ParseError(BistellarError):
    """Ошибка разбора файла граней.

    Attributes:
        line: Номер строки (с единицы) или None.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"строка {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigError(BistellarError):
    """Некорректные параметры запуска (код возврата 2)."""
