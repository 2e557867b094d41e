"""
Иерархия исключений лаборатории.

Все ошибки библиотеки наследуются от LabError, поэтому оркестратор
может перехватывать их по ячейке эксперимента и продолжать прогон.
Ошибки некорректного ввода дополнительно являются ValueError,
внутренние сбои и сбои оптимизатора - RuntimeError.
"""


class LabError(Exception):
    """Базовая ошибка лаборатории."""


class CapacityError(LabError, ValueError):
    """Размер задачи выходит за допустимые пределы (число кубитов и т.п.)."""


class ValidationError(LabError, ValueError):
    """Нарушен инвариант объекта (унитарность, полнота Крауса, след...)."""


class ArgumentError(LabError, ValueError):
    """Некорректные аргументы операции."""


class NoiseModelError(LabError, ValueError):
    """Параметры шумовой модели не задают CPTP-канал."""


class TranspileError(LabError, ValueError):
    """Гейт не может быть переведён в нативный набор."""


class OptimizerError(LabError, RuntimeError):
    """Целевая функция вернула нечисловое значение."""


class InternalError(LabError, RuntimeError):
    """Нарушение внутренней согласованности (признак ошибки в коде)."""
