"""Лаборатория сравнения вариантов QAOA на зашумлённом симуляторе"""

from . import core
from . import densim
from . import noise
from . import circuits
from . import problems
from . import qaoa
from . import bench

__all__ = [
    'core',
    'densim',
    'noise',
    'circuits',
    'problems',
    'qaoa',
    'bench',
]
