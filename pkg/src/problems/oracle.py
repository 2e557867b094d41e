"""
Перебор всех назначений и качество аппроксимации.

Мера качества решения (больше - лучше):
- maxcut: размер разреза
- partition: сумма более лёгкой стороны (metric='sum') или число
  элементов меньшего множества (metric='cardinality')
- vertexcover: 1/|C|; недопустимое покрытие заменяется всем множеством вершин

Качество = мера решения / мера оптимума ∈ [0, 1].
"""

from typing import Tuple
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..core.types import SpinAssignment, basis_bits, basis_spins
from ..core.errors import ArgumentError, CapacityError
from .instances import ProblemInstance


MAX_BRUTE_FORCE = 20
PARTITION_METRICS = ('sum', 'cardinality')


def _check_size(inst: ProblemInstance) -> None:
    if inst.n > MAX_BRUTE_FORCE:
        raise CapacityError(f"exhaustive enumeration supports n <= {MAX_BRUTE_FORCE}, got {inst.n}")


def cover_sizes(inst: ProblemInstance) -> np.ndarray:
    """Размер покрытия каждого базисного состояния (недопустимые -> n)."""
    bits = basis_bits(inst.n)
    sizes = bits.sum(axis=1)
    if inst.edges:
        edges = np.array(inst.edges)
        covered = (bits[:, edges[:, 0]] | bits[:, edges[:, 1]]).all(axis=1)
        sizes = np.where(covered, sizes, inst.n)
    return sizes


@lru_cache(maxsize=256)
def measure_table(inst: ProblemInstance, metric: str = 'sum') -> np.ndarray:
    """
    Мера решения на всех 2^n базисных состояниях.

    Args:
        inst: Экземпляр задачи
        metric: Мера partition: 'sum' или 'cardinality'

    Returns:
        Вектор длины 2^n (только для чтения)
    """
    _check_size(inst)
    if metric not in PARTITION_METRICS:
        raise ArgumentError(f"unknown partition metric '{metric}'")
    spins = basis_spins(inst.n)
    if inst.kind == 'maxcut':
        table = np.zeros(1 << inst.n)
        for u, v in inst.edges:
            table += (1 - spins[:, u] * spins[:, v]) / 2
    elif inst.kind == 'partition':
        if metric == 'sum':
            a = np.asarray(inst.weights)
            table = (a.sum() - np.abs(spins @ a)) / 2
        else:
            k = basis_bits(inst.n).sum(axis=1)
            table = np.minimum(k, inst.n - k).astype(float)
    else:
        sizes = cover_sizes(inst).astype(float)
        with np.errstate(divide='ignore'):
            table = np.where(sizes > 0, 1.0 / np.maximum(sizes, 1.0), np.inf)
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class BruteForceResult:
    """
    Результат полного перебора.

    Attributes:
        assignment: Оптимальное назначение (наименьший номер среди оптимумов)
        optimum: Мера оптимума
        worst: Наихудшая мера
    """
    assignment: SpinAssignment
    optimum: float
    worst: float

    def __iter__(self):
        return iter((self.assignment, self.optimum, self.worst))

    def __str__(self) -> str:
        return f"BruteForce(best={self.assignment}, optimum={self.optimum:.6g}, worst={self.worst:.6g})"


def brute_force(inst: ProblemInstance, metric: str = 'sum') -> BruteForceResult:
    """
    Оптимум и наихудшее значение меры полным перебором.

    Raises:
        CapacityError: n > 20
    """
    table = measure_table(inst, metric)
    best = int(np.argmax(table))
    if metric == 'cardinality' and inst.kind == 'partition':
        # оптимум - разбиение с минимальной разностью сумм
        best = int(np.argmax(measure_table(inst, 'sum')))
    return BruteForceResult(
        assignment=SpinAssignment.from_index(best, inst.n),
        optimum=float(table[best]),
        worst=float(np.min(table)),
    )


@lru_cache(maxsize=256)
def quality_table(inst: ProblemInstance, metric: str = 'sum') -> np.ndarray:
    """
    Качество аппроксимации всех базисных состояний.

    Вырожденные случаи: нулевой оптимум (пустой граф, нулевые веса)
    даёт качество 1 всем назначениям, на которых он достигается.
    """
    table = measure_table(inst, metric)
    optimum = table[brute_force(inst, metric).assignment.index()]
    if inst.kind == 'vertexcover':
        sizes = cover_sizes(inst).astype(float)
        best = float(np.min(sizes))
        quality = np.where(sizes > 0, best / np.maximum(sizes, 1.0), 1.0)
    elif optimum <= 0.0:
        quality = np.ones_like(table)
    else:
        quality = np.minimum(table / optimum, 1.0)
    quality.setflags(write=False)
    return quality


def quality(inst: ProblemInstance, s: SpinAssignment, metric: str = 'sum') -> float:
    """Качество одного назначения."""
    if len(s) != inst.n:
        raise ArgumentError(f"assignment of length {len(s)} for instance with n={inst.n}")
    return float(quality_table(inst, metric)[s.index()])


def average_quality(inst: ProblemInstance, probs: np.ndarray, metric: str = 'sum') -> float:
    """
    Среднее качество по распределению исходов измерения.

    Args:
        probs: Вероятности 2^n базисных состояний
    """
    probs = np.asarray(probs, dtype=float)
    if probs.shape != (1 << inst.n,):
        raise ArgumentError(f"expected {1 << inst.n} probabilities, got shape {probs.shape}")
    return float(probs @ quality_table(inst, metric))


def random_guess_quality(inst: ProblemInstance, metric: str = 'sum') -> float:
    """Качество равномерно случайного назначения."""
    return float(np.mean(quality_table(inst, metric)))


def assignment_cover(inst: ProblemInstance, s: SpinAssignment) -> Tuple[int, ...]:
    """Вершины покрытия назначения (s_v = -1)."""
    return tuple(v for v in range(inst.n) if s[v] == -1)
