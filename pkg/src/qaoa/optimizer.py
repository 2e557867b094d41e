"""
Безградиентная оптимизация параметров (COBYLA).

Обёртка над scipy.optimize.minimize(method='COBYLA'):
- tolerance - конечный радиус доверительной области
- max_evals - жёсткий лимит вычислений целевой функции
- результат - лучшая из вычисленных точек, поэтому f* ≤ f(x0)
"""

from typing import Callable, List, Sequence, Tuple
from dataclasses import dataclass, field
import logging

import numpy as np
from scipy.optimize import minimize as scipy_minimize

from ..core.errors import ArgumentError, OptimizerError


logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 0.01
DEFAULT_MAX_EVALS = 150


class _BudgetExhausted(Exception):
    pass


@dataclass
class OptimizeOutcome:
    """
    Результат оптимизации.

    Attributes:
        x: Лучшая найденная точка
        fun: Значение в ней
        evals: Число вычислений целевой функции
        f0: Значение в начальной точке
        converged: Остановка по радиусу, а не по лимиту вычислений
        history: Значения целевой функции в порядке вычисления
    """
    x: np.ndarray
    fun: float
    evals: int
    f0: float
    converged: bool
    history: List[float] = field(default_factory=list, repr=False)

    def __iter__(self):
        return iter((self.x, self.fun, self.evals))

    def __str__(self) -> str:
        status = "converged" if self.converged else "budget"
        return f"OptimizeOutcome(f*={self.fun:.6g}, f0={self.f0:.6g}, evals={self.evals}, {status})"


def minimize(
    f: Callable[[np.ndarray], float],
    x0: Sequence[float],
    tolerance: float = DEFAULT_TOLERANCE,
    max_evals: int = DEFAULT_MAX_EVALS,
    rhobeg: float = 0.5
) -> OptimizeOutcome:
    """
    Минимизировать f методом COBYLA.

    Args:
        f: Целевая функция R^d -> R
        x0: Начальная точка, d ≥ 1
        tolerance: Конечный радиус доверительной области
        max_evals: Максимум вычислений f
        rhobeg: Начальный радиус

    Returns:
        OptimizeOutcome

    Raises:
        ArgumentError: пустая точка или неположительные параметры
        OptimizerError: f вернула нечисловое значение
    """
    x0 = np.asarray(x0, dtype=float).ravel()
    if x0.size < 1:
        raise ArgumentError("optimizer needs at least one parameter")
    if tolerance <= 0:
        raise ArgumentError(f"tolerance must be positive, got {tolerance}")
    if max_evals < 1:
        raise ArgumentError(f"max_evals must be positive, got {max_evals}")

    history: List[float] = []
    best: List[Tuple[float, np.ndarray]] = []

    def wrapped(x: np.ndarray) -> float:
        if len(history) >= max_evals:
            raise _BudgetExhausted()
        value = float(f(np.array(x, dtype=float)))
        if not np.isfinite(value):
            raise OptimizerError(f"objective returned non-finite value {value} at {list(x)}")
        history.append(value)
        if not best or value < best[0][0]:
            best[:] = [(value, np.array(x, dtype=float))]
        return value

    converged = False
    try:
        result = scipy_minimize(
            wrapped, x0, method='COBYLA', tol=tolerance,
            options={'maxiter': max_evals, 'rhobeg': rhobeg},
        )
        converged = bool(result.success)
    except _BudgetExhausted:
        pass
    if not history:
        # COBYLA вычисляет x0 первой; на случай иной реализации
        wrapped(x0)

    if not converged:
        logger.debug("optimizer stopped after %d evaluations without reaching radius %g",
                     len(history), tolerance)
    fun, x = best[0]
    return OptimizeOutcome(x=x, fun=fun, evals=len(history), f0=history[0],
                           converged=converged, history=history)
