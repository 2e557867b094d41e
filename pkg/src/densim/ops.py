"""
Операции над матрицей плотности.

Гейты и каналы действуют на 1-2 кубита; вместо построения полных
операторов 2^n × 2^n матрица переводится в тензор формы (2,)*2n
и сворачивается только по осям целевых кубитов.

Ось строки для кубита q имеет номер n-1-q (кубит 0 - младший бит),
ось столбца - n + (n-1-q).
"""

from typing import List, Sequence

import numpy as np

from ..core.types import IsingModel, BasisSample
from ..core.errors import ArgumentError, ValidationError
from .state import DensityMatrix
from .channel import KrausChannel


UNITARY_ATOL = 1e-10
NEGATIVE_PROB_ATOL = 1e-9


def _check_targets(targets: Sequence[int], n: int, arity: int) -> List[int]:
    targets = [int(q) for q in targets]
    if len(set(targets)) != len(targets):
        raise ArgumentError(f"duplicate targets {targets}")
    if any(q < 0 or q >= n for q in targets):
        raise ArgumentError(f"targets {targets} out of range for {n} qubits")
    if len(targets) != arity:
        raise ArgumentError(f"operator acts on {arity} qubits, got targets {targets}")
    return targets


def _axes(targets: Sequence[int], n: int, offset: int = 0) -> List[int]:
    # старший локальный бит идёт первым в разложении индекса оператора
    return [offset + n - 1 - q for q in reversed(targets)]


def apply_left(matrix: np.ndarray, op: np.ndarray, targets: Sequence[int], n: int) -> np.ndarray:
    """
    Умножить матрицу слева на оператор, вложенный в кубиты targets.

    Args:
        matrix: Массив формы (2^n, k) (матрица плотности, унитарная матрица...)
        op: Оператор 2^m × 2^m, targets[0] - младший бит
        targets: Целевые кубиты
        n: Полное число кубитов

    Returns:
        Новый массив той же формы: (I ⊗ op ⊗ I) · matrix
    """
    op = np.asarray(op, dtype=complex)
    m = len(targets)
    shape = matrix.shape
    tensor = matrix.reshape((2,) * n + (-1,))
    axes = _axes(targets, n)
    op_t = op.reshape((2,) * (2 * m))
    res = np.tensordot(op_t, tensor, axes=(list(range(m, 2 * m)), axes))
    res = np.moveaxis(res, list(range(m)), axes)
    return res.reshape(shape)


def is_unitary(u: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= atol)


def apply_unitary(rho: DensityMatrix, u: np.ndarray, targets: Sequence[int]) -> DensityMatrix:
    """
    ρ' = U ρ U† с U, вложенным в кубиты targets.

    Raises:
        ArgumentError: повторяющиеся или недопустимые кубиты, неверный размер U
        ValidationError: U не унитарна
    """
    u = np.asarray(u, dtype=complex)
    m = int(round(np.log2(u.shape[0]))) if u.ndim == 2 and u.shape[0] > 0 else -1
    if m < 1 or u.shape != (1 << m, 1 << m):
        raise ArgumentError(f"operator shape {u.shape} is not 2^m x 2^m")
    targets = _check_targets(targets, rho.n, m)
    if not is_unitary(u):
        raise ValidationError("operator is not unitary")
    left = apply_left(rho.data, u, targets, rho.n)
    both = apply_left(left.conj().T, u, targets, rho.n).conj().T
    return DensityMatrix(rho.n, both)


def apply_channel(rho: DensityMatrix, ch: KrausChannel, targets: Sequence[int]) -> DensityMatrix:
    """
    ρ' = Σ_k K_k ρ K_k† на кубитах targets.

    Используется кешированный супероператор канала, так что
    стоимость не зависит от числа операторов Крауса.
    """
    n = rho.n
    targets = _check_targets(targets, n, ch.arity)
    m = ch.arity
    deviation = ch.completeness_deviation()
    if deviation > 1e-10:
        raise ValidationError(f"channel '{ch.name}' lost completeness ({deviation:.3e})")

    tensor = rho.data.reshape((2,) * (2 * n))
    axes = _axes(targets, n) + _axes(targets, n, offset=n)
    sup = ch.superoperator().reshape((2,) * (4 * m))
    res = np.tensordot(sup, tensor, axes=(list(range(2 * m, 4 * m)), axes))
    res = np.moveaxis(res, list(range(2 * m)), axes)
    dim = 1 << n
    return DensityMatrix(n, res.reshape(dim, dim))


def measurement_probabilities(rho: DensityMatrix) -> np.ndarray:
    """
    Вероятности исходов измерения в вычислительном базисе.

    Малые отрицательные значения (дрейф округления не хуже -1e-9)
    обнуляются, затем вектор перенормируется.

    Returns:
        Вектор длины 2^n
    """
    probs = np.real(np.diag(rho.data)).copy()
    lowest = float(probs.min())
    if lowest < -NEGATIVE_PROB_ATOL:
        raise ValidationError(f"negative basis-state probability {lowest:.3e}")
    np.clip(probs, 0.0, None, out=probs)
    total = probs.sum()
    if total <= 0.0:
        raise ValidationError("density matrix has zero diagonal")
    return probs / total


def bitstring(x: int, n: int) -> str:
    """Битовая строка базисного состояния, первый символ - кубит 0."""
    return ''.join('1' if (x >> i) & 1 else '0' for i in range(n))


def sample(rho: DensityMatrix, shots: int, rng: np.random.Generator) -> List[BasisSample]:
    """
    Выборка результатов измерения.

    Args:
        rho: Состояние
        shots: Число измерений (≥ 1)
        rng: Генератор numpy, результат детерминирован при фиксированном seed

    Returns:
        Список BasisSample по возрастанию номера состояния, только ненулевые
    """
    if shots < 1:
        raise ArgumentError(f"shots must be positive, got {shots}")
    probs = measurement_probabilities(rho)
    counts = rng.multinomial(shots, probs)
    return [
        BasisSample(bitstring(int(x), rho.n), int(counts[x]))
        for x in np.flatnonzero(counts)
    ]


def expectation_ising(rho: DensityMatrix, model: IsingModel) -> float:
    """
    ⟨C⟩ = Σ_x p_x · C(spins(x)).

    Raises:
        ArgumentError: число переменных модели не совпадает с числом кубитов
    """
    if model.n != rho.n:
        raise ArgumentError(f"model has {model.n} variables, state has {rho.n} qubits")
    return float(measurement_probabilities(rho) @ model.energy_table())
