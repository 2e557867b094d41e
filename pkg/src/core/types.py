"""
Базовые типы и структуры данных системы.

Определяет общие для всех подпакетов объекты:
- IsingModel: C(s) = -Σ_{i<j} J_ij s_i s_j - Σ_i h_i s_i + offset, s_i = ±1
- SpinAssignment: вектор спинов s ∈ {-1, +1}^n
- BasisSample: результат измерения (битовая строка + кратность)

Соглашение о нумерации: кубит 0 - младший бит номера базисного
состояния, спин s_i = (-1)^{x_i}, т.е. бит 0 ↔ s = +1.
"""

from typing import Dict, List, Tuple, Sequence, Optional
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ArgumentError, ValidationError


@lru_cache(maxsize=None)
def basis_bits(n: int) -> np.ndarray:
    """
    Таблица битов всех базисных состояний.

    Returns:
        Массив формы (2^n, n), элемент [x, i] = i-й бит числа x
    """
    table = (np.arange(1 << n)[:, None] >> np.arange(n)[None, :]) & 1
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def basis_spins(n: int) -> np.ndarray:
    """Спины всех базисных состояний: s = 1 - 2·бит, форма (2^n, n)."""
    spins = 1 - 2 * basis_bits(n)
    spins.setflags(write=False)
    return spins


@dataclass(frozen=True)
class SpinAssignment:
    """
    Назначение спинов.

    Attributes:
        spins: Кортеж значений ±1, по одному на переменную
    """
    spins: Tuple[int, ...]

    def __post_init__(self):
        spins = tuple(int(s) for s in self.spins)
        if any(s not in (-1, 1) for s in spins):
            raise ArgumentError(f"spins must be ±1, got {spins}")
        object.__setattr__(self, 'spins', spins)

    @staticmethod
    def from_index(x: int, n: int) -> 'SpinAssignment':
        """Спины базисного состояния с номером x."""
        return SpinAssignment(tuple(1 - 2 * ((x >> i) & 1) for i in range(n)))

    def index(self) -> int:
        """Номер соответствующего базисного состояния."""
        return sum(1 << i for i, s in enumerate(self.spins) if s == -1)

    def as_array(self) -> np.ndarray:
        return np.array(self.spins, dtype=int)

    def __len__(self) -> int:
        return len(self.spins)

    def __getitem__(self, i: int) -> int:
        return self.spins[i]

    def __str__(self) -> str:
        return ''.join('+' if s == 1 else '-' for s in self.spins)


@dataclass(frozen=True)
class BasisSample:
    """
    Исход измерения в вычислительном базисе.

    Attributes:
        bits: Битовая строка длины n, символ i - бит кубита i
        multiplicity: Сколько раз исход встретился в выборке
    """
    bits: str
    multiplicity: int

    def index(self) -> int:
        return sum(1 << i for i, b in enumerate(self.bits) if b == '1')

    def spins(self) -> SpinAssignment:
        return SpinAssignment(tuple(1 - 2 * int(b) for b in self.bits))


@dataclass(eq=False)
class IsingModel:
    """
    Модель Изинга - целевая функция QAOA.

    C(s) = -Σ_{i<j} J_ij s_i s_j - Σ_i h_i s_i + offset

    Attributes:
        n: Число переменных
        h: Линейные коэффициенты, форма (n,)
        j: Строго верхнетреугольная матрица связей, форма (n, n)
        offset: Константное слагаемое
    """
    n: int
    h: np.ndarray
    j: np.ndarray
    offset: float = 0.0
    _table: Optional[np.ndarray] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError(f"negative variable count {self.n}")
        self.h = np.array(self.h, dtype=float).reshape(self.n)
        self.j = np.array(self.j, dtype=float).reshape(self.n, self.n)
        self.offset = float(self.offset)
        if np.any(np.tril(self.j) != 0.0):
            raise ValidationError("coupling matrix must be strictly upper-triangular")

    @staticmethod
    def from_terms(
        n: int,
        linear: Optional[Dict[int, float]] = None,
        quadratic: Optional[Dict[Tuple[int, int], float]] = None,
        offset: float = 0.0
    ) -> 'IsingModel':
        """
        Собрать модель из словарей слагаемых.

        Args:
            n: Число переменных
            linear: {i: h_i}
            quadratic: {(i, j): J_ij}, порядок индексов не важен
            offset: Константа

        Returns:
            IsingModel
        """
        h = np.zeros(n)
        j = np.zeros((n, n))
        for i, value in (linear or {}).items():
            h[i] += value
        for (a, b), value in (quadratic or {}).items():
            if a == b:
                raise ArgumentError(f"self-coupling on variable {a}")
            lo, hi = min(a, b), max(a, b)
            j[lo, hi] += value
        return IsingModel(n=n, h=h, j=j, offset=offset)

    def coupling(self, a: int, b: int) -> float:
        """J_ab с симметричным доступом."""
        if a == b:
            return 0.0
        return float(self.j[min(a, b), max(a, b)])

    def terms(self) -> List[Tuple[int, ...]]:
        """
        Множество слагаемых T = {s_i : h_i ≠ 0} ∪ {s_i s_j : J_ij ≠ 0}.

        Returns:
            Список кортежей (i,) и (i, j) с i < j
        """
        linear = [(int(i),) for i in np.flatnonzero(self.h)]
        rows, cols = np.nonzero(self.j)
        quadratic = [(int(a), int(b)) for a, b in zip(rows, cols)]
        return linear + sorted(quadratic)

    def edges(self) -> List[Tuple[int, int]]:
        """Пары (i, j) с ненулевой связью, упорядоченные."""
        return [t for t in self.terms() if len(t) == 2]

    def energy(self, spins: Sequence[int]) -> float:
        """Значение C(s) на одном назначении."""
        s = np.asarray(spins, dtype=float)
        if s.shape != (self.n,):
            raise ArgumentError(f"expected {self.n} spins, got shape {s.shape}")
        return float(-s @ self.j @ s - self.h @ s + self.offset)

    def energy_table(self) -> np.ndarray:
        """
        Значения C на всех 2^n базисных состояниях (кешируются).

        Returns:
            Вектор длины 2^n, элемент x = C(spins(x))
        """
        if self._table is None:
            s = basis_spins(self.n).astype(float)
            table = -np.einsum('xi,ij,xj->x', s, self.j, s) - s @ self.h + self.offset
            table.setflags(write=False)
            self._table = table
        return self._table

    def copy(self) -> 'IsingModel':
        return IsingModel(n=self.n, h=self.h.copy(), j=self.j.copy(), offset=self.offset)

    def __str__(self) -> str:
        return f"IsingModel(n={self.n}, terms={len(self.terms())}, offset={self.offset:g})"
