"""
Матрица плотности и подготовка начальных состояний.

Состояние n кубитов хранится плотной матрицей 2^n × 2^n.
Кубит 0 - младший бит номера базисного состояния.
"""

from typing import Tuple, Sequence, Optional
from dataclasses import dataclass, field

import numpy as np

from ..core.errors import CapacityError, ValidationError, ArgumentError


MAX_QUBITS = 12

HERMITIAN_ATOL = 1e-10
TRACE_ATOL = 1e-9
PSD_ATOL = 1e-9


def check_capacity(n: int) -> None:
    """Проверить, что число кубитов в пределах 1..MAX_QUBITS."""
    if not 1 <= n <= MAX_QUBITS:
        raise CapacityError(f"qubit count {n} outside supported range 1..{MAX_QUBITS}")


@dataclass(frozen=True)
class Preparation:
    """
    Способ подготовки начального произведения состояний.

    Attributes:
        kind: 'zero' (|0⟩ⁿ), 'plus' (|+⟩ⁿ) или 'ry' (⊗ RY(θ_i)|0⟩)
        thetas: Углы θ_i для kind='ry', по одному на кубит
    """
    kind: str
    thetas: Tuple[float, ...] = ()

    @staticmethod
    def all_zero() -> 'Preparation':
        return Preparation('zero')

    @staticmethod
    def uniform_plus() -> 'Preparation':
        return Preparation('plus')

    @staticmethod
    def product_ry(thetas: Sequence[float]) -> 'Preparation':
        thetas = tuple(float(t) for t in thetas)
        if not all(np.isfinite(thetas)):
            raise ArgumentError(f"non-finite preparation angle in {thetas}")
        return Preparation('ry', thetas)

    def qubit_vectors(self, n: int) -> list:
        """Однокубитные векторы состояния, элемент i - для кубита i."""
        if self.kind == 'zero':
            return [np.array([1.0, 0.0], dtype=complex)] * n
        if self.kind == 'plus':
            return [np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0)] * n
        if self.kind == 'ry':
            if len(self.thetas) != n:
                raise ArgumentError(f"expected {n} angles, got {len(self.thetas)}")
            return [
                np.array([np.cos(t / 2), np.sin(t / 2)], dtype=complex)
                for t in self.thetas
            ]
        raise ArgumentError(f"unknown preparation kind '{self.kind}'")

    def __str__(self) -> str:
        if self.kind == 'ry':
            return f"ry({', '.join(f'{t:.4f}' for t in self.thetas)})"
        return self.kind


@dataclass
class DensityMatrix:
    """
    Матрица плотности n-кубитной системы.

    Attributes:
        n: Число кубитов
        data: Комплексная матрица 2^n × 2^n
    """
    n: int
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        check_capacity(self.n)
        self.data = np.asarray(self.data, dtype=complex)
        dim = 1 << self.n
        if self.data.shape != (dim, dim):
            raise ArgumentError(f"expected {dim}x{dim} matrix, got {self.data.shape}")

    @staticmethod
    def from_pure(psi: np.ndarray) -> 'DensityMatrix':
        """ρ = |ψ⟩⟨ψ| для нормированного вектора ψ."""
        psi = np.asarray(psi, dtype=complex).ravel()
        n = int(round(np.log2(psi.size)))
        if psi.size != 1 << n:
            raise ArgumentError(f"state vector length {psi.size} is not a power of two")
        return DensityMatrix(n, np.outer(psi, psi.conj()))

    @staticmethod
    def maximally_mixed(n: int) -> 'DensityMatrix':
        check_capacity(n)
        dim = 1 << n
        return DensityMatrix(n, np.eye(dim, dtype=complex) / dim)

    def trace(self) -> float:
        return float(np.real(np.trace(self.data)))

    def purity(self) -> float:
        """tr(ρ²)."""
        return float(np.real(np.vdot(self.data.conj().T, self.data)))

    def fidelity_with_pure(self, psi: np.ndarray) -> float:
        """⟨ψ|ρ|ψ⟩."""
        psi = np.asarray(psi, dtype=complex).ravel()
        return float(np.real(psi.conj() @ self.data @ psi))

    def validate(
        self,
        hermitian_atol: float = HERMITIAN_ATOL,
        trace_atol: float = TRACE_ATOL,
        psd_atol: float = PSD_ATOL
    ) -> None:
        """
        Проверить эрмитовость, единичный след и неотрицательность.

        Raises:
            ValidationError: если какой-либо инвариант нарушен
        """
        asym = np.max(np.abs(self.data - self.data.conj().T))
        if asym > hermitian_atol:
            raise ValidationError(f"density matrix not Hermitian (deviation {asym:.3e})")
        drift = abs(np.trace(self.data) - 1.0)
        if drift > trace_atol:
            raise ValidationError(f"density matrix trace off by {drift:.3e}")
        smallest = float(np.linalg.eigvalsh(self.data)[0])
        if smallest < -psd_atol:
            raise ValidationError(f"density matrix has eigenvalue {smallest:.3e}")

    def copy(self) -> 'DensityMatrix':
        return DensityMatrix(self.n, self.data.copy())

    def __str__(self) -> str:
        return f"DensityMatrix(n={self.n}, trace={self.trace():.6f}, purity={self.purity():.6f})"


def product_state_vector(n: int, prep: Optional[Preparation] = None) -> np.ndarray:
    """
    Вектор состояния произведения однокубитных состояний.

    Кубит 0 - младший бит, поэтому кронекерово произведение
    берётся от старшего кубита к младшему.
    """
    check_capacity(n)
    prep = prep or Preparation.all_zero()
    psi = np.ones(1, dtype=complex)
    for vec in reversed(prep.qubit_vectors(n)):
        psi = np.kron(psi, vec)
    return psi


def init_state(n: int, prep: Optional[Preparation] = None) -> DensityMatrix:
    """
    Подготовить чистое начальное состояние.

    Args:
        n: Число кубитов (1..12)
        prep: Способ подготовки, по умолчанию |0⟩ⁿ

    Returns:
        DensityMatrix |ψ⟩⟨ψ|
    """
    return DensityMatrix.from_pure(product_state_vector(n, prep))
