"""
Квантовые каналы в форме операторов Крауса.
"""

from typing import List, Sequence, Optional
from dataclasses import dataclass, field

import numpy as np

from ..core.errors import ValidationError, ArgumentError


COMPLETENESS_ATOL = 1e-10


@dataclass
class KrausChannel:
    """
    CPTP-канал на 1 или 2 кубитах.

    Локальная нумерация: targets[0] соответствует младшему биту
    индекса матриц Крауса.

    Attributes:
        arity: Число кубитов, на которые действует канал
        kraus_ops: Операторы Крауса K_k размера 2^arity × 2^arity
        name: Метка канала для диагностики
    """
    arity: int
    kraus_ops: List[np.ndarray]
    name: str = ''
    _superop: Optional[np.ndarray] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if self.arity < 1:
            raise ArgumentError(f"channel arity must be positive, got {self.arity}")
        dim = 1 << self.arity
        self.kraus_ops = [np.asarray(k, dtype=complex) for k in self.kraus_ops]
        if not self.kraus_ops:
            raise ValidationError("channel needs at least one Kraus operator")
        for k in self.kraus_ops:
            if k.shape != (dim, dim):
                raise ArgumentError(f"Kraus operator of shape {k.shape}, expected {dim}x{dim}")
        deviation = self.completeness_deviation()
        if deviation > COMPLETENESS_ATOL:
            raise ValidationError(
                f"channel '{self.name}' is not trace-preserving (deviation {deviation:.3e})"
            )

    @property
    def dim(self) -> int:
        return 1 << self.arity

    def completeness_deviation(self) -> float:
        """‖Σ K†K − I‖_max."""
        total = sum(k.conj().T @ k for k in self.kraus_ops)
        return float(np.max(np.abs(total - np.eye(self.dim))))

    def superoperator(self) -> np.ndarray:
        """
        Тензор S[a, b, c, d] = Σ_k K[a, c]·conj(K[b, d]).

        ρ'[a, b] = Σ_{c,d} S[a, b, c, d] ρ[c, d]. Вычисляется один раз.
        """
        if self._superop is None:
            stack = np.stack(self.kraus_ops)
            self._superop = np.einsum('kac,kbd->abcd', stack, stack.conj())
        return self._superop

    def is_identity(self, atol: float = 1e-12) -> bool:
        flat = self.superoperator().reshape(self.dim ** 2, self.dim ** 2)
        return bool(np.allclose(flat, _identity_superop(self.dim), atol=atol))

    def __str__(self) -> str:
        return f"KrausChannel({self.name or 'anonymous'}, arity={self.arity}, ops={len(self.kraus_ops)})"


def _identity_superop(dim: int) -> np.ndarray:
    eye = np.eye(dim)
    return np.einsum('ac,bd->abcd', eye, eye).reshape(dim * dim, dim * dim)


def identity_channel(arity: int = 1) -> KrausChannel:
    return KrausChannel(arity, [np.eye(1 << arity)], name='identity')


def unitary_channel(u: np.ndarray, name: str = 'unitary') -> KrausChannel:
    """Канал с единственным оператором Крауса U."""
    u = np.asarray(u, dtype=complex)
    arity = int(round(np.log2(u.shape[0])))
    return KrausChannel(arity, [u], name=name)


def compose_channels(first: KrausChannel, second: KrausChannel, name: str = '') -> KrausChannel:
    """
    Последовательная композиция: сначала first, затем second.

    Операторы Крауса - все произведения B_j A_i; нулевые отбрасываются.
    """
    if first.arity != second.arity:
        raise ArgumentError(f"cannot compose arity {first.arity} with arity {second.arity}")
    ops = [b @ a for b in second.kraus_ops for a in first.kraus_ops]
    ops = [k for k in ops if np.any(np.abs(k) > 0.0)]
    return KrausChannel(first.arity, ops, name=name or f"{second.name}∘{first.name}")


def tensor_channels(channels: Sequence[KrausChannel], name: str = '') -> KrausChannel:
    """
    Тензорное произведение каналов; channels[0] действует на младший кубит.
    """
    ops = [np.eye(1, dtype=complex)]
    arity = 0
    for ch in channels:
        ops = [np.kron(k, acc) for k in ch.kraus_ops for acc in ops]
        arity += ch.arity
    return KrausChannel(arity, ops, name=name or '⊗'.join(ch.name for ch in channels))
