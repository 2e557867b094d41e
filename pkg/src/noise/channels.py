"""
Каналы шума: тепловая релаксация, деполяризация, средняя точность
и подбор вероятности деполяризации под эмпирическую ошибку гейта.

Средняя точность канала E определяется как среднее по Хаару
⟨ψ|E(|ψ⟩⟨ψ|)|ψ⟩ и лежит в [1/d, 1].
"""

from typing import Dict, List, Tuple, Optional, Sequence
from dataclasses import dataclass, field
from functools import reduce
import itertools
import logging

import numpy as np

from ..core.errors import ArgumentError, NoiseModelError
from ..densim.channel import KrausChannel, compose_channels, tensor_channels
from .params import NoiseParams


logger = logging.getLogger(__name__)

PAULIS = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]

# виртуальные гейты не получают каналов шума
GATE_ARITY = {'SX': 1, 'CX': 2}
VIRTUAL_KINDS = ('RZ',)


def _check_relaxation(t1: float, t2: float, t: float) -> None:
    if t1 <= 0 or t2 <= 0:
        raise ArgumentError(f"relaxation times must be positive (t1={t1}, t2={t2})")
    if t2 > 2 * t1:
        raise NoiseModelError(f"t2={t2} > 2*t1={2 * t1}: relaxation channel is not CP")
    if t < 0:
        raise ArgumentError(f"negative duration {t}")


def thermal_channel(t1: float, t2: float, t: float) -> KrausChannel:
    """
    Тепловая релаксация к |0⟩ за время t.

    Затухание амплитуды с γ = 1 − e^{−t/T1}, затем чистая дефазировка,
    доводящая затухание недиагональных элементов до e^{−t/T2}.

    Args:
        t1: T1, нс
        t2: T2, нс (T2 ≤ 2·T1)
        t: Длительность, нс

    Returns:
        Однокубитный KrausChannel
    """
    _check_relaxation(t1, t2, t)
    population = float(np.exp(-t / t1))
    damping = [
        np.array([[1.0, 0.0], [0.0, np.sqrt(population)]], dtype=complex),
        np.array([[0.0, np.sqrt(1.0 - population)], [0.0, 0.0]], dtype=complex),
    ]
    # амплитудное затухание уже даёт e^{−t/(2T1)} на недиагонали
    rate = max(1.0 / t2 - 1.0 / (2.0 * t1), 0.0)
    remaining = 1.0 if rate == 0.0 else float(np.exp(-t * rate))
    dephasing = [
        np.sqrt((1.0 + remaining) / 2.0) * PAULIS[0],
        np.sqrt((1.0 - remaining) / 2.0) * PAULIS[3],
    ]
    ops = [d @ a for d in dephasing for a in damping]
    ops = [k for k in ops if np.any(np.abs(k) > 0.0)]
    return KrausChannel(1, ops, name=f"thermal({t:g}ns)")


def thermal_avg_fidelity(t1: float, t2: float, t: float) -> float:
    """
    Средняя точность тепловой релаксации.

    F = ½ + e^{−t/T1}/6 + e^{−t/T2}/3; при T1 = T2 = T это ½ + ½·e^{−t/T}.
    """
    _check_relaxation(t1, t2, t)
    return float(0.5 + np.exp(-t / t1) / 6.0 + np.exp(-t / t2) / 3.0)


def thermal_pair_fidelity(t1: float, t2: float, t: float) -> float:
    """Средняя точность двух независимых каналов релаксации на паре кубитов."""
    _check_relaxation(t1, t2, t)
    process = (1.0 + np.exp(-t / t1) + 2.0 * np.exp(-t / t2)) / 4.0
    return float((4.0 * process ** 2 + 1.0) / 5.0)


def pauli_basis(arity: int) -> List[np.ndarray]:
    """Все 4^arity произведения Паули, первым идёт единичный."""
    return [
        reduce(np.kron, combo) if len(combo) > 1 else combo[0]
        for combo in itertools.product(PAULIS, repeat=arity)
    ]


def depolarizing_channel(arity: int, p: float) -> KrausChannel:
    """
    E(ρ) = (1−p)·ρ + p·I/d, d = 2^arity.

    Разложение Крауса по базису Паули: √(1 − p(d²−1)/d²)·I и √(p/d²)·P.

    Raises:
        ArgumentError: p вне [0, 1] или arity не 1/2
    """
    if arity not in (1, 2):
        raise ArgumentError(f"depolarizing arity must be 1 or 2, got {arity}")
    if not 0.0 <= p <= 1.0:
        raise ArgumentError(f"depolarizing probability {p} outside [0, 1]")
    d2 = float(4 ** arity)
    basis = pauli_basis(arity)
    ops = [np.sqrt(1.0 - p * (d2 - 1.0) / d2) * basis[0]]
    if p > 0.0:
        ops += [np.sqrt(p / d2) * pauli for pauli in basis[1:]]
    return KrausChannel(arity, ops, name=f"depol{arity}({p:.3g})")


def depolarizing_avg_fidelity(arity: int, p: float) -> float:
    return 1.0 - p + p / (1 << arity)


def average_fidelity(channel: KrausChannel) -> float:
    """
    Средняя точность по операторам Крауса.

    F = (Σ_k |tr K_k|² + d) / (d(d+1))
    """
    d = channel.dim
    traces = sum(abs(np.trace(k)) ** 2 for k in channel.kraus_ops)
    return float((traces + d) / (d * (d + 1)))


def haar_states(dim: int, samples: int, rng: np.random.Generator) -> np.ndarray:
    """Случайные чистые состояния по мере Хаара (нормированные гауссовы векторы)."""
    z = rng.normal(size=(samples, dim)) + 1j * rng.normal(size=(samples, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def monte_carlo_fidelity(
    channel: KrausChannel,
    samples: int = 100_000,
    rng: Optional[np.random.Generator] = None
) -> float:
    """Оценка средней точности усреднением по случайным состояниям Хаара."""
    if samples < 1:
        raise ArgumentError(f"samples must be positive, got {samples}")
    rng = rng if rng is not None else np.random.default_rng()
    psi = haar_states(channel.dim, samples, rng)
    stack = np.stack(channel.kraus_ops)
    amps = np.einsum('si,kij,sj->sk', psi.conj(), stack, psi)
    return float(np.mean(np.sum(np.abs(amps) ** 2, axis=1)))


@dataclass
class FidelityReport:
    """
    Сравнение аналитической и численной средней точности канала.

    Attributes:
        channel_id: Метка канала
        analytic: Точность по формуле
        monte_carlo: Оценка Монте-Карло
        samples: Число случайных состояний
    """
    channel_id: str
    analytic: float
    monte_carlo: float
    samples: int

    @property
    def deviation(self) -> float:
        return abs(self.analytic - self.monte_carlo)

    def __str__(self) -> str:
        return (f"{self.channel_id}: F = {self.analytic:.6f}, "
                f"MC = {self.monte_carlo:.6f} ({self.samples} samples)")


def fidelity_report(
    channel: KrausChannel,
    samples: int = 100_000,
    rng: Optional[np.random.Generator] = None,
    channel_id: Optional[str] = None
) -> FidelityReport:
    return FidelityReport(
        channel_id=channel_id or channel.name,
        analytic=average_fidelity(channel),
        monte_carlo=monte_carlo_fidelity(channel, samples, rng),
        samples=samples,
    )


@dataclass(frozen=True)
class DepolMatch:
    """
    Результат подбора вероятности деполяризации.

    Attributes:
        p: Вероятность деполяризации
        budget_exceeded: Релаксация сама по себе хуже целевой точности
    """
    p: float
    budget_exceeded: bool = False


def match_depol_probability(target_fidelity: float, thermal_fidelity: float, arity: int) -> DepolMatch:
    """
    Подобрать p так, чтобы деполяризация после релаксации давала target_fidelity.

    Используется F = (1−p)·F_T + p/d, d = 2^arity. Если F_T < target,
    возвращается p = 0 и флаг budget_exceeded (с предупреждением в лог).

    Raises:
        ArgumentError: точности вне (1/d², 1]
    """
    if arity not in (1, 2):
        raise ArgumentError(f"arity must be 1 or 2, got {arity}")
    d = float(1 << arity)
    lower = 1.0 / d ** 2
    for name, value in (('target', target_fidelity), ('thermal', thermal_fidelity)):
        if not lower < value <= 1.0:
            raise ArgumentError(f"{name} fidelity {value} outside ({lower:g}, 1]")
    if thermal_fidelity < target_fidelity:
        logger.warning(
            "thermal fidelity %.6f already below target %.6f (arity %d); depolarizing disabled",
            thermal_fidelity, target_fidelity, arity,
        )
        return DepolMatch(0.0, budget_exceeded=True)
    spread = thermal_fidelity - 1.0 / d
    if spread <= 0.0:
        return DepolMatch(0.0)
    p = (thermal_fidelity - target_fidelity) / spread
    return DepolMatch(float(min(max(p, 0.0), 1.0)))


@dataclass
class GateNoiseModel:
    """
    Каналы шума нативных гейтов для данного NoiseParams.

    Вероятности деполяризации подбираются один раз по немасштабированным
    временам и ошибкам, затем умножаются на d_depol (с отсечкой в 1).
    Времена релаксации умножаются на d_thermal.

    Attributes:
        params: Параметры шума (с масштабами)
        matched: Немасштабированный подбор по виду гейта
    """
    params: NoiseParams
    matched: Dict[str, DepolMatch] = field(default_factory=dict)
    _thermal_cache: Dict[float, KrausChannel] = field(default_factory=dict, repr=False)
    _depol_cache: Dict[str, KrausChannel] = field(default_factory=dict, repr=False)

    @staticmethod
    def from_params(params: NoiseParams) -> 'GateNoiseModel':
        matched = {}
        for kind, arity in GATE_ARITY.items():
            gate = params.gate(kind)
            if arity == 1:
                thermal = thermal_avg_fidelity(params.t1, params.t2, gate.duration)
            else:
                thermal = thermal_pair_fidelity(params.t1, params.t2, gate.duration)
            matched[kind] = match_depol_probability(1.0 - gate.error, thermal, arity)
        return GateNoiseModel(params=params, matched=matched)

    def depol_probability(self, kind: str) -> float:
        """Масштабированная вероятность деполяризации гейта."""
        return min(self.matched[kind].p * self.params.d_depol, 1.0)

    def thermal(self, duration: float) -> KrausChannel:
        """Канал релаксации за duration нс (время масштабируется)."""
        t = float(duration) * self.params.d_thermal
        if t not in self._thermal_cache:
            self._thermal_cache[t] = thermal_channel(self.params.t1, self.params.t2, t)
        return self._thermal_cache[t]

    def depolarizing(self, kind: str) -> KrausChannel:
        if kind not in self._depol_cache:
            self._depol_cache[kind] = depolarizing_channel(GATE_ARITY[kind], self.depol_probability(kind))
        return self._depol_cache[kind]

    def gate_channels(self, kind: str, targets: Sequence[int]) -> List[Tuple[KrausChannel, Tuple[int, ...]]]:
        """
        Каналы, вставляемые после гейта.

        Релаксация на каждом кубите гейта, затем деполяризация
        на всех его кубитах; виртуальные гейты без шума.

        Returns:
            Список (канал, кубиты) в порядке применения
        """
        if kind in VIRTUAL_KINDS:
            return []
        if kind not in GATE_ARITY:
            raise ArgumentError(f"gate kind '{kind}' is not native")
        thermal = self.thermal(self.params.gate(kind).duration)
        channels = [(thermal, (int(q),)) for q in targets]
        channels.append((self.depolarizing(kind), tuple(int(q) for q in targets)))
        return channels

    def composed_gate_channel(self, kind: str) -> KrausChannel:
        """Полный канал шума гейта (релаксация ⊗ ... затем деполяризация)."""
        arity = GATE_ARITY[kind]
        thermal = self.thermal(self.params.gate(kind).duration)
        relax = thermal if arity == 1 else tensor_channels([thermal] * arity)
        return compose_channels(relax, self.depolarizing(kind), name=f"{kind}-noise")
