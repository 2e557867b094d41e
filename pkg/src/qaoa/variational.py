"""
Вариационный цикл QAOA и вариантов с тёплым стартом.

Целевая функция: ⟨H_C⟩ в состоянии после зашумлённой схемы

    логическая схема -> транспиляция в {RZ, SX, CX} -> расписание
    -> вставка шума -> плотностная симуляция -> Tr(ρ·H_C)

Параметры подбираются COBYLA из случайной точки
β ∈ [0, π)^p, γ ∈ [0, 2π)^p; прогон повторяется `repeats` раз.
"""

from typing import List, Optional, Dict, Any, Union
from dataclasses import dataclass, field, asdict
import time
import logging

import numpy as np

from ..core.types import IsingModel, SpinAssignment
from ..core.errors import ArgumentError
from ..densim.state import DensityMatrix
from ..densim.ops import expectation_ising, measurement_probabilities
from ..noise.params import NoiseParams
from ..noise.channels import GateNoiseModel
from ..circuits.gates import Circuit
from ..circuits.builder import build_qaoa_circuit
from ..circuits.transpiler import transpile
from ..circuits.schedule import ScheduledCircuit, schedule, estimate_quantum_time
from ..circuits.noisy import insert_noise
from ..circuits.simulate import simulate
from ..problems.instances import ProblemInstance
from ..problems.encodings import encode
from ..problems.oracle import average_quality, PARTITION_METRICS
from ..problems.warmstart import warmstart, ws_thetas
from .optimizer import minimize, DEFAULT_TOLERANCE, DEFAULT_MAX_EVALS


logger = logging.getLogger(__name__)

ALL_VARIANTS = ('standard', 'ws-init', 'wsqaoa', 'rqaoa')
WARM_VARIANTS = ('ws-init', 'wsqaoa')


@dataclass(frozen=True)
class QaoaParams:
    """
    Углы QAOA.

    Attributes:
        p: Число слоёв
        betas: Углы смесителя, длина p
        gammas: Углы разделителя, длина p
    """
    p: int
    betas: tuple
    gammas: tuple

    def __post_init__(self):
        object.__setattr__(self, 'betas', tuple(float(b) for b in self.betas))
        object.__setattr__(self, 'gammas', tuple(float(g) for g in self.gammas))
        if self.p < 1:
            raise ArgumentError(f"layer count must be positive, got {self.p}")
        if len(self.betas) != self.p or len(self.gammas) != self.p:
            raise ArgumentError(f"expected {self.p} betas and gammas, got "
                                f"{len(self.betas)} and {len(self.gammas)}")

    def vector(self) -> np.ndarray:
        """Вектор оптимизатора [β_1..β_p, γ_1..γ_p]."""
        return np.array(self.betas + self.gammas)

    @staticmethod
    def from_vector(x: np.ndarray, p: int) -> 'QaoaParams':
        x = np.asarray(x, dtype=float)
        if x.shape != (2 * p,):
            raise ArgumentError(f"expected parameter vector of length {2 * p}, got shape {x.shape}")
        return QaoaParams(p, tuple(x[:p]), tuple(x[p:]))

    @staticmethod
    def random(p: int, rng: np.random.Generator) -> 'QaoaParams':
        """Случайная начальная точка β ∈ [0, π), γ ∈ [0, 2π)."""
        betas = rng.uniform(0.0, np.pi, size=p)
        gammas = rng.uniform(0.0, 2 * np.pi, size=p)
        return QaoaParams(p, tuple(betas), tuple(gammas))

    def __str__(self) -> str:
        b = ', '.join(f"{x:.4f}" for x in self.betas)
        g = ', '.join(f"{x:.4f}" for x in self.gammas)
        return f"QaoaParams(p={self.p}, β=[{b}], γ=[{g}])"


@dataclass(frozen=True)
class VariantConfig:
    """
    Настройки одного варианта алгоритма.

    Attributes:
        variant: 'standard', 'ws-init', 'wsqaoa' или 'rqaoa'
        layers: Число слоёв p
        tolerance: Конечный радиус COBYLA
        max_evals: Лимит вычислений целевой функции
        repeats: Число прогонов с новыми начальными точками
        rqaoa_samples: Число измерений на шаг рекурсии
        rqaoa_cutoff: Число переменных, решаемых перебором
        inner_variant: Вариант внутри рекурсии
        shots: Измерений на вычисление целевой функции (для оценки времени)
        metric: Мера качества partition
    """
    variant: str = 'standard'
    layers: int = 1
    tolerance: float = DEFAULT_TOLERANCE
    max_evals: int = DEFAULT_MAX_EVALS
    repeats: int = 3
    rqaoa_samples: int = 10
    rqaoa_cutoff: int = 1
    inner_variant: str = 'standard'
    shots: int = 1000
    metric: str = 'sum'

    def __post_init__(self):
        if self.variant not in ALL_VARIANTS:
            raise ArgumentError(f"unknown variant '{self.variant}', expected one of {ALL_VARIANTS}")
        if self.inner_variant != 'standard':
            raise ArgumentError(f"recursive inner variant must be 'standard', got '{self.inner_variant}'")
        if self.layers < 1:
            raise ArgumentError(f"layer count must be positive, got {self.layers}")
        if self.tolerance <= 0:
            raise ArgumentError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_evals < 1 or self.repeats < 1 or self.rqaoa_samples < 1 or self.shots < 1:
            raise ArgumentError("max_evals, repeats, rqaoa_samples and shots must be positive")
        if self.rqaoa_cutoff < 1:
            raise ArgumentError(f"rqaoa_cutoff must be at least 1, got {self.rqaoa_cutoff}")
        if self.metric not in PARTITION_METRICS:
            raise ArgumentError(f"unknown partition metric '{self.metric}'")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class Trial:
    """
    Один прогон оптимизатора.

    Attributes:
        params: Найденные углы
        energy: ⟨H_C⟩ конечного состояния
        avg_quality: Среднее качество по вероятностям измерения
        evals: Число вычислений целевой функции
        quantum_time_est: Оценка времени на устройстве, с
        classical_time: Время оптимизатора без симуляции, с
        initial_energy: ⟨H_C⟩ в начальной точке
    """
    params: QaoaParams
    energy: float
    avg_quality: float
    evals: int
    quantum_time_est: float
    classical_time: float
    initial_energy: float = 0.0
    state: Optional[DensityMatrix] = field(default=None, repr=False)
    scheduled: Optional[ScheduledCircuit] = field(default=None, repr=False)


@dataclass
class RunResult:
    """
    Результат варианта на одном экземпляре (средние по повторам).

    Attributes:
        variant: Вариант
        params: Углы лучшего по энергии прогона
        avg_quality: Среднее качество
        energy: Средняя ⟨H_C⟩
        optimizer_evals: Среднее число вычислений на прогон
        quantum_time_est: Средняя оценка квантового времени, с
        classical_time: Среднее классическое время, с
        repeats: Число прогонов
        trials: Прогоны
        assignment: Итоговое назначение (rqaoa)
        assignment_quality: Качество итогового назначения (rqaoa)
    """
    variant: str
    params: Optional[QaoaParams]
    avg_quality: float
    energy: float
    optimizer_evals: float
    quantum_time_est: float
    classical_time: float
    repeats: int
    trials: List[Any] = field(default_factory=list, repr=False)
    assignment: Optional[SpinAssignment] = None
    assignment_quality: Optional[float] = None

    @staticmethod
    def aggregate(variant: str, trials: List[Trial]) -> 'RunResult':
        best = min(trials, key=lambda t: t.energy)
        return RunResult(
            variant=variant,
            params=best.params,
            avg_quality=float(np.mean([t.avg_quality for t in trials])),
            energy=float(np.mean([t.energy for t in trials])),
            optimizer_evals=float(np.mean([t.evals for t in trials])),
            quantum_time_est=float(np.mean([t.quantum_time_est for t in trials])),
            classical_time=float(np.mean([t.classical_time for t in trials])),
            repeats=len(trials),
            trials=trials,
        )

    def __str__(self) -> str:
        return (f"RunResult({self.variant}, quality={self.avg_quality:.4f}, energy={self.energy:.4f}, "
                f"evals={self.optimizer_evals:g}, t_q={self.quantum_time_est:.3g}s, "
                f"t_c={self.classical_time:.3g}s)")


def is_noiseless(noise: Optional[NoiseParams]) -> bool:
    return noise is None or (noise.d_depol == 0.0 and noise.d_thermal == 0.0)


class QaoaObjective:
    """
    Целевая функция θ -> ⟨H_C⟩ для фиксированной модели и шума.

    Учитывает время, проведённое в симуляторе, чтобы его можно было
    вычесть из классического времени.
    """

    def __init__(
        self,
        model: IsingModel,
        layers: int,
        noise: Union[NoiseParams, GateNoiseModel],
        variant: str = 'standard',
        warm_thetas: Optional[np.ndarray] = None
    ):
        self.model = model
        self.layers = layers
        self.variant = variant
        self.warm_thetas = warm_thetas
        self.noise_model = noise if isinstance(noise, GateNoiseModel) else GateNoiseModel.from_params(noise)
        self.params = self.noise_model.params
        self.noiseless = is_noiseless(self.params)
        self.sim_seconds = 0.0
        self.calls = 0

    def circuit(self, params: QaoaParams) -> Circuit:
        return build_qaoa_circuit(self.model, self.layers, params.betas, params.gammas,
                                  self.variant, self.warm_thetas)

    def scheduled(self, params: QaoaParams) -> ScheduledCircuit:
        """Расписание нативной схемы для данных углов."""
        return schedule(transpile(self.circuit(params)), self.params.durations())

    def state(self, params: QaoaParams) -> DensityMatrix:
        """Конечная матрица плотности."""
        start = time.perf_counter()
        try:
            if self.noiseless:
                return simulate(self.circuit(params))
            return simulate(insert_noise(self.scheduled(params), self.noise_model))
        finally:
            self.sim_seconds += time.perf_counter() - start

    def __call__(self, x: np.ndarray) -> float:
        self.calls += 1
        return expectation_ising(self.state(QaoaParams.from_vector(x, self.layers)), self.model)


def optimize_model(
    model: IsingModel,
    layers: int,
    noise: Union[NoiseParams, GateNoiseModel],
    rng: np.random.Generator,
    variant: str = 'standard',
    warm_thetas: Optional[np.ndarray] = None,
    tolerance: float = DEFAULT_TOLERANCE,
    max_evals: int = DEFAULT_MAX_EVALS,
    shots: int = 1000
) -> Trial:
    """
    Один прогон вариационного цикла на модели Изинга.

    Returns:
        Trial без качества (avg_quality = 0); качество считает вызывающий,
        знающий исходную задачу
    """
    objective = QaoaObjective(model, layers, noise, variant, warm_thetas)
    x0 = QaoaParams.random(layers, rng)
    start = time.perf_counter()
    outcome = minimize(objective, x0.vector(), tolerance=tolerance, max_evals=max_evals)
    params = QaoaParams.from_vector(outcome.x, layers)
    state = objective.state(params)
    elapsed = time.perf_counter() - start
    scheduled = objective.scheduled(params)
    energy = expectation_ising(state, model)
    logger.debug("optimized %s p=%d: %s after %d evals", variant, layers, params, outcome.evals)
    return Trial(
        params=params,
        energy=energy,
        avg_quality=0.0,
        evals=outcome.evals,
        quantum_time_est=estimate_quantum_time(scheduled, objective.params, outcome.evals, shots),
        classical_time=max(elapsed - objective.sim_seconds, 0.0),
        initial_energy=outcome.f0,
        state=state,
        scheduled=scheduled,
    )


def run_variational(
    inst: ProblemInstance,
    cfg: VariantConfig,
    noise: NoiseParams,
    rng: Union[np.random.Generator, int, None] = None
) -> RunResult:
    """
    Вариант QAOA (standard, ws-init, wsqaoa) на экземпляре задачи.

    Args:
        inst: Экземпляр
        cfg: Настройки варианта (variant ≠ rqaoa)
        noise: Параметры шума с масштабами
        rng: Генератор или зерно начальных точек

    Returns:
        RunResult со средними по cfg.repeats прогонам
    """
    if cfg.variant == 'rqaoa':
        raise ArgumentError("use run_rqaoa for the recursive variant")
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    model = encode(inst)
    noise_model = GateNoiseModel.from_params(noise)

    warm_thetas = None
    warm_seconds = 0.0
    if cfg.variant in WARM_VARIANTS:
        start = time.perf_counter()
        warm_thetas = ws_thetas(warmstart(inst))
        warm_seconds = time.perf_counter() - start

    trials = []
    for _ in range(cfg.repeats):
        trial = optimize_model(model, cfg.layers, noise_model, rng, cfg.variant, warm_thetas,
                               cfg.tolerance, cfg.max_evals, cfg.shots)
        trial.avg_quality = average_quality(inst, measurement_probabilities(trial.state), cfg.metric)
        trial.classical_time += warm_seconds
        # состояния не нужны после подсчёта качества
        trial.state = None
        trials.append(trial)
    result = RunResult.aggregate(cfg.variant, trials)
    logger.debug("%s on %s: %s", cfg.variant, inst, result)
    return result
