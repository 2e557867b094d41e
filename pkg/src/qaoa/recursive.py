"""
Рекурсивный QAOA: последовательное исключение переменных.

Шаг рекурсии:
1. QAOA (стандартный вариант) на текущей модели
2. rqaoa_samples измерений конечного состояния
3. выбор слагаемого t с наибольшим |E[t]|
4. подстановка s_i = σ (fix) или s_i = σ·s_j (merge), σ = sign(E[t])

Когда переменных не больше rqaoa_cutoff, остаток решается перебором,
и все подстановки восстанавливаются в обратном порядке.
"""

from typing import Dict, List, Sequence, Tuple, Optional, Union
from dataclasses import dataclass, field
import time
import logging

import numpy as np

from ..core.types import IsingModel, SpinAssignment, BasisSample
from ..core.errors import ArgumentError, InternalError
from ..densim.ops import sample
from ..noise.params import NoiseParams
from ..noise.channels import GateNoiseModel
from ..circuits.schedule import estimate_recursive_time
from ..problems.instances import ProblemInstance
from ..problems.encodings import encode
from ..problems.oracle import quality
from .variational import VariantConfig, RunResult, Trial, optimize_model, run_variational


logger = logging.getLogger(__name__)

Term = Tuple[int, ...]


@dataclass(frozen=True)
class EliminationRecord:
    """
    Подстановка, исключившая переменную.

    Индексы относятся к модели в момент исключения.

    Attributes:
        kind: 'fix' (s_i = σ) или 'merge' (s_i = σ·s_j)
        i: Исключаемая переменная
        sigma: Знак ±1
        j: Опорная переменная для merge
    """
    kind: str
    i: int
    sigma: int
    j: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ('fix', 'merge'):
            raise ArgumentError(f"unknown elimination kind '{self.kind}'")
        if self.sigma not in (-1, 1):
            raise ArgumentError(f"sigma must be ±1, got {self.sigma}")
        if (self.kind == 'merge') != (self.j is not None):
            raise ArgumentError("merge needs a partner variable, fix must not have one")
        if self.j is not None and self.j == self.i:
            raise ArgumentError(f"cannot merge variable {self.i} with itself")

    @staticmethod
    def fix(i: int, sigma: int) -> 'EliminationRecord':
        return EliminationRecord('fix', i, sigma)

    @staticmethod
    def merge(i: int, j: int, sigma: int) -> 'EliminationRecord':
        return EliminationRecord('merge', i, sigma, j)

    def __str__(self) -> str:
        sign = '+' if self.sigma == 1 else '-'
        if self.kind == 'fix':
            return f"s{self.i} = {sign}1"
        return f"s{self.i} = {sign}s{self.j}"


def expected_term_values(samples: Sequence[BasisSample], model: IsingModel) -> Dict[Term, float]:
    """
    Выборочные средние E[s_i] и E[s_i s_j] по слагаемым модели.

    Args:
        samples: Исходы измерения с кратностями
        model: Модель, задающая множество слагаемых

    Returns:
        {слагаемое: среднее}
    """
    if not samples:
        raise ArgumentError("expected term values need at least one sample")
    spins = np.array([s.spins().spins for s in samples], dtype=float)
    weights = np.array([s.multiplicity for s in samples], dtype=float)
    if spins.shape[1] != model.n:
        raise ArgumentError(f"samples over {spins.shape[1]} qubits for model with n={model.n}")
    weights /= weights.sum()
    values = {}
    for term in model.terms():
        values[term] = float(weights @ np.prod(spins[:, list(term)], axis=1))
    return values


def select_term(values: Dict[Term, float]) -> Term:
    """
    Слагаемое с наибольшим |E[t]|.

    При равенстве - квадратичные раньше линейных, затем меньшие индексы.
    """
    if not values:
        raise ArgumentError("no terms to select from")
    return min(values, key=lambda t: (-round(abs(values[t]), 12), -len(t), t))


def record_for(term: Term, value: float) -> EliminationRecord:
    """Подстановка для выбранного слагаемого; sign(0) = +1."""
    sigma = -1 if value < 0 else 1
    if len(term) == 1:
        return EliminationRecord.fix(term[0], sigma)
    a, b = term
    return EliminationRecord.merge(b, a, sigma)


def eliminate(model: IsingModel, rec: EliminationRecord) -> IsingModel:
    """
    Подставить ограничение в модель и исключить переменную rec.i.

    Returns:
        Модель с n-1 переменными (индексы после i сдвигаются на 1)

    Raises:
        ArgumentError: ссылка на несуществующую переменную
    """
    n = model.n
    for v in (rec.i, rec.j):
        if v is not None and not 0 <= v < n:
            raise ArgumentError(f"variable {v} does not exist in model with n={n}")
    i, sigma = rec.i, rec.sigma
    h = model.h.copy()
    sym = model.j + model.j.T
    offset = model.offset

    if rec.kind == 'fix':
        h += sigma * sym[i]
        offset -= sigma * model.h[i]
    else:
        j = rec.j
        h[j] += sigma * model.h[i]
        offset -= sigma * sym[i, j]
        row = sigma * sym[i].copy()
        row[j] = 0.0
        row[i] = 0.0
        sym[j, :] += row
        sym[:, j] += row

    keep = [k for k in range(n) if k != i]
    reduced = sym[np.ix_(keep, keep)]
    return IsingModel(n=n - 1, h=h[keep], j=np.triu(reduced, k=1), offset=offset)


def back_substitute(records: Sequence[EliminationRecord], tail: SpinAssignment) -> SpinAssignment:
    """
    Восстановить назначение исходной задачи из решения остатка.

    Args:
        records: Подстановки в порядке исключения
        tail: Назначение переменных, оставшихся после всех подстановок

    Raises:
        InternalError: подстановка несовместима с размером модели
    """
    spins = list(tail.spins)
    for rec in reversed(records):
        size = len(spins) + 1
        if not 0 <= rec.i < size:
            raise InternalError(f"record {rec} refers to variable outside a model of size {size}")
        if rec.kind == 'fix':
            value = rec.sigma
        else:
            if not 0 <= rec.j < size:
                raise InternalError(f"record {rec} refers to variable outside a model of size {size}")
            partner = rec.j if rec.j < rec.i else rec.j - 1
            value = rec.sigma * spins[partner]
        spins.insert(rec.i, value)
    result = SpinAssignment(tuple(spins))
    if not constraints_satisfied(records, result):
        raise InternalError("back-substituted assignment violates a recorded constraint")
    return result


def constraints_satisfied(records: Sequence[EliminationRecord], s: SpinAssignment) -> bool:
    """Выполнены ли все подстановки на назначении исходной задачи."""
    spins = list(s.spins)
    for rec in records:
        if rec.i >= len(spins) or (rec.j is not None and rec.j >= len(spins)):
            return False
        expected = rec.sigma if rec.kind == 'fix' else rec.sigma * spins[rec.j]
        if spins[rec.i] != expected:
            return False
        del spins[rec.i]
    return True


def solve_exactly(model: IsingModel) -> SpinAssignment:
    """Минимум C перебором (наименьший номер среди минимумов)."""
    return SpinAssignment.from_index(int(np.argmin(model.energy_table())), model.n)


@dataclass
class RecursionTrace:
    """
    Один проход рекурсии.

    Attributes:
        records: Подстановки по шагам
        steps: Прогоны QAOA по шагам
        assignment: Итоговое назначение
        quality: Его качество
        energy: C(assignment) исходной модели
        quantum_time_est: Оценка квантового времени, с
        classical_time: Классическое время, с
    """
    records: List[EliminationRecord] = field(default_factory=list)
    steps: List[Trial] = field(default_factory=list)
    assignment: Optional[SpinAssignment] = None
    quality: float = 0.0
    energy: float = 0.0
    quantum_time_est: float = 0.0
    classical_time: float = 0.0

    @property
    def evals(self) -> int:
        return sum(t.evals for t in self.steps)


def recurse(
    inst: ProblemInstance,
    cfg: VariantConfig,
    noise_model: GateNoiseModel,
    rng: np.random.Generator
) -> RecursionTrace:
    """Один проход рекурсии до остатка из rqaoa_cutoff переменных."""
    original = encode(inst)
    model = original
    trace = RecursionTrace()
    classical = 0.0

    while model.n > cfg.rqaoa_cutoff and model.terms():
        trial = optimize_model(model, cfg.layers, noise_model, rng, 'standard', None,
                               cfg.tolerance, cfg.max_evals, cfg.shots)
        samples = sample(trial.state, cfg.rqaoa_samples, rng)
        trial.state = None
        start = time.perf_counter()
        values = expected_term_values(samples, model)
        term = select_term(values)
        rec = record_for(term, values[term])
        model = eliminate(model, rec)
        classical += time.perf_counter() - start + trial.classical_time
        logger.debug("eliminated %s (E=%+.2f), %d variables left", rec, values[term], model.n)
        trace.records.append(rec)
        trace.steps.append(trial)

    start = time.perf_counter()
    trace.assignment = back_substitute(trace.records, solve_exactly(model))
    trace.classical_time = classical + time.perf_counter() - start
    trace.quality = quality(inst, trace.assignment, cfg.metric)
    trace.energy = original.energy(trace.assignment.spins)
    trace.quantum_time_est = estimate_recursive_time(
        [(t.scheduled, t.evals) for t in trace.steps],
        noise_model.params, cfg.shots, cfg.rqaoa_samples,
    )
    return trace


def run_rqaoa(
    inst: ProblemInstance,
    cfg: VariantConfig,
    noise: NoiseParams,
    rng: Union[np.random.Generator, int, None] = None
) -> RunResult:
    """
    Рекурсивный QAOA на экземпляре задачи.

    Каждый из cfg.repeats проходов даёт одно назначение; качество
    результата - среднее качество этих назначений.

    Returns:
        RunResult с назначением прохода с наименьшей энергией
    """
    if cfg.variant != 'rqaoa':
        raise ArgumentError(f"run_rqaoa expects the 'rqaoa' variant, got '{cfg.variant}'")
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    noise_model = GateNoiseModel.from_params(noise)
    traces = [recurse(inst, cfg, noise_model, rng) for _ in range(cfg.repeats)]
    best = min(traces, key=lambda t: t.energy)
    return RunResult(
        variant='rqaoa',
        params=best.steps[0].params if best.steps else None,
        avg_quality=float(np.mean([t.quality for t in traces])),
        energy=float(np.mean([t.energy for t in traces])),
        optimizer_evals=float(np.mean([t.evals for t in traces])),
        quantum_time_est=float(np.mean([t.quantum_time_est for t in traces])),
        classical_time=float(np.mean([t.classical_time for t in traces])),
        repeats=len(traces),
        trials=traces,
        assignment=best.assignment,
        assignment_quality=best.quality,
    )


def run_variant(
    inst: ProblemInstance,
    cfg: VariantConfig,
    noise: NoiseParams,
    rng: Union[np.random.Generator, int, None] = None
) -> RunResult:
    """Запуск любого из четырёх вариантов."""
    if cfg.variant == 'rqaoa':
        return run_rqaoa(inst, cfg, noise, rng)
    return run_variational(inst, cfg, noise, rng)
