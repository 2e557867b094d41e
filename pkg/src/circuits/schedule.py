"""
Планирование нативной схемы во времени и оценка квантового времени.

ASAP-планирование: гейт начинается, как только освободились все его
кубиты; порядок гейтов на каждом кубите сохраняется. Промежутки
между гейтами - периоды простоя (idle), подверженные только тепловой
релаксации. Кубиты, которых не касается ни один гейт, имеют пустую
временную шкалу.
"""

from typing import List, Dict, Optional, Sequence, Tuple
from dataclasses import dataclass, field
import csv
import io

from ..core.errors import ArgumentError
from ..noise.params import NoiseParams
from .gates import Circuit


IDLE_EPS = 1e-9


@dataclass(frozen=True)
class Segment:
    """
    Отрезок временной шкалы кубита.

    Attributes:
        qubit: Кубит
        start: Начало, нс
        duration: Длительность, нс
        label: Вид гейта или 'idle'
        gate_index: Номер гейта в схеме (для гейтов)
        before_gate: Номер гейта, перед которым лежит простой
            (len(gates) для простоя в конце схемы)
    """
    qubit: int
    start: float
    duration: float
    label: str
    gate_index: Optional[int] = None
    before_gate: Optional[int] = None

    @property
    def is_idle(self) -> bool:
        return self.label == 'idle'

    @property
    def end(self) -> float:
        return self.start + self.duration


@dataclass
class ScheduledCircuit:
    """
    Схема с расписанием.

    Attributes:
        circuit: Нативная схема
        timelines: Отрезки по кубитам, timelines[q] упорядочены по времени
        total_duration: Полная длительность, нс
        gate_starts: Время начала каждого гейта, нс
    """
    circuit: Circuit
    timelines: List[List[Segment]]
    total_duration: float
    gate_starts: List[float] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.circuit.n

    def idle_segments(self) -> List[Segment]:
        """Простои, упорядоченные по (before_gate, qubit)."""
        idles = [s for line in self.timelines for s in line if s.is_idle]
        return sorted(idles, key=lambda s: (s.before_gate, s.qubit))

    def to_csv(self) -> str:
        """Расписание в CSV: qubit, start_ns, duration_ns, label."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['qubit', 'start_ns', 'duration_ns', 'label'])
        for line in self.timelines:
            for seg in line:
                writer.writerow([seg.qubit, f"{seg.start:.12g}", f"{seg.duration:.12g}", seg.label])
        return buffer.getvalue()

    def __str__(self) -> str:
        return (f"ScheduledCircuit(n={self.n}, gates={len(self.circuit)}, "
                f"duration={self.total_duration:g}ns, idles={len(self.idle_segments())})")


def schedule(circuit: Circuit, durations: Dict[str, float]) -> ScheduledCircuit:
    """
    Расписать схему ASAP.

    Args:
        circuit: Нативная схема
        durations: Длительность по виду гейта, нс

    Returns:
        ScheduledCircuit
    """
    clocks = [0.0] * circuit.n
    touched = [False] * circuit.n
    timelines: List[List[Segment]] = [[] for _ in range(circuit.n)]
    starts: List[float] = []

    for index, gate in enumerate(circuit.gates):
        if gate.kind not in durations:
            raise ArgumentError(f"no duration for gate kind '{gate.kind}'")
        duration = float(durations[gate.kind])
        start = max(clocks[q] for q in gate.targets)
        for q in gate.targets:
            if start - clocks[q] > IDLE_EPS:
                timelines[q].append(Segment(q, clocks[q], start - clocks[q], 'idle', before_gate=index))
            timelines[q].append(Segment(q, start, duration, gate.kind, gate_index=index))
            clocks[q] = start + duration
            touched[q] = True
        starts.append(start)

    total = max((clocks[q] for q in range(circuit.n) if touched[q]), default=0.0)
    for q in range(circuit.n):
        if touched[q] and total - clocks[q] > IDLE_EPS:
            timelines[q].append(Segment(q, clocks[q], total - clocks[q], 'idle', before_gate=len(circuit)))
    return ScheduledCircuit(circuit, timelines, total, starts)


def estimate_quantum_time(
    scheduled: ScheduledCircuit,
    params: NoiseParams,
    optimizer_evals: int,
    shots: int = 1000
) -> float:
    """
    Оценка времени на квантовом устройстве, с.

    (длительность схемы + измерение) × shots × число вычислений целевой функции
    """
    per_shot_ns = scheduled.total_duration + params.measure_duration
    return per_shot_ns * 1e-9 * shots * optimizer_evals


def estimate_recursive_time(
    steps: Sequence[Tuple[ScheduledCircuit, int]],
    params: NoiseParams,
    shots: int = 1000,
    samples_per_step: int = 10
) -> float:
    """
    Оценка времени рекурсивного прогона, с.

    Сумма по шагам рекурсии: оптимизация внутренней схемы плюс
    samples_per_step измерений финального состояния.

    Args:
        steps: Пары (расписание внутренней схемы, число вычислений) по шагам
    """
    total = 0.0
    for scheduled, evals in steps:
        total += estimate_quantum_time(scheduled, params, evals, shots)
        total += (scheduled.total_duration + params.measure_duration) * 1e-9 * samples_per_step
    return total
