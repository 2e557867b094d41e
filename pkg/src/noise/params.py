"""
Параметры шумовой модели.

Базовые значения - трансмонная архитектура: общие для всех кубитов
T1, T2, ошибки и длительности нативных гейтов {RZ, SX, CX}.
Масштабы d_depol и d_thermal задают силу каждого источника шума
отдельно; 1 - базовый уровень, 0 - источник выключен.
"""

from typing import Dict, Any
from dataclasses import dataclass, field, replace

from ..core.errors import ArgumentError, NoiseModelError


NATIVE_KINDS = ('RZ', 'SX', 'CX')


@dataclass(frozen=True)
class GateNoise:
    """
    Характеристики одного нативного гейта.

    Attributes:
        error: Ошибка гейта, 1 − средняя точность
        duration: Длительность в нс
    """
    error: float
    duration: float

    def to_dict(self) -> Dict[str, float]:
        return {'error': self.error, 'duration': self.duration}


@dataclass(frozen=True)
class NoiseParams:
    """
    Полный набор параметров шума.

    Attributes:
        t1: Время продольной релаксации, нс
        t2: Время поперечной релаксации, нс
        gates: Характеристики гейтов по виду ('RZ', 'SX', 'CX')
        measure_duration: Длительность измерения, нс
        d_depol: Масштаб деполяризующих каналов
        d_thermal: Масштаб времени тепловой релаксации
    """
    t1: float
    t2: float
    gates: Dict[str, GateNoise] = field(default_factory=dict)
    measure_duration: float = 0.0
    d_depol: float = 1.0
    d_thermal: float = 1.0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """
        Проверить инварианты параметров.

        Raises:
            ArgumentError: отрицательные величины, ошибка гейта вне [0, 1)
            NoiseModelError: T2 > 2·T1 (канал релаксации не CP)
        """
        if self.t1 <= 0 or self.t2 <= 0:
            raise ArgumentError(f"relaxation times must be positive (t1={self.t1}, t2={self.t2})")
        if self.t2 > 2 * self.t1:
            raise NoiseModelError(f"t2={self.t2} exceeds 2*t1={2 * self.t1}")
        if self.measure_duration < 0:
            raise ArgumentError(f"negative measure duration {self.measure_duration}")
        if self.d_depol < 0 or self.d_thermal < 0:
            raise ArgumentError(f"noise scales must be non-negative ({self.d_depol}, {self.d_thermal})")
        missing = [k for k in NATIVE_KINDS if k not in self.gates]
        if missing:
            raise ArgumentError(f"missing gate parameters for {missing}")
        for kind, gate in self.gates.items():
            if not 0.0 <= gate.error < 1.0:
                raise ArgumentError(f"{kind} gate error {gate.error} outside [0, 1)")
            if gate.duration < 0:
                raise ArgumentError(f"{kind} gate duration {gate.duration} is negative")

    def gate(self, kind: str) -> GateNoise:
        try:
            return self.gates[kind]
        except KeyError:
            raise ArgumentError(f"no noise parameters for gate kind '{kind}'") from None

    def durations(self) -> Dict[str, float]:
        """Длительности гейтов по виду - вход планировщика."""
        return {kind: gate.duration for kind, gate in self.gates.items()}

    def to_dict(self) -> Dict[str, Any]:
        return {
            't1': self.t1,
            't2': self.t2,
            'gates': {kind: gate.to_dict() for kind, gate in self.gates.items()},
            'measure_duration': self.measure_duration,
            'd_depol': self.d_depol,
            'd_thermal': self.d_thermal,
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'NoiseParams':
        return NoiseParams(
            t1=float(data['t1']),
            t2=float(data['t2']),
            gates={
                kind: GateNoise(float(g['error']), float(g['duration']))
                for kind, g in data['gates'].items()
            },
            measure_duration=float(data.get('measure_duration', 0.0)),
            d_depol=float(data.get('d_depol', 1.0)),
            d_thermal=float(data.get('d_thermal', 1.0)),
        )

    def __str__(self) -> str:
        gates = ', '.join(f"{k}: {g.error:g}/{g.duration:g}ns" for k, g in self.gates.items())
        return (f"NoiseParams(T1={self.t1:g}ns, T2={self.t2:g}ns, {gates}, "
                f"d_D={self.d_depol:g}, d_TR={self.d_thermal:g})")


def baseline_params() -> NoiseParams:
    """Базовые параметры трансмонного процессора."""
    return NoiseParams(
        t1=100_000.0,
        t2=150_000.0,
        gates={
            'RZ': GateNoise(error=0.0, duration=0.0),
            'SX': GateNoise(error=0.0003, duration=35.0),
            'CX': GateNoise(error=0.01, duration=400.0),
        },
        measure_duration=4090.0,
        d_depol=1.0,
        d_thermal=1.0,
    )


def scale_params(base: NoiseParams, d_depol: float, d_thermal: float) -> NoiseParams:
    """
    Задать масштабы шума.

    Сами вероятности и времена не пересчитываются: масштабы применяются
    при построении каналов, после подбора p по немасштабированным данным.

    Raises:
        ArgumentError: отрицательный масштаб
    """
    if d_depol < 0 or d_thermal < 0:
        raise ArgumentError(f"noise scales must be non-negative ({d_depol}, {d_thermal})")
    return replace(base, d_depol=float(d_depol), d_thermal=float(d_thermal))
