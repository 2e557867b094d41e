"""
Вставка каналов шума в расписанную схему.

    SX  -> релаксация(35 нс · d_TR), затем деполяризация
    CX  -> релаксация на каждом кубите, затем двухкубитная деполяризация
    RZ  -> ничего (виртуальный гейт)
    простой длины t -> релаксация(t · d_TR)

Позиция канала - число гейтов, применённых до него: каналы гейта k
стоят на позиции k+1, простой перед гейтом k - на позиции k.
На одной позиции каналы гейтов идут раньше простоев.
"""

from typing import List, Tuple, Union, Iterator
from dataclasses import dataclass

from ..densim.channel import KrausChannel
from ..noise.params import NoiseParams
from ..noise.channels import GateNoiseModel
from .gates import Gate
from .schedule import ScheduledCircuit


@dataclass(frozen=True)
class NoisyChannel:
    """
    Вставленный канал.

    Attributes:
        channel: Канал Крауса
        targets: Кубиты
        position: Число гейтов схемы, применённых до канала
        source: 'gate' или 'idle'
    """
    channel: KrausChannel
    targets: Tuple[int, ...]
    position: int
    source: str

    @property
    def is_thermal(self) -> bool:
        return self.channel.name.startswith('thermal')


@dataclass
class NoisyCircuit:
    """
    Расписанная схема с каналами шума.

    Attributes:
        base: Расписанная нативная схема
        channels: Каналы, упорядоченные по позиции
    """
    base: ScheduledCircuit
    channels: List[NoisyChannel]

    @property
    def n(self) -> int:
        return self.base.n

    def thermal_count(self) -> int:
        return sum(1 for ch in self.channels if ch.is_thermal)

    def depolarizing_count(self) -> int:
        return sum(1 for ch in self.channels if not ch.is_thermal)

    def operations(self) -> Iterator[Union[Gate, NoisyChannel]]:
        """Гейты и каналы в порядке применения."""
        gates = self.base.circuit.gates
        cursor = 0
        for position in range(len(gates) + 1):
            while cursor < len(self.channels) and self.channels[cursor].position == position:
                yield self.channels[cursor]
                cursor += 1
            if position < len(gates):
                yield gates[position]

    def __str__(self) -> str:
        return (f"NoisyCircuit(gates={len(self.base.circuit)}, thermal={self.thermal_count()}, "
                f"depolarizing={self.depolarizing_count()})")


def insert_noise(scheduled: ScheduledCircuit, noise: Union[NoiseParams, GateNoiseModel]) -> NoisyCircuit:
    """
    Вставить каналы шума после гейтов и в периоды простоя.

    Args:
        scheduled: Расписание нативной схемы
        noise: Параметры шума или уже подобранная модель гейтов

    Returns:
        NoisyCircuit
    """
    model = noise if isinstance(noise, GateNoiseModel) else GateNoiseModel.from_params(noise)
    keyed = []
    for index, gate in enumerate(scheduled.circuit.gates):
        for channel, targets in model.gate_channels(gate.kind, gate.targets):
            keyed.append(((index + 1, 0), NoisyChannel(channel, targets, index + 1, 'gate')))
    for seg in scheduled.idle_segments():
        channel = model.thermal(seg.duration)
        keyed.append(((seg.before_gate, 1), NoisyChannel(channel, (seg.qubit,), seg.before_gate, 'idle')))
    keyed.sort(key=lambda item: item[0])
    return NoisyCircuit(scheduled, [ch for _, ch in keyed])
