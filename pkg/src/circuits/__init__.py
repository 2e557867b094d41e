"""Инициализация модуля circuits."""

from .gates import (
    Gate,
    Circuit,
    GATE_SPECS,
    NATIVE_GATES,
    gate_matrix,
    parse_gate,
    parse_circuit,
    dump_circuit,
)
from .coloring import misra_gries_coloring, color_classes, is_proper_coloring
from .builder import build_qaoa_circuit, VARIANTS
from .transpiler import transpile, euler_zyz, decompose_single_qubit
from .schedule import (
    Segment,
    ScheduledCircuit,
    schedule,
    estimate_quantum_time,
    estimate_recursive_time,
)
from .noisy import NoisyChannel, NoisyCircuit, insert_noise
from .simulate import unitary_of, equal_up_to_phase, simulate

__all__ = [
    'Gate',
    'Circuit',
    'GATE_SPECS',
    'NATIVE_GATES',
    'gate_matrix',
    'parse_gate',
    'parse_circuit',
    'dump_circuit',
    'misra_gries_coloring',
    'color_classes',
    'is_proper_coloring',
    'build_qaoa_circuit',
    'VARIANTS',
    'transpile',
    'euler_zyz',
    'decompose_single_qubit',
    'Segment',
    'ScheduledCircuit',
    'schedule',
    'estimate_quantum_time',
    'estimate_recursive_time',
    'NoisyChannel',
    'NoisyCircuit',
    'insert_noise',
    'unitary_of',
    'equal_up_to_phase',
    'simulate',
]
