"""
Исполнение схем на плотностном симуляторе и унитарный оракул.
"""

from typing import Union, Optional

import numpy as np

from ..core.errors import CapacityError
from ..densim.state import DensityMatrix, Preparation, init_state
from ..densim.ops import apply_left, apply_unitary, apply_channel
from .gates import Gate, Circuit, gate_matrix
from .noisy import NoisyCircuit


MAX_UNITARY_QUBITS = 6


def unitary_of(circuit: Circuit) -> np.ndarray:
    """
    Полная унитарная матрица схемы (произведение гейтов в порядке схемы).

    Raises:
        CapacityError: n > 6
    """
    if circuit.n > MAX_UNITARY_QUBITS:
        raise CapacityError(f"unitary_of supports at most {MAX_UNITARY_QUBITS} qubits, got {circuit.n}")
    u = np.eye(1 << circuit.n, dtype=complex)
    for gate in circuit.gates:
        u = apply_left(u, gate_matrix(gate), gate.targets, circuit.n)
    return u


def equal_up_to_phase(a: np.ndarray, b: np.ndarray, atol: float = 1e-9) -> bool:
    """Совпадают ли матрицы с точностью до глобальной фазы."""
    if a.shape != b.shape:
        return False
    idx = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    if abs(b[idx]) < atol:
        return bool(np.allclose(a, b, atol=atol))
    phase = a[idx] / b[idx]
    if abs(abs(phase) - 1.0) > atol:
        return False
    return bool(np.max(np.abs(a - phase * b)) <= atol)


def simulate(
    circuit: Union[Circuit, NoisyCircuit],
    prep: Optional[Preparation] = None
) -> DensityMatrix:
    """
    Исполнить схему, начиная с подготовленного состояния.

    Args:
        circuit: Логическая/нативная схема или схема с шумом
        prep: Начальное состояние, по умолчанию |0⟩ⁿ
            (подготовка QAOA уже входит в схему)

    Returns:
        Итоговая матрица плотности
    """
    rho = init_state(circuit.n, prep)
    if isinstance(circuit, NoisyCircuit):
        for op in circuit.operations():
            if isinstance(op, Gate):
                rho = apply_unitary(rho, gate_matrix(op), op.targets)
            else:
                rho = apply_channel(rho, op.channel, op.targets)
        return rho
    for gate in circuit.gates:
        rho = apply_unitary(rho, gate_matrix(gate), gate.targets)
    return rho
