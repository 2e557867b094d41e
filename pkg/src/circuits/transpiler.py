"""
Транспиляция в нативный набор {RZ, SX, CX}.

Правила:
    RZ, SX, CX      - без изменений
    RZZ(θ) на (a,b) - CX(a,b), RZ(θ) на b, CX(a,b)
    прочие 1-кубитные - эйлерово разложение
        U ∝ RZ(φ)·RY(θ)·RZ(λ) = RZ(φ+π)·SX·RZ(θ+π)·SX·RZ(λ)
        (при θ ≈ 0 остаётся один RZ, при θ ≈ π/2 - один SX)

После подстановки соседние RZ на одном кубите сливаются, повороты
на угол, кратный 2π, удаляются. Все равенства - с точностью до
глобальной фазы.
"""

from typing import List, Tuple, Dict
import math

import numpy as np

from ..core.errors import TranspileError
from .gates import Gate, Circuit, GATE_SPECS, gate_matrix


ANGLE_ATOL = 1e-9


def euler_zyz(u: np.ndarray) -> Tuple[float, float, float]:
    """
    Углы (θ, φ, λ) с U ∝ RZ(φ)·RY(θ)·RZ(λ).

    Args:
        u: Унитарная матрица 2×2

    Returns:
        (theta, phi, lam), θ ∈ [0, π]
    """
    v = u / np.sqrt(np.linalg.det(u) + 0j)
    theta = 2.0 * math.atan2(abs(v[1, 0]), abs(v[0, 0]))
    plus = 2.0 * float(np.angle(v[1, 1]))
    minus = 2.0 * float(np.angle(v[1, 0]))
    phi = (plus + minus) / 2.0
    lam = (plus - minus) / 2.0
    return theta, phi, lam


def _is_zero_angle(angle: float) -> bool:
    return abs(math.remainder(angle, 2.0 * math.pi)) <= ANGLE_ATOL


def decompose_single_qubit(u: np.ndarray, qubit: int) -> List[Gate]:
    """Нативная последовательность для 2×2 унитарной матрицы (порядок применения)."""
    theta, phi, lam = euler_zyz(u)
    if abs(theta) <= ANGLE_ATOL:
        return [Gate('RZ', (qubit,), phi + lam)]
    if abs(theta - math.pi / 2) <= ANGLE_ATOL:
        return [
            Gate('RZ', (qubit,), lam - math.pi / 2),
            Gate('SX', (qubit,)),
            Gate('RZ', (qubit,), phi + math.pi / 2),
        ]
    return [
        Gate('RZ', (qubit,), lam),
        Gate('SX', (qubit,)),
        Gate('RZ', (qubit,), theta + math.pi),
        Gate('SX', (qubit,)),
        Gate('RZ', (qubit,), phi + math.pi),
    ]


def expand_gate(gate: Gate) -> List[Gate]:
    """
    Подставить нативные гейты вместо одного логического.

    Raises:
        TranspileError: вид гейта неизвестен
    """
    if gate.kind in ('RZ', 'SX', 'CX'):
        return [gate]
    if gate.kind == 'RZZ':
        a, b = gate.targets
        return [
            Gate('CX', (a, b)),
            Gate('RZ', (b,), gate.theta),
            Gate('CX', (a, b)),
        ]
    spec = GATE_SPECS.get(gate.kind)
    if spec is None or spec[0] != 1:
        raise TranspileError(f"cannot transpile gate kind '{gate.kind}'")
    return decompose_single_qubit(gate_matrix(gate), gate.targets[0])


def merge_rotations(gates: List[Gate], n: int) -> List[Gate]:
    """
    Слить соседние RZ на каждом кубите.

    Накопленный поворот выводится непосредственно перед следующим
    гейтом на этом кубите (или в конце схемы).
    """
    pending: Dict[int, float] = {}
    merged: List[Gate] = []

    def flush(q: int) -> None:
        angle = pending.pop(q, None)
        if angle is not None and not _is_zero_angle(angle):
            merged.append(Gate('RZ', (q,), math.remainder(angle, 2.0 * math.pi)))

    for gate in gates:
        if gate.kind == 'RZ':
            q = gate.targets[0]
            pending[q] = pending.get(q, 0.0) + gate.theta
            continue
        for q in gate.targets:
            flush(q)
        merged.append(gate)
    for q in range(n):
        flush(q)
    return merged


def transpile(circuit: Circuit) -> Circuit:
    """
    Перевести схему в нативный набор {RZ, SX, CX}.

    Returns:
        Новая схема, унитарно эквивалентная исходной с точностью до фазы
    """
    expanded: List[Gate] = []
    for gate in circuit.gates:
        expanded.extend(expand_gate(gate))
    return Circuit(circuit.n, merge_rotations(expanded, circuit.n))
