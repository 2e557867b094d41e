"""
Построение логических схем QAOA.

Схема включает подготовку начального состояния (H для стандартного
варианта, RY(θ_i) для вариантов с тёплым стартом), затем p слоёв:

    разделитель e^{−iγH_C}: RZ(−2γh_i) по кубитам, затем RZZ(−2γJ_ij)
        по классам раскраски рёбер Мисры-Гриса;
    смеситель: RX(2β) на каждом кубите, либо для wsqaoa
        RY(−θ_i), RZ(−2β), RY(θ_i) (в порядке применения).
"""

from typing import Optional, Sequence

import numpy as np

from ..core.types import IsingModel
from ..core.errors import ArgumentError
from .gates import Circuit
from .coloring import color_classes


VARIANTS = ('standard', 'ws-init', 'wsqaoa')


def append_separator(circuit: Circuit, model: IsingModel, gamma: float) -> None:
    """Добавить e^{−iγH_C} для модели Изинга."""
    for i in np.flatnonzero(model.h):
        circuit.add('RZ', [int(i)], -2.0 * gamma * model.h[i])
    for color_class in color_classes(model.edges(), model.n):
        for a, b in color_class:
            circuit.add('RZZ', [a, b], -2.0 * gamma * model.j[a, b])


def append_mixer(circuit: Circuit, beta: float, warm_thetas: Optional[Sequence[float]] = None) -> None:
    """Стандартный смеситель RX(2β) или смеситель тёплого старта."""
    for q in range(circuit.n):
        if warm_thetas is None:
            circuit.add('RX', [q], 2.0 * beta)
        else:
            theta = float(warm_thetas[q])
            circuit.add('RY', [q], -theta)
            circuit.add('RZ', [q], -2.0 * beta)
            circuit.add('RY', [q], theta)


def build_qaoa_circuit(
    model: IsingModel,
    layers: int,
    betas: Sequence[float],
    gammas: Sequence[float],
    variant: str = 'standard',
    warm_thetas: Optional[Sequence[float]] = None
) -> Circuit:
    """
    Построить логическую схему QAOA.

    Args:
        model: Целевая модель Изинга
        layers: Число слоёв p ≥ 1
        betas: Углы смесителя, длина p
        gammas: Углы разделителя, длина p
        variant: 'standard', 'ws-init' или 'wsqaoa'
        warm_thetas: Углы тёплого старта, обязательны для ws-init и wsqaoa

    Returns:
        Circuit с подготовкой состояния и p слоями
    """
    if variant not in VARIANTS:
        raise ArgumentError(f"unknown variant '{variant}', expected one of {VARIANTS}")
    if layers < 1:
        raise ArgumentError(f"layer count must be positive, got {layers}")
    if len(betas) != layers or len(gammas) != layers:
        raise ArgumentError(f"expected {layers} betas and gammas, got {len(betas)} and {len(gammas)}")
    warm = variant != 'standard'
    if warm:
        if warm_thetas is None:
            raise ArgumentError(f"variant '{variant}' requires warm-start angles")
        if len(warm_thetas) != model.n:
            raise ArgumentError(f"expected {model.n} warm-start angles, got {len(warm_thetas)}")
    elif warm_thetas is not None:
        raise ArgumentError("warm-start angles given for the standard variant")

    circuit = Circuit(model.n)
    for q in range(model.n):
        if warm:
            circuit.add('RY', [q], float(warm_thetas[q]))
        else:
            circuit.add('H', [q])

    mixer_thetas = warm_thetas if variant == 'wsqaoa' else None
    for beta, gamma in zip(betas, gammas):
        append_separator(circuit, model, float(gamma))
        append_mixer(circuit, float(beta), mixer_thetas)
    return circuit
