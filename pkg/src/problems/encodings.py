"""
Кодирование задач в модель Изинга C(s) = -Σ J_ij s_i s_j - Σ h_i s_i + offset.

Один кубит на вершину / число. Бит 1 (s = -1) означает "вершина
в разрезе по другую сторону" для maxcut, "число во втором множестве"
для partition и "вершина в покрытии" для vertexcover.
"""

import numpy as np

from ..core.types import IsingModel
from ..core.errors import ArgumentError
from .instances import ProblemInstance


# Штраф за непокрытое ребро и цена вершины; A > B гарантирует,
# что минимум C - допустимое покрытие.
COVER_PENALTY = 2.0
COVER_COST = 1.0


def encode_maxcut(inst: ProblemInstance) -> IsingModel:
    """C(s) = -cut(s): J_uv = -1/2 на ребро, offset = -|E|/2."""
    quadratic = {e: -0.5 for e in inst.edges}
    return IsingModel.from_terms(inst.n, quadratic=quadratic, offset=-len(inst.edges) / 2)


def encode_partition(inst: ProblemInstance) -> IsingModel:
    """C(s) = (Σ a_i s_i)²: J_ij = -2 a_i a_j, offset = Σ a_i²."""
    a = np.asarray(inst.weights, dtype=float)
    j = np.triu(-2.0 * np.outer(a, a), k=1)
    return IsingModel(n=inst.n, h=np.zeros(inst.n), j=j, offset=float(a @ a))


def encode_vertexcover(
    inst: ProblemInstance,
    penalty: float = COVER_PENALTY,
    cost: float = COVER_COST
) -> IsingModel:
    """
    H = A·Σ_{(u,v)∈E} (1-x_u)(1-x_v) + B·Σ_v x_v при x = (1-s)/2.

    Подстановка (1-x_u)(1-x_v) = (1 + s_u + s_v + s_u s_v)/4 и
    x_v = (1 - s_v)/2 даёт
        J_uv = -A/4,  h_v = B/2 - A·deg(v)/4,  offset = A|E|/4 + B·n/2
    """
    degree = np.zeros(inst.n)
    for u, v in inst.edges:
        degree[u] += 1
        degree[v] += 1
    linear = {v: cost / 2 - penalty * degree[v] / 4 for v in range(inst.n)}
    quadratic = {e: -penalty / 4 for e in inst.edges}
    offset = penalty * len(inst.edges) / 4 + cost * inst.n / 2
    return IsingModel.from_terms(inst.n, linear=linear, quadratic=quadratic, offset=offset)


_ENCODERS = {
    'maxcut': encode_maxcut,
    'partition': encode_partition,
    'vertexcover': encode_vertexcover,
}


def encode(inst: ProblemInstance) -> IsingModel:
    """Модель Изинга экземпляра."""
    try:
        encoder = _ENCODERS[inst.kind]
    except KeyError:
        raise ArgumentError(f"no encoding for problem kind '{inst.kind}'")
    return encoder(inst)
