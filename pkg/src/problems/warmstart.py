"""
Классические приближённые решения для тёплого старта.

- maxcut: релаксация Гоманса-Уильямсона в малоранговой форме
  (Burer-Monteiro, проективный градиентный подъём) и лучшее из
  100 округлений случайной гиперплоскостью
- partition: жадное распределение по сторонам (list scheduling)
- vertexcover: обе вершины каждого ребра жадного максимального паросочетания
"""

from typing import List, Optional, Tuple
import math
import logging

import numpy as np
import networkx as nx

from ..core.types import SpinAssignment
from ..core.errors import ArgumentError
from .instances import ProblemInstance
from .oracle import quality


logger = logging.getLogger(__name__)

RELAXATION_STEPS = 500
ROUNDINGS = 100


def relaxation_rank(n: int) -> int:
    """Ранг k = ⌈√(2n)⌉ малоранговой релаксации."""
    return max(1, math.ceil(math.sqrt(2 * n)))


def burer_monteiro(
    graph: nx.Graph,
    rng: np.random.Generator,
    rank: Optional[int] = None,
    steps: int = RELAXATION_STEPS
) -> np.ndarray:
    """
    Векторы единичной длины v_u, максимизирующие Σ_E (1 - v_u·v_v)/2.

    Args:
        graph: Граф с вершинами 0..n-1
        rng: Генератор начальной точки
        rank: Размерность векторов, по умолчанию ⌈√(2n)⌉
        steps: Число шагов подъёма

    Returns:
        Матрица V формы (n, rank), строки нормированы
    """
    n = graph.number_of_nodes()
    k = rank or relaxation_rank(n)
    laplacian = nx.laplacian_matrix(graph, nodelist=list(range(n))).toarray().astype(float)
    v = rng.normal(size=(n, k))
    v /= np.linalg.norm(v, axis=1, keepdims=True)

    lam = float(np.max(np.linalg.eigvalsh(laplacian))) if n else 0.0
    if lam <= 0.0:
        return v
    step = 1.0 / lam
    for _ in range(steps):
        moved = v + step * (laplacian @ v)
        norms = np.linalg.norm(moved, axis=1, keepdims=True)
        v = np.where(norms > 1e-12, moved / np.maximum(norms, 1e-12), v)
    return v


def relaxation_value(graph: nx.Graph, v: np.ndarray) -> float:
    """Значение релаксации ¼·tr(Vᵀ L V)."""
    laplacian = nx.laplacian_matrix(graph, nodelist=list(range(v.shape[0]))).toarray()
    return float(np.trace(v.T @ laplacian @ v) / 4)


def hyperplane_rounding(
    v: np.ndarray,
    edges: List[Tuple[int, int]],
    rng: np.random.Generator,
    roundings: int = ROUNDINGS
) -> Tuple[SpinAssignment, int]:
    """
    Лучшее из нескольких округлений случайной гиперплоскостью.

    Returns:
        (назначение, размер разреза)
    """
    best: Optional[np.ndarray] = None
    best_cut = -1
    for _ in range(roundings):
        r = rng.normal(size=v.shape[1])
        s = np.where(v @ r >= 0.0, 1, -1)
        cut = sum(1 for a, b in edges if s[a] != s[b])
        if cut > best_cut:
            best, best_cut = s, cut
    return SpinAssignment(tuple(int(x) for x in best)), best_cut


def goemans_williamson(inst: ProblemInstance, rng: np.random.Generator) -> SpinAssignment:
    graph = inst.graph()
    v = burer_monteiro(graph, rng)
    assignment, cut = hyperplane_rounding(v, list(inst.edges), rng)
    logger.debug("relaxation %.4f, rounded cut %d on %s", relaxation_value(graph, v), cut, inst)
    return assignment


def greedy_partition(weights) -> SpinAssignment:
    """
    Жадное распределение: веса по убыванию, каждый - на более лёгкую сторону.

    Сторона s = +1 выбирается при равенстве сумм.
    """
    order = sorted(range(len(weights)), key=lambda i: (-weights[i], i))
    spins = [1] * len(weights)
    load = {1: 0.0, -1: 0.0}
    for i in order:
        side = 1 if load[1] <= load[-1] else -1
        spins[i] = side
        load[side] += weights[i]
    return SpinAssignment(tuple(spins))


def matching_cover(inst: ProblemInstance) -> SpinAssignment:
    """Двухприближение вершинного покрытия через максимальное паросочетание."""
    matching = nx.maximal_matching(inst.graph())
    cover = {v for edge in matching for v in edge}
    return SpinAssignment(tuple(-1 if v in cover else 1 for v in range(inst.n)))


def warmstart(inst: ProblemInstance, seed: Optional[int] = None) -> SpinAssignment:
    """
    Приближённое решение z* для тёплого старта.

    Args:
        inst: Экземпляр задачи
        seed: Зерно округлений maxcut; по умолчанию зерно экземпляра

    Returns:
        SpinAssignment
    """
    if inst.kind == 'maxcut':
        rng = np.random.default_rng(seed if seed is not None else (inst.seed or 0))
        return goemans_williamson(inst, rng)
    if inst.kind == 'partition':
        return greedy_partition(inst.weights)
    if inst.kind == 'vertexcover':
        return matching_cover(inst)
    raise ArgumentError(f"no warm start for problem kind '{inst.kind}'")


def ws_thetas(z: SpinAssignment) -> np.ndarray:
    """
    Углы RY подготовки тёплого старта: θ_i = 2·arcsin(√(0.5 - 0.25·z_i)).

    z_i = +1 -> π/3, z_i = -1 -> 2π/3; P(бит i = 1) = 0.5 - 0.25·z_i.
    """
    z_arr = np.asarray(z.spins if isinstance(z, SpinAssignment) else z, dtype=float)
    if np.any(np.abs(z_arr) != 1.0):
        raise ArgumentError("warm-start spins must be ±1")
    return 2.0 * np.arcsin(np.sqrt(0.5 - 0.25 * z_arr))


def warmstart_quality(inst: ProblemInstance, seed: Optional[int] = None) -> float:
    """Качество классического решения тёплого старта."""
    return quality(inst, warmstart(inst, seed))
