"""
Экземпляры задач и их случайная генерация.

Три вида задач:
- maxcut: простой неориентированный граф, payload - список рёбер
- vertexcover: то же, что maxcut
- partition: n весов из [0, 1]

Генерация детерминирована по (n, seed). Экземпляры сохраняются в JSON
вместе с самим payload, чтобы повторный прогон не зависел от генератора.
"""

from typing import Tuple, Optional, Union, Dict, Any
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
import json

import numpy as np
import networkx as nx

from ..core.errors import ArgumentError, ValidationError


PROBLEM_KINDS = ('maxcut', 'partition', 'vertexcover')
GRAPH_KINDS = ('maxcut', 'vertexcover')

RngLike = Union[np.random.Generator, int, None]


def _as_rng(rng: RngLike) -> Tuple[np.random.Generator, Optional[int]]:
    if isinstance(rng, np.random.Generator):
        return rng, None
    return np.random.default_rng(rng), rng


@dataclass(frozen=True)
class ProblemInstance:
    """
    Экземпляр комбинаторной задачи.

    Attributes:
        kind: 'maxcut', 'partition' или 'vertexcover'
        n: Число вершин / чисел (= число кубитов)
        edges: Рёбра (u, v), u < v, для графовых задач
        weights: Веса для partition
        seed: Зерно генератора (None для экземпляров, заданных вручную)
    """
    kind: str
    n: int
    edges: Tuple[Tuple[int, int], ...] = ()
    weights: Tuple[float, ...] = ()
    seed: Optional[int] = None

    def __post_init__(self):
        if self.kind not in PROBLEM_KINDS:
            raise ArgumentError(f"unknown problem kind '{self.kind}'")
        if self.n < 1:
            raise ArgumentError(f"instance needs at least one variable, got n={self.n}")
        if self.kind in GRAPH_KINDS:
            edges = tuple(sorted((min(int(u), int(v)), max(int(u), int(v))) for u, v in self.edges))
            for u, v in edges:
                if u == v:
                    raise ValidationError(f"self-loop on vertex {u}")
                if not 0 <= u < v < self.n:
                    raise ValidationError(f"edge ({u}, {v}) outside of {self.n} vertices")
            if len(set(edges)) != len(edges):
                raise ValidationError("duplicate edges in a simple graph")
            if self.weights:
                raise ValidationError(f"{self.kind} instance carries weights")
            object.__setattr__(self, 'edges', edges)
        else:
            weights = tuple(float(w) for w in self.weights)
            if len(weights) != self.n:
                raise ValidationError(f"expected {self.n} weights, got {len(weights)}")
            if any(not 0.0 <= w <= 1.0 for w in weights):
                raise ValidationError("partition weights must lie in [0, 1]")
            if self.edges:
                raise ValidationError("partition instance carries edges")
            object.__setattr__(self, 'weights', weights)

    @property
    def is_graph(self) -> bool:
        return self.kind in GRAPH_KINDS

    def graph(self) -> nx.Graph:
        """Граф экземпляра со всеми n вершинами."""
        if not self.is_graph:
            raise ArgumentError(f"{self.kind} instance has no graph")
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'kind': self.kind, 'n': self.n, 'seed': self.seed}
        if self.is_graph:
            data['edges'] = [list(e) for e in self.edges]
        else:
            data['weights'] = list(self.weights)
        return data

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'ProblemInstance':
        try:
            return ProblemInstance(
                kind=data['kind'],
                n=int(data['n']),
                edges=tuple(tuple(e) for e in data.get('edges', [])),
                weights=tuple(data.get('weights', [])),
                seed=data.get('seed'),
            )
        except KeyError as e:
            raise ValidationError(f"instance record misses field {e}")

    def __str__(self) -> str:
        payload = f"edges={len(self.edges)}" if self.is_graph else f"sum={sum(self.weights):.4f}"
        return f"{self.kind}(n={self.n}, {payload}, seed={self.seed})"


def gen_graph(
    n: int,
    edge_prob: float = 0.5,
    rng: RngLike = None,
    kind: str = 'maxcut'
) -> ProblemInstance:
    """
    Случайный граф G(n, p): каждая пара вершин соединяется независимо.

    Args:
        n: Число вершин, n ≥ 2
        edge_prob: Вероятность ребра
        rng: Генератор или зерно
        kind: 'maxcut' или 'vertexcover'

    Returns:
        ProblemInstance
    """
    if n < 2:
        raise ArgumentError(f"graph needs at least 2 vertices, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise ArgumentError(f"edge probability {edge_prob} outside [0, 1]")
    generator, seed = _as_rng(rng)
    edges = tuple((u, v) for u, v in combinations(range(n), 2) if generator.uniform() < edge_prob)
    return ProblemInstance(kind, n, edges=edges, seed=seed)


def gen_partition(n: int, rng: RngLike = None) -> ProblemInstance:
    """Случайный экземпляр partition: n весов, равномерно распределённых на [0, 1]."""
    if n < 2:
        raise ArgumentError(f"partition needs at least 2 numbers, got {n}")
    generator, seed = _as_rng(rng)
    weights = tuple(float(w) for w in generator.uniform(0.0, 1.0, size=n))
    return ProblemInstance('partition', n, weights=weights, seed=seed)


def generate(kind: str, n: int, seed: int, edge_prob: float = 0.5) -> ProblemInstance:
    """Экземпляр задачи заданного вида по зерну."""
    if kind == 'partition':
        return gen_partition(n, seed)
    if kind in GRAPH_KINDS:
        return gen_graph(n, edge_prob, seed, kind=kind)
    raise ArgumentError(f"unknown problem kind '{kind}'")


def save_instance(inst: ProblemInstance, path: Union[str, Path]) -> None:
    """Записать экземпляр в JSON."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(inst.to_dict(), f, indent=2)


def load_instance(path: Union[str, Path]) -> ProblemInstance:
    """Прочитать экземпляр из JSON."""
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValidationError(f"{path}: malformed instance file ({e})")
    return ProblemInstance.from_dict(data)
