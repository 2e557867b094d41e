"""
Раскраска рёбер алгоритмом Мисры-Гриса.

Даёт правильную раскраску не более чем в Δ+1 цвет. Слагаемые RZZ
одного цвета не имеют общих кубитов и выполняются параллельно.

Выбор детерминирован: веер строится с наименьшего соседа,
свободный цвет - наименьший номер.
"""

from typing import List, Tuple, Dict, Sequence, Optional

import networkx as nx

from ..core.errors import ArgumentError, InternalError


def _free_color(graph: nx.Graph, colors: Dict[frozenset, int], v: int, palette: int) -> int:
    used = {colors[frozenset((v, w))] for w in graph[v] if frozenset((v, w)) in colors}
    for c in range(palette):
        if c not in used:
            return c
    raise InternalError(f"no free color at vertex {v}")


def _is_free(graph: nx.Graph, colors: Dict[frozenset, int], v: int, c: int) -> bool:
    return all(colors.get(frozenset((v, w))) != c for w in graph[v])


def _maximal_fan(graph: nx.Graph, colors: Dict[frozenset, int], u: int, v: int) -> List[int]:
    """
    Максимальный веер в u, начинающийся с неокрашенного ребра (u, v).

    Следующий элемент - наименьший сосед w, у которого цвет ребра (u, w)
    свободен на последнем элементе веера.
    """
    fan = [v]
    remaining = set(graph[u]) - {v}
    while True:
        last = fan[-1]
        candidates = [
            w for w in sorted(remaining)
            if frozenset((u, w)) in colors and _is_free(graph, colors, last, colors[frozenset((u, w))])
        ]
        if not candidates:
            return fan
        fan.append(candidates[0])
        remaining.discard(candidates[0])


def _invert_path(graph: nx.Graph, colors: Dict[frozenset, int], u: int, c: int, d: int) -> None:
    """Поменять цвета c и d на cd-пути, начинающемся в u."""
    path = []
    current, want, previous = u, d, None
    while True:
        step = None
        for w in sorted(graph[current]):
            if w != previous and colors.get(frozenset((current, w))) == want:
                step = w
                break
        if step is None:
            break
        path.append(frozenset((current, step)))
        previous, current = current, step
        want = c if want == d else d
    for edge in path:
        colors[edge] = c if colors[edge] == d else d


def misra_gries_coloring(edges: Sequence[Tuple[int, int]], n: Optional[int] = None) -> List[int]:
    """
    Раскрасить рёбра простого графа.

    Args:
        edges: Рёбра (u, v), u ≠ v, без повторов
        n: Число вершин (по умолчанию по максимальному номеру)

    Returns:
        Цвет каждого ребра в порядке входного списка
    """
    graph = nx.Graph()
    if n is not None:
        graph.add_nodes_from(range(n))
    for u, v in edges:
        if u == v:
            raise ArgumentError(f"self-loop on vertex {u}")
        if graph.has_edge(u, v):
            raise ArgumentError(f"duplicate edge ({u}, {v})")
        graph.add_edge(u, v)
    if not edges:
        return []

    max_degree = max(d for _, d in graph.degree())
    palette = max_degree + 1
    colors: Dict[frozenset, int] = {}

    for u, v in edges:
        fan = _maximal_fan(graph, colors, u, v)
        c = _free_color(graph, colors, u, palette)
        d = _free_color(graph, colors, fan[-1], palette)
        if c != d:
            _invert_path(graph, colors, u, c, d)

        # после инверсии d свободен в u; ищем префикс веера с d свободным на конце
        w_index = None
        for i, w in enumerate(fan):
            if i > 0:
                prev = fan[i - 1]
                edge_color = colors.get(frozenset((u, w)))
                if edge_color is None or not _is_free(graph, colors, prev, edge_color):
                    break
            if _is_free(graph, colors, w, d):
                w_index = i
                break
        if w_index is None:
            raise InternalError(f"fan rotation failed for edge ({u}, {v})")

        # поворот веера: (u, fan[i]) получает цвет (u, fan[i+1])
        for i in range(w_index):
            colors[frozenset((u, fan[i]))] = colors[frozenset((u, fan[i + 1]))]
        colors[frozenset((u, fan[w_index]))] = d

    return [colors[frozenset((u, v))] for u, v in edges]


def color_classes(edges: Sequence[Tuple[int, int]], n: Optional[int] = None) -> List[List[Tuple[int, int]]]:
    """
    Рёбра, сгруппированные по цвету.

    Returns:
        Список классов по возрастанию цвета, рёбра внутри класса отсортированы
    """
    colors = misra_gries_coloring(edges, n)
    classes: Dict[int, List[Tuple[int, int]]] = {}
    for edge, color in zip(edges, colors):
        classes.setdefault(color, []).append(tuple(edge))
    return [sorted(classes[c]) for c in sorted(classes)]


def is_proper_coloring(edges: Sequence[Tuple[int, int]], colors: Sequence[int]) -> bool:
    """Инцидентные рёбра получили разные цвета."""
    seen: Dict[Tuple[int, int], bool] = {}
    for (u, v), c in zip(edges, colors):
        for vertex in (u, v):
            if (vertex, c) in seen:
                return False
            seen[(vertex, c)] = True
    return True
