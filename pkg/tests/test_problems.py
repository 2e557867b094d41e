"""
Тесты экземпляров задач, кодировок, перебора и тёплого старта.

Для запуска: python -m pytest tests/test_problems.py -v
"""

import sys
import os
import math
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from src.core import SpinAssignment, CapacityError, ValidationError, ArgumentError
from src.problems import (
    ProblemInstance, gen_graph, gen_partition, generate, save_instance, load_instance,
    encode, brute_force, quality, quality_table, average_quality, random_guess_quality,
    warmstart, ws_thetas, warmstart_quality, assignment_cover,
)


def triangle(kind: str = 'maxcut') -> ProblemInstance:
    return ProblemInstance(kind, 3, edges=((0, 1), (1, 2), (0, 2)))


def single_edge(kind: str = 'maxcut') -> ProblemInstance:
    return ProblemInstance(kind, 2, edges=((0, 1),))


# ---------------------------------------------------------------- generators

def test_gen_graph_extremes():
    """Тест крайних вероятностей ребра"""
    assert gen_graph(6, 0.0, 1).edges == ()
    assert len(gen_graph(5, 1.0, 1).edges) == 10


def test_gen_graph_deterministic():
    """Тест воспроизводимости генератора графов"""
    a = gen_graph(10, 0.5, 7)
    b = gen_graph(10, 0.5, 7)
    assert a.edges == b.edges
    assert a.seed == 7
    assert a != gen_graph(10, 0.5, 8)


def test_gen_graph_rejects_tiny():
    """Тест отказа на слишком малом графе"""
    with pytest.raises(ArgumentError):
        gen_graph(1)


def test_gen_partition():
    """Тест генератора весов"""
    inst = gen_partition(5, 3)
    assert len(inst.weights) == 5
    assert all(0.0 <= w <= 1.0 for w in inst.weights)
    assert inst == gen_partition(5, 3)
    big = gen_partition(10_000, 11)
    assert abs(np.mean(big.weights) - 0.5) < 0.02


def test_instance_validation():
    """Тест проверки экземпляров"""
    with pytest.raises(ValidationError):
        ProblemInstance('maxcut', 3, edges=((0, 0),))
    with pytest.raises(ValidationError):
        ProblemInstance('maxcut', 3, edges=((0, 1), (1, 0)))
    with pytest.raises(ValidationError):
        ProblemInstance('partition', 2, weights=(0.5, 1.5))
    with pytest.raises(ArgumentError):
        ProblemInstance('tsp', 3)


def test_instance_json(tmp_path):
    """Тест сохранения и чтения экземпляра"""
    inst = generate('vertexcover', 6, 42)
    path = tmp_path / 'inst.json'
    save_instance(inst, path)
    assert load_instance(path) == inst
    part = generate('partition', 4, 5)
    save_instance(part, tmp_path / 'part.json')
    assert load_instance(tmp_path / 'part.json').weights == part.weights


# ---------------------------------------------------------------- encodings

def test_encode_maxcut_single_edge():
    """Тест кодировки maxcut на одном ребре"""
    model = encode(single_edge())
    table = model.energy_table()
    assert table.min() == pytest.approx(-1.0)
    # x = 1, 2 - концы по разные стороны
    assert table[1] == pytest.approx(-1.0) and table[2] == pytest.approx(-1.0)
    assert table[0] == pytest.approx(0.0) and table[3] == pytest.approx(0.0)


def test_encode_partition_pair():
    """Тест кодировки partition на {0.5, 0.5}"""
    model = encode(ProblemInstance('partition', 2, weights=(0.5, 0.5)))
    assert model.energy([1, -1]) == pytest.approx(0.0)
    assert model.energy([1, 1]) == pytest.approx(1.0)
    assert model.energy([-1, -1]) == pytest.approx(1.0)


def test_encode_vertexcover_single_edge():
    """Тест кодировки покрытия на одном ребре"""
    inst = single_edge('vertexcover')
    table = encode(inst).energy_table()
    # x = 0: пустое покрытие, штраф A = 2
    assert table[0] == pytest.approx(2.0)
    assert table[1] == pytest.approx(1.0)
    assert table[2] == pytest.approx(1.0)
    assert table[3] == pytest.approx(2.0)


@pytest.mark.parametrize('kind', ['maxcut', 'partition', 'vertexcover'])
def test_ground_states_are_optimal(kind):
    """Тест: основные состояния модели Изинга оптимальны по мере задачи"""
    rng = np.random.default_rng(100)
    for _ in range(50):
        n = int(rng.integers(2, 9))
        inst = generate(kind, n, int(rng.integers(1 << 30)))
        energies = encode(inst).energy_table()
        qualities = quality_table(inst)
        ground = np.flatnonzero(energies <= energies.min() + 1e-12)
        assert np.allclose(qualities[ground], 1.0)
        if kind == 'vertexcover':
            for x in ground:
                cover = set(assignment_cover(inst, SpinAssignment.from_index(int(x), n)))
                assert all(u in cover or v in cover for u, v in inst.edges)


# ---------------------------------------------------------------- oracle

def test_brute_force_examples():
    """Тест перебора на малых примерах"""
    assert brute_force(triangle()).optimum == 2
    part = brute_force(ProblemInstance('partition', 3, weights=(0.5, 0.3, 0.2)))
    assert part.optimum == pytest.approx(0.5)
    cover = brute_force(triangle('vertexcover'))
    assert 1.0 / cover.optimum == pytest.approx(2.0)
    assignment, optimum, worst = brute_force(triangle())
    assert worst == 0 and optimum == 2 and len(assignment) == 3


def test_brute_force_capacity():
    """Тест ограничения размера перебора"""
    with pytest.raises(CapacityError):
        brute_force(ProblemInstance('maxcut', 21))


def test_quality_examples():
    """Тест качества отдельных назначений"""
    for inst in (triangle(), triangle('vertexcover'), gen_partition(6, 9)):
        assert quality(inst, brute_force(inst).assignment) == pytest.approx(1.0)
    assert quality(triangle(), SpinAssignment((1, 1, 1))) == 0.0
    assert quality(single_edge('vertexcover'), SpinAssignment((-1, -1))) == pytest.approx(0.5)
    # пустое покрытие недопустимо и заменяется всем множеством вершин
    assert quality(single_edge('vertexcover'), SpinAssignment((1, 1))) == pytest.approx(0.5)
    with pytest.raises(ArgumentError):
        quality(triangle(), SpinAssignment((1, 1)))


def test_quality_bounds():
    """Тест: качество всегда в [0, 1]"""
    for seed in range(30):
        for kind in ('maxcut', 'partition', 'vertexcover'):
            table = quality_table(generate(kind, 6, seed))
            assert table.min() >= 0.0
            assert table.max() == pytest.approx(1.0)


def test_degenerate_instances():
    """Тест вырожденных экземпляров"""
    empty = ProblemInstance('maxcut', 3)
    assert np.all(quality_table(empty) == 1.0)
    zeros = ProblemInstance('partition', 3, weights=(0.0, 0.0, 0.0))
    assert np.all(quality_table(zeros) == 1.0)
    no_edges = ProblemInstance('vertexcover', 3)
    assert quality(no_edges, SpinAssignment((1, 1, 1))) == 1.0
    assert quality(no_edges, SpinAssignment((-1, 1, 1))) == 0.0


def test_partition_quality_monotone_in_difference():
    """Тест: качество partition убывает с разностью сумм"""
    inst = gen_partition(6, 21)
    a = np.array(inst.weights)
    spins = np.array([SpinAssignment.from_index(x, 6).spins for x in range(64)])
    diff = np.abs(spins @ a)
    table = quality_table(inst)
    order = np.argsort(diff)
    assert np.all(np.diff(table[order]) <= 1e-12)
    opt = brute_force(inst).optimum
    assert np.allclose(table * opt, (a.sum() - diff) / 2)


def test_partition_cardinality_metric():
    """Тест меры числа элементов для partition"""
    inst = ProblemInstance('partition', 4, weights=(0.9, 0.3, 0.3, 0.3))
    table = quality_table(inst, 'cardinality')
    # оптимальное разбиение {0.9} | {0.3, 0.3, 0.3}: меньшее множество из одного элемента
    assert brute_force(inst, 'cardinality').optimum == 1
    assert table.max() == 1.0
    assert table[0] == 0.0
    assert average_quality(inst, np.full(16, 1 / 16), 'cardinality') <= 1.0


def test_average_quality():
    """Тест среднего качества"""
    inst = single_edge()
    assert average_quality(inst, np.full(4, 0.25)) == pytest.approx(0.5)
    assert random_guess_quality(triangle()) == pytest.approx(0.75)
    point = np.zeros(8)
    point[brute_force(triangle()).assignment.index()] = 1.0
    assert average_quality(triangle(), point) == pytest.approx(1.0)
    with pytest.raises(ArgumentError):
        average_quality(triangle(), np.full(4, 0.25))


# ---------------------------------------------------------------- warm start

def test_greedy_partition():
    """Тест жадного распределения"""
    inst = ProblemInstance('partition', 3, weights=(0.5, 0.3, 0.2))
    z = warmstart(inst)
    assert z.spins == (1, -1, -1)
    assert quality(inst, z) == pytest.approx(1.0)


def test_matching_cover():
    """Тест покрытия по паросочетанию"""
    inst = single_edge('vertexcover')
    z = warmstart(inst)
    assert assignment_cover(inst, z) == (0, 1)
    assert warmstart_quality(inst) == pytest.approx(0.5)


def test_matching_cover_two_approximation():
    """Тест: покрытие допустимо и не более чем вдвое больше оптимума"""
    for seed in range(40):
        inst = generate('vertexcover', 8, seed)
        cover = set(assignment_cover(inst, warmstart(inst)))
        assert all(u in cover or v in cover for u, v in inst.edges)
        optimum = 1.0 / brute_force(inst).optimum if inst.edges else 0
        assert len(cover) <= 2 * optimum


def test_goemans_williamson_bipartite():
    """Тест: на двудольном C4 округление находит разрез 4"""
    inst = ProblemInstance('maxcut', 4, edges=((0, 1), (1, 2), (2, 3), (0, 3)))
    hits = sum(1 for seed in range(100) if quality(inst, warmstart(inst, seed)) == 1.0)
    assert hits >= 95


def test_goemans_williamson_quality():
    """Тест: качество тёплого старта maxcut не ниже гарантии 0.878"""
    for seed in range(20):
        inst = generate('maxcut', 8, seed)
        assert warmstart_quality(inst) >= 0.878


def test_ws_thetas():
    """Тест углов тёплого старта"""
    thetas = ws_thetas(SpinAssignment((1, -1)))
    assert thetas[0] == pytest.approx(math.pi / 3)
    assert thetas[1] == pytest.approx(2 * math.pi / 3)
    assert math.sin(thetas[0] / 2) ** 2 == pytest.approx(0.25)
    with pytest.raises(ArgumentError):
        ws_thetas([1, 0])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
