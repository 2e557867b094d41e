"""
Тесты плотностного симулятора.

Для запуска: python -m pytest tests/test_densim.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from src.core import IsingModel, CapacityError, ValidationError, ArgumentError
from src.densim import (
    DensityMatrix, Preparation, KrausChannel, init_state,
    apply_unitary, apply_channel, measurement_probabilities, sample,
    expectation_ising, identity_channel, unitary_channel,
)
from src.noise import thermal_channel, depolarizing_channel


X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
# управляющий кубит - targets[0]
CX = np.array([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]], dtype=complex)


def bell_state() -> DensityMatrix:
    rho = init_state(2)
    rho = apply_unitary(rho, H, [0])
    return apply_unitary(rho, CX, [0, 1])


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_init_all_zero():
    """Тест подготовки |0⟩"""
    rho = init_state(1, Preparation.all_zero())
    assert np.allclose(rho.data, np.diag([1, 0]))


def test_init_uniform_plus():
    """Тест подготовки |+⟩"""
    rho = init_state(1, Preparation.uniform_plus())
    assert np.allclose(rho.data, 0.5)


def test_init_product_ry():
    """Тест подготовки RY(θ)|0⟩"""
    rho = init_state(1, Preparation.product_ry([np.pi / 3]))
    assert np.allclose(np.real(np.diag(rho.data)), [0.75, 0.25])


def test_init_product_ry_qubit_order():
    """Тест: угол θ_0 относится к младшему биту"""
    rho = init_state(2, Preparation.product_ry([np.pi, 0.0]))
    probs = measurement_probabilities(rho)
    assert probs[1] == pytest.approx(1.0)


def test_init_capacity():
    """Тест ограничения числа кубитов"""
    with pytest.raises(CapacityError):
        init_state(0)
    with pytest.raises(CapacityError):
        init_state(13)


def test_init_wrong_angle_count():
    """Тест несовпадения числа углов и кубитов"""
    with pytest.raises(ArgumentError):
        init_state(3, Preparation.product_ry([0.1, 0.2]))


def test_bit_flip():
    """Тест X на |0⟩"""
    rho = apply_unitary(init_state(1), X, [0])
    assert np.allclose(rho.data, np.diag([0, 1]))


def test_phase_flip():
    """Тест Z на |+⟩ даёт |−⟩"""
    rho = apply_unitary(init_state(1, Preparation.uniform_plus()), Z, [0])
    minus = np.array([1, -1]) / np.sqrt(2)
    assert np.allclose(rho.data, np.outer(minus, minus))


def test_bell_state():
    """Тест построения состояния Белла"""
    rho = bell_state()
    for a in (0, 3):
        for b in (0, 3):
            assert rho.data[a, b] == pytest.approx(0.5)
    assert np.allclose(measurement_probabilities(rho), [0.5, 0, 0, 0.5])


def test_apply_unitary_matches_full_operator():
    """Тест: вложение через тензоры совпадает с явным кронекеровым произведением"""
    rng = np.random.default_rng(7)
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    rho = DensityMatrix.from_pure(psi / np.linalg.norm(psi))
    u = random_unitary(4, rng)
    # targets = [0, 2]: кубит 0 - младший локальный бит
    out = apply_unitary(rho, u, [0, 2])
    full = np.zeros((8, 8), dtype=complex)
    for x in range(8):
        for y in range(8):
            if (x >> 1) & 1 != (y >> 1) & 1:
                continue
            lx = (x & 1) | (((x >> 2) & 1) << 1)
            ly = (y & 1) | (((y >> 2) & 1) << 1)
            full[x, y] = u[lx, ly]
    assert np.allclose(out.data, full @ rho.data @ full.conj().T, atol=1e-12)


def test_apply_unitary_errors():
    """Тест ошибок apply_unitary"""
    rho = init_state(2)
    with pytest.raises(ValidationError):
        apply_unitary(rho, np.array([[1, 1], [0, 1]]), [0])
    with pytest.raises(ArgumentError):
        apply_unitary(rho, CX, [1, 1])
    with pytest.raises(ArgumentError):
        apply_unitary(rho, X, [2])


def test_identity_channel():
    """Тест тождественного канала"""
    rho = bell_state()
    out = apply_channel(rho, identity_channel(1), [1])
    assert np.allclose(out.data, rho.data)


def test_unitary_channel_equals_apply_unitary():
    """Тест: канал с одним оператором U совпадает с apply_unitary"""
    rng = np.random.default_rng(11)
    rho = init_state(3, Preparation.product_ry([0.3, 1.1, 2.0]))
    u = random_unitary(4, rng)
    a = apply_channel(rho, unitary_channel(u), [2, 0])
    b = apply_unitary(rho, u, [2, 0])
    assert np.max(np.abs(a.data - b.data)) <= 1e-12


def test_incomplete_channel_rejected():
    """Тест: канал без сохранения следа отвергается"""
    with pytest.raises(ValidationError):
        KrausChannel(1, [np.diag([1.0, 0.5])])


def test_invariants_after_random_sequence():
    """Тест сохранения инвариантов после цепочки операций"""
    rng = np.random.default_rng(3)
    rho = init_state(3, Preparation.uniform_plus())
    p = 0.2
    half = KrausChannel(1, [np.sqrt(1 - p) * np.eye(2), np.sqrt(p) * Z], name='dephase')
    for _ in range(20):
        rho = apply_unitary(rho, random_unitary(4, rng), list(rng.choice(3, 2, replace=False)))
        rho = apply_channel(rho, half, [int(rng.integers(3))])
    rho.validate()


def random_preparation(n: int, rng: np.random.Generator) -> Preparation:
    kind = rng.integers(3)
    if kind == 0:
        return Preparation.all_zero()
    if kind == 1:
        return Preparation.uniform_plus()
    return Preparation.product_ry(rng.uniform(0.0, np.pi, size=n))


def test_invariants_random_noisy_circuits():
    """Тест: 500 случайных схем с унитарами, тепловым и деполяризующим шумом"""
    rng = np.random.default_rng(2024)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        rho = init_state(n, random_preparation(n, rng))
        for _ in range(int(rng.integers(1, 13))):
            step = int(rng.integers(5)) if n >= 2 else int(rng.choice([0, 2, 3]))
            one = [int(rng.integers(n))]
            if step == 0:
                rho = apply_unitary(rho, random_unitary(2, rng), one)
            elif step == 1:
                pair = [int(q) for q in rng.choice(n, 2, replace=False)]
                rho = apply_unitary(rho, random_unitary(4, rng), pair)
            elif step == 2:
                t1 = rng.uniform(1e3, 2e5)
                channel = thermal_channel(t1, rng.uniform(0.05, 2.0) * t1, rng.uniform(0.0, 5e3))
                rho = apply_channel(rho, channel, one)
            elif step == 3:
                rho = apply_channel(rho, depolarizing_channel(1, rng.uniform()), one)
            else:
                pair = [int(q) for q in rng.choice(n, 2, replace=False)]
                rho = apply_channel(rho, depolarizing_channel(2, rng.uniform()), pair)
        rho.validate()


def test_probabilities_clamp_small_negatives():
    """Тест обнуления малых отрицательных диагональных элементов"""
    rho = DensityMatrix(1, np.diag([1.0 + 5e-10, -5e-10]))
    probs = measurement_probabilities(rho)
    assert probs[1] == 0.0
    assert probs.sum() == pytest.approx(1.0, abs=1e-12)


def test_probabilities_reject_negative():
    """Тест: существенно отрицательная вероятность - ошибка"""
    with pytest.raises(ValidationError):
        measurement_probabilities(DensityMatrix(1, np.diag([1.1, -0.1])))


def test_sample_point_mass():
    """Тест выборки из |0…0⟩"""
    result = sample(init_state(3), 10, np.random.default_rng(0))
    assert len(result) == 1
    assert result[0].bits == '000'
    assert result[0].multiplicity == 10


def test_sample_frequencies():
    """Тест сходимости частот к вероятностям"""
    rho = init_state(1, Preparation.uniform_plus())
    result = sample(rho, 100_000, np.random.default_rng(42))
    zeros = sum(s.multiplicity for s in result if s.bits == '0')
    assert abs(zeros / 100_000 - 0.5) <= 0.01


def test_sample_deterministic():
    """Тест детерминированности выборки при фиксированном seed"""
    rho = bell_state()
    a = sample(rho, 50, np.random.default_rng(5))
    b = sample(rho, 50, np.random.default_rng(5))
    assert a == b
    assert sum(s.multiplicity for s in a) == 50


def test_sample_frequencies_three_qubits():
    """Тест частот для неравномерного распределения"""
    rho = init_state(3, Preparation.product_ry([0.4, 1.3, 2.2]))
    probs = measurement_probabilities(rho)
    result = sample(rho, 100_000, np.random.default_rng(2024))
    freq = np.zeros(8)
    for s in result:
        freq[s.index()] = s.multiplicity / 100_000
    assert np.max(np.abs(freq - probs)) <= 0.01


def test_expectation_aligned_spins():
    """Тест ⟨C⟩ на |00⟩ при J_12 = 1"""
    model = IsingModel.from_terms(2, quadratic={(0, 1): 1.0})
    assert expectation_ising(init_state(2), model) == pytest.approx(-1.0)


def test_expectation_maximally_mixed():
    """Тест: на максимально смешанном состоянии остаётся только смещение"""
    model = IsingModel.from_terms(3, quadratic={(0, 1): 0.7, (1, 2): -1.3}, offset=2.5)
    assert expectation_ising(DensityMatrix.maximally_mixed(3), model) == pytest.approx(2.5)


def test_expectation_bell():
    """Тест ⟨C⟩ на состоянии Белла"""
    model = IsingModel.from_terms(2, quadratic={(0, 1): 1.0})
    assert expectation_ising(bell_state(), model) == pytest.approx(-1.0)


def test_expectation_equals_table_dot():
    """Тест: ожидание совпадает со скалярным произведением на таблицу энергий"""
    model = IsingModel.from_terms(3, linear={0: 0.5, 2: -0.25}, quadratic={(0, 2): 1.5})
    rho = init_state(3, Preparation.product_ry([0.2, 0.9, 1.7]))
    direct = float(measurement_probabilities(rho) @ model.energy_table())
    assert abs(expectation_ising(rho, model) - direct) <= 1e-12


def test_expectation_dimension_mismatch():
    """Тест несовпадения размерностей"""
    with pytest.raises(ArgumentError):
        expectation_ising(init_state(2), IsingModel.from_terms(3))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
