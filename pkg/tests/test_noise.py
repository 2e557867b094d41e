"""
Тесты шумовой модели.

Для запуска: python -m pytest tests/test_noise.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from src.core import ArgumentError, NoiseModelError
from src.densim import (
    DensityMatrix, Preparation, init_state, apply_channel, apply_unitary,
    compose_channels, tensor_channels,
)
from src.noise import (
    NoiseParams, baseline_params, scale_params,
    thermal_channel, thermal_avg_fidelity, thermal_pair_fidelity,
    depolarizing_channel, depolarizing_avg_fidelity, average_fidelity,
    monte_carlo_fidelity, fidelity_report, match_depol_probability, GateNoiseModel,
)


def test_baseline_values():
    """Тест базовых параметров"""
    params = baseline_params()
    assert params.gate('CX').error == 0.01
    assert params.gate('CX').duration == 400.0
    assert params.gate('SX').error == 0.0003
    assert params.gate('SX').duration == 35.0
    assert params.gate('RZ').duration == 0.0
    assert params.t1 == 100_000.0
    assert params.t2 == 150_000.0
    assert params.measure_duration == 4090.0
    assert params.d_depol == params.d_thermal == 1.0


def test_params_round_trip_dict():
    """Тест сериализации параметров"""
    params = scale_params(baseline_params(), 0.5, 2.0)
    restored = NoiseParams.from_dict(params.to_dict())
    assert restored.to_dict() == params.to_dict()


def test_params_reject_non_cp():
    """Тест: T2 > 2·T1 недопустимо"""
    with pytest.raises(NoiseModelError):
        NoiseParams.from_dict({**baseline_params().to_dict(), 't2': 250_000.0})


def test_scale_negative():
    """Тест отрицательного масштаба"""
    with pytest.raises(ArgumentError):
        scale_params(baseline_params(), -1.0, 1.0)


def test_thermal_zero_time_identity():
    """Тест: t = 0 даёт тождественный канал"""
    assert thermal_channel(100.0, 150.0, 0.0).is_identity()


def test_thermal_population_decay():
    """Тест затухания населённости |1⟩ за время T1"""
    rho = DensityMatrix(1, np.diag([0.0, 1.0]))
    out = apply_channel(rho, thermal_channel(100.0, 150.0, 100.0), [0])
    assert np.real(out.data[1, 1]) == pytest.approx(np.exp(-1.0), abs=1e-12)


def test_thermal_coherence_decay():
    """Тест затухания недиагонали |+⟩ за время T2"""
    rho = init_state(1, Preparation.uniform_plus())
    out = apply_channel(rho, thermal_channel(100.0, 150.0, 150.0), [0])
    assert abs(out.data[0, 1]) == pytest.approx(0.5 * np.exp(-1.0), abs=1e-12)


def test_thermal_infinite_time():
    """Тест: при t → ∞ состояние переходит в |0⟩"""
    rho = DensityMatrix(1, np.diag([0.0, 1.0]))
    out = apply_channel(rho, thermal_channel(100.0, 150.0, np.inf), [0])
    assert np.allclose(out.data, np.diag([1.0, 0.0]))


def test_thermal_rejects_non_cp():
    """Тест ошибки при T2 > 2·T1"""
    with pytest.raises(NoiseModelError):
        thermal_channel(100.0, 201.0, 10.0)


def test_thermal_fidelity_closed_form():
    """Тест аналитической точности релаксации"""
    assert thermal_avg_fidelity(100.0, 150.0, 0.0) == pytest.approx(1.0)
    assert thermal_avg_fidelity(50.0, 50.0, 50.0) == pytest.approx(0.5 + 0.5 * np.exp(-1.0))
    for t1, t2, t in [(100_000.0, 150_000.0, 400.0), (10.0, 7.0, 3.0), (5.0, 10.0, 20.0)]:
        ch = thermal_channel(t1, t2, t)
        assert average_fidelity(ch) == pytest.approx(thermal_avg_fidelity(t1, t2, t), abs=1e-12)


def test_thermal_fidelity_monte_carlo():
    """Тест согласия с оценкой Монте-Карло"""
    rng = np.random.default_rng(17)
    ch = thermal_channel(100_000.0, 150_000.0, 400.0)
    estimate = monte_carlo_fidelity(ch, 100_000, rng)
    assert abs(estimate - thermal_avg_fidelity(100_000.0, 150_000.0, 400.0)) <= 1e-3


def test_pair_fidelity_matches_tensor_channel():
    """Тест точности пары каналов релаксации"""
    ch = thermal_channel(30.0, 40.0, 12.0)
    pair = tensor_channels([ch, ch])
    assert average_fidelity(pair) == pytest.approx(thermal_pair_fidelity(30.0, 40.0, 12.0), abs=1e-12)


def test_depolarizing_zero_identity():
    """Тест: p = 0 - тождественный канал"""
    assert depolarizing_channel(1, 0.0).is_identity()
    assert depolarizing_channel(2, 0.0).is_identity()


def test_depolarizing_full_mixes():
    """Тест: p = 1 даёт максимально смешанное состояние на целевом кубите"""
    rho = init_state(2, Preparation.product_ry([0.7, 2.1]))
    out = apply_channel(rho, depolarizing_channel(1, 1.0), [1])
    reduced = out.data.reshape(2, 2, 2, 2).trace(axis1=1, axis2=3)
    assert np.allclose(reduced, np.eye(2) / 2)


def test_depolarizing_fidelities():
    """Тест средних точностей деполяризации"""
    for p in (0.0, 0.1, 0.5, 1.0):
        assert average_fidelity(depolarizing_channel(1, p)) == pytest.approx(1 - p / 2)
        assert average_fidelity(depolarizing_channel(2, p)) == pytest.approx(1 - 3 * p / 4)
        assert depolarizing_avg_fidelity(2, p) == pytest.approx(1 - 3 * p / 4)


def test_depolarizing_fidelity_monte_carlo():
    """Тест точности двухкубитной деполяризации методом Монте-Карло"""
    report = fidelity_report(depolarizing_channel(2, 0.3), 100_000, np.random.default_rng(1))
    assert report.deviation <= 1e-3


def test_depolarizing_out_of_range():
    """Тест p вне [0, 1]"""
    with pytest.raises(ArgumentError):
        depolarizing_channel(1, 1.5)


def test_depolarizing_k_fold():
    """Тест k-кратного применения однокубитной деполяризации"""
    p = 0.05
    ch = depolarizing_channel(1, p)
    psi = np.array([np.cos(0.3), np.exp(0.4j) * np.sin(0.3)])
    rho = DensityMatrix.from_pure(psi)
    for k in range(1, 51):
        rho = apply_channel(rho, ch, [0])
        expected = 0.5 + 0.5 * np.exp(k * np.log(1 - p))
        assert abs(rho.fidelity_with_pure(psi) - expected) <= 1e-10


def test_match_no_depolarizing_needed():
    """Тест: целевая точность равна тепловой"""
    assert match_depol_probability(0.97, 0.97, 1).p == 0.0


def test_match_two_qubit():
    """Тест подбора p для двухкубитного гейта"""
    result = match_depol_probability(0.99, 1.0, 2)
    assert result.p == pytest.approx(0.04 / 3)
    assert not result.budget_exceeded


def test_match_budget_exceeded():
    """Тест: релаксация уже хуже цели"""
    result = match_depol_probability(0.99, 0.95, 1)
    assert result.p == 0.0
    assert result.budget_exceeded


def test_match_out_of_range():
    """Тест недопустимой точности"""
    with pytest.raises(ArgumentError):
        match_depol_probability(1.2, 1.0, 1)


def test_composed_channel_hits_target():
    """Тест: составной канал гейта даёт 1 − ошибка"""
    model = GateNoiseModel.from_params(baseline_params())
    assert average_fidelity(model.composed_gate_channel('SX')) == pytest.approx(1 - 0.0003, abs=1e-9)
    assert average_fidelity(model.composed_gate_channel('CX')) == pytest.approx(1 - 0.01, abs=1e-9)
    assert model.matched['SX'].p == pytest.approx(0.000328, abs=1e-6)
    assert model.matched['CX'].p == pytest.approx(0.008411, abs=1e-5)


def test_composed_channel_monte_carlo():
    """Тест точности составного канала CX методом Монте-Карло"""
    model = GateNoiseModel.from_params(baseline_params())
    estimate = monte_carlo_fidelity(model.composed_gate_channel('CX'), 100_000, np.random.default_rng(8))
    assert abs(estimate - 0.99) <= 1e-3


def test_random_parameter_sets_monte_carlo():
    """Тест согласия аналитики и Монте-Карло на случайных параметрах"""
    rng = np.random.default_rng(2025)
    for _ in range(20):
        t1 = rng.uniform(10.0, 200.0)
        t2 = rng.uniform(5.0, 2.0 * t1)
        t = rng.uniform(0.0, 0.2 * min(t1, t2))
        p = rng.uniform(0.0, 0.5)
        ch = compose_channels(thermal_channel(t1, t2, t), depolarizing_channel(1, p))
        expected = (1 - p) * thermal_avg_fidelity(t1, t2, t) + p / 2
        assert average_fidelity(ch) == pytest.approx(expected, abs=1e-12)
        assert abs(monte_carlo_fidelity(ch, 100_000, rng) - expected) <= 1e-3


def test_scaling_rules():
    """Тест масштабирования вероятностей и времён"""
    base = GateNoiseModel.from_params(baseline_params())
    half = GateNoiseModel.from_params(scale_params(baseline_params(), 0.5, 1.0))
    assert half.depol_probability('CX') == pytest.approx(base.depol_probability('CX') / 2)
    off = GateNoiseModel.from_params(scale_params(baseline_params(), 0.0, 0.0))
    assert off.composed_gate_channel('CX').is_identity()
    assert off.composed_gate_channel('SX').is_identity()
    huge = GateNoiseModel.from_params(scale_params(baseline_params(), 1000.0, 1.0))
    assert huge.depol_probability('CX') == 1.0


def test_gate_channels_layout():
    """Тест набора каналов после гейтов"""
    model = GateNoiseModel.from_params(baseline_params())
    assert model.gate_channels('RZ', [0]) == []
    cx = model.gate_channels('CX', [2, 0])
    assert [targets for _, targets in cx] == [(2,), (0,), (2, 0)]
    assert cx[2][0].arity == 2


def test_channel_preserves_invariants():
    """Тест сохранения инвариантов матрицы плотности каналами шума"""
    model = GateNoiseModel.from_params(scale_params(baseline_params(), 5.0, 50.0))
    h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    rho = apply_unitary(init_state(3), h, [1])
    for channel, targets in model.gate_channels('CX', [1, 2]) + model.gate_channels('SX', [0]):
        rho = apply_channel(rho, channel, targets)
    rho.validate()


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
