"""
Тесты базовых типов.

Для запуска: python -m pytest tests/test_core.py -v
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np
import pytest

from src.core import (
    IsingModel, SpinAssignment, BasisSample, basis_bits,
    ArgumentError, ValidationError, LabError,
)


def test_spin_assignment_index():
    """Тест соответствия спинов и номера базисного состояния"""
    s = SpinAssignment.from_index(5, 4)
    assert s.spins == (-1, 1, -1, 1)
    assert s.index() == 5
    assert str(s) == '-+-+'


def test_spin_assignment_rejects_zero():
    """Тест: спин должен быть ±1"""
    with pytest.raises(ArgumentError):
        SpinAssignment((1, 0))


def test_basis_sample_spins():
    """Тест перевода битовой строки в спины"""
    s = BasisSample('101', 3)
    assert s.index() == 5
    assert s.spins().spins == (-1, 1, -1)


def test_basis_bits_table():
    """Тест таблицы битов"""
    table = basis_bits(2)
    assert table.tolist() == [[0, 0], [1, 0], [0, 1], [1, 1]]


def test_energy_and_table_agree():
    """Тест согласования energy и energy_table"""
    model = IsingModel.from_terms(
        3, linear={1: 0.5}, quadratic={(0, 1): 1.0, (2, 0): -2.0}, offset=0.25
    )
    table = model.energy_table()
    for x in range(8):
        assert table[x] == pytest.approx(model.energy(SpinAssignment.from_index(x, 3).spins))


def test_energy_formula():
    """Тест знаков в C(s)"""
    model = IsingModel.from_terms(2, linear={0: 1.0}, quadratic={(0, 1): 2.0}, offset=3.0)
    # s = (+1, -1): -2·(-1) - 1 + 3
    assert model.energy([1, -1]) == pytest.approx(4.0)


def test_terms_listing():
    """Тест перечисления слагаемых"""
    model = IsingModel.from_terms(3, linear={2: 1.0}, quadratic={(1, 0): 1.0})
    assert model.terms() == [(2,), (0, 1)]
    assert model.coupling(1, 0) == 1.0


def test_lower_triangle_rejected():
    """Тест: матрица связей обязана быть верхнетреугольной"""
    with pytest.raises(ValidationError):
        IsingModel(2, np.zeros(2), np.array([[0.0, 0.0], [1.0, 0.0]]))


def test_error_hierarchy():
    """Тест иерархии исключений"""
    assert issubclass(ArgumentError, LabError)
    assert issubclass(ArgumentError, ValueError)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
