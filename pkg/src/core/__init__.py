"""Инициализация модуля core."""

from .types import (
    IsingModel,
    SpinAssignment,
    BasisSample,
    basis_bits,
    basis_spins,
)
from .errors import (
    LabError,
    CapacityError,
    ValidationError,
    ArgumentError,
    NoiseModelError,
    TranspileError,
    OptimizerError,
    InternalError,
)

__all__ = [
    'IsingModel',
    'SpinAssignment',
    'BasisSample',
    'basis_bits',
    'basis_spins',
    'LabError',
    'CapacityError',
    'ValidationError',
    'ArgumentError',
    'NoiseModelError',
    'TranspileError',
    'OptimizerError',
    'InternalError',
]
