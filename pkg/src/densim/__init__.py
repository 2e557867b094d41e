"""Инициализация модуля densim."""

from .state import (
    DensityMatrix,
    Preparation,
    init_state,
    product_state_vector,
    MAX_QUBITS,
)
from .channel import (
    KrausChannel,
    identity_channel,
    unitary_channel,
    compose_channels,
    tensor_channels,
)
from .ops import (
    apply_left,
    apply_unitary,
    apply_channel,
    measurement_probabilities,
    sample,
    expectation_ising,
    bitstring,
    is_unitary,
)

__all__ = [
    'DensityMatrix',
    'Preparation',
    'init_state',
    'product_state_vector',
    'MAX_QUBITS',
    'KrausChannel',
    'identity_channel',
    'unitary_channel',
    'compose_channels',
    'tensor_channels',
    'apply_left',
    'apply_unitary',
    'apply_channel',
    'measurement_probabilities',
    'sample',
    'expectation_ising',
    'bitstring',
    'is_unitary',
]
