"""Инициализация модуля noise."""

from .params import (
    GateNoise,
    NoiseParams,
    baseline_params,
    scale_params,
    NATIVE_KINDS,
)
from .channels import (
    thermal_channel,
    thermal_avg_fidelity,
    thermal_pair_fidelity,
    depolarizing_channel,
    depolarizing_avg_fidelity,
    average_fidelity,
    monte_carlo_fidelity,
    haar_states,
    FidelityReport,
    fidelity_report,
    DepolMatch,
    match_depol_probability,
    GateNoiseModel,
    GATE_ARITY,
    VIRTUAL_KINDS,
)

__all__ = [
    'GateNoise',
    'NoiseParams',
    'baseline_params',
    'scale_params',
    'NATIVE_KINDS',
    'thermal_channel',
    'thermal_avg_fidelity',
    'thermal_pair_fidelity',
    'depolarizing_channel',
    'depolarizing_avg_fidelity',
    'average_fidelity',
    'monte_carlo_fidelity',
    'haar_states',
    'FidelityReport',
    'fidelity_report',
    'DepolMatch',
    'match_depol_probability',
    'GateNoiseModel',
    'GATE_ARITY',
    'VIRTUAL_KINDS',
]
