"""Инициализация модуля problems."""

from .instances import (
    ProblemInstance,
    PROBLEM_KINDS,
    gen_graph,
    gen_partition,
    generate,
    save_instance,
    load_instance,
)
from .encodings import encode, encode_maxcut, encode_partition, encode_vertexcover
from .oracle import (
    BruteForceResult,
    brute_force,
    measure_table,
    quality_table,
    quality,
    average_quality,
    random_guess_quality,
    assignment_cover,
)
from .warmstart import (
    warmstart,
    ws_thetas,
    warmstart_quality,
    burer_monteiro,
    greedy_partition,
    matching_cover,
)

__all__ = [
    'ProblemInstance',
    'PROBLEM_KINDS',
    'gen_graph',
    'gen_partition',
    'generate',
    'save_instance',
    'load_instance',
    'encode',
    'encode_maxcut',
    'encode_partition',
    'encode_vertexcover',
    'BruteForceResult',
    'brute_force',
    'measure_table',
    'quality_table',
    'quality',
    'average_quality',
    'random_guess_quality',
    'assignment_cover',
    'warmstart',
    'ws_thetas',
    'warmstart_quality',
    'burer_monteiro',
    'greedy_partition',
    'matching_cover',
]
