"""Инициализация модуля qaoa."""

from .optimizer import minimize, OptimizeOutcome, DEFAULT_TOLERANCE, DEFAULT_MAX_EVALS
from .variational import (
    QaoaParams,
    VariantConfig,
    Trial,
    RunResult,
    QaoaObjective,
    ALL_VARIANTS,
    optimize_model,
    run_variational,
    is_noiseless,
)
from .recursive import (
    EliminationRecord,
    RecursionTrace,
    expected_term_values,
    select_term,
    record_for,
    eliminate,
    back_substitute,
    constraints_satisfied,
    solve_exactly,
    run_rqaoa,
    run_variant,
)

__all__ = [
    'minimize',
    'OptimizeOutcome',
    'DEFAULT_TOLERANCE',
    'DEFAULT_MAX_EVALS',
    'QaoaParams',
    'VariantConfig',
    'Trial',
    'RunResult',
    'QaoaObjective',
    'ALL_VARIANTS',
    'optimize_model',
    'run_variational',
    'is_noiseless',
    'EliminationRecord',
    'RecursionTrace',
    'expected_term_values',
    'select_term',
    'record_for',
    'eliminate',
    'back_substitute',
    'constraints_satisfied',
    'solve_exactly',
    'run_rqaoa',
    'run_variant',
]
