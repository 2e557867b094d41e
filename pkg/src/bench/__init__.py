"""Инициализация модуля bench."""

from ..circuits.schedule import estimate_quantum_time, estimate_recursive_time
from .config import ExperimentConfig, NOISE_GRID, PRESETS
from .suite import SuiteEntry, derive_seed, instance_seed, build_suite, save_suite, load_suite
from .orchestrator import (
    Cell,
    ResultRecord,
    MatrixResult,
    RecordWriter,
    RECORD_COLUMNS,
    CSV_COLUMNS,
    WALL_CLOCK_COLUMNS,
    build_cells,
    run_cell,
    run_matrix,
)
from .reports import (
    REPORT_KINDS,
    records_frame,
    load_records,
    read_records,
    quality_by,
    quality_vs_runtime,
    relative_advantage,
    advantage_grids,
    best_layers,
    baselines,
    report,
    write_report,
)

__all__ = [
    'estimate_quantum_time',
    'estimate_recursive_time',
    'ExperimentConfig',
    'NOISE_GRID',
    'PRESETS',
    'SuiteEntry',
    'derive_seed',
    'instance_seed',
    'build_suite',
    'save_suite',
    'load_suite',
    'Cell',
    'ResultRecord',
    'MatrixResult',
    'RecordWriter',
    'RECORD_COLUMNS',
    'CSV_COLUMNS',
    'WALL_CLOCK_COLUMNS',
    'build_cells',
    'run_cell',
    'run_matrix',
    'read_records',
    'REPORT_KINDS',
    'records_frame',
    'load_records',
    'quality_by',
    'quality_vs_runtime',
    'relative_advantage',
    'advantage_grids',
    'best_layers',
    'baselines',
    'report',
    'write_report',
]
