"""
Оркестратор матрицы прогонов.

Ячейка матрицы - (экземпляр, вариант, p, d_depol, d_thermal).
Ячейки исполняются пулом процессов; результаты собираются в порядке
постановки и сразу дописываются в CSV. Ошибка ячейки записывается
в столбец error, прогон продолжается.
"""

from typing import List, Dict, Optional, Any, Iterator, Union, TextIO
from dataclasses import dataclass, field, asdict
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
import csv
import json
import logging
import math
import time

from ..qaoa.recursive import run_variant
from .config import ExperimentConfig
from .suite import SuiteEntry, build_suite, derive_seed


logger = logging.getLogger(__name__)

RECORD_COLUMNS = [
    'problem', 'n', 'instance_id', 'seed', 'variant', 'p', 'd_depol', 'd_thermal',
    'avg_quality', 'energy', 'optimizer_evals', 'quantum_time_est_s', 'classical_time_s', 'repeats',
]
CSV_COLUMNS = RECORD_COLUMNS + ['error']
WALL_CLOCK_COLUMNS = ('classical_time_s',)


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


@dataclass(frozen=True)
class Cell:
    """
    Ячейка матрицы.

    Attributes:
        entry: Экземпляр
        variant: Вариант
        p: Число слоёв
        d_depol: Масштаб деполяризации
        d_thermal: Масштаб релаксации
        run_seed: Зерно начальных точек; общее для всех ячеек шума
            одного (экземпляр, вариант, p)
    """
    entry: SuiteEntry
    variant: str
    p: int
    d_depol: float
    d_thermal: float
    run_seed: int


@dataclass
class ResultRecord:
    """Строка результатов (одна на ячейку, средние по повторам)."""
    problem: str
    n: int
    instance_id: str
    seed: int
    variant: str
    p: int
    d_depol: float
    d_thermal: float
    avg_quality: float = math.nan
    energy: float = math.nan
    optimizer_evals: float = math.nan
    quantum_time_est_s: float = math.nan
    classical_time_s: float = math.nan
    repeats: int = 0
    error: str = ''

    @property
    def ok(self) -> bool:
        return not self.error

    def to_row(self) -> List[str]:
        """Значения в порядке CSV_COLUMNS, числа с 12 значащими цифрами."""
        data = asdict(self)
        return [_fmt(data[c]) for c in CSV_COLUMNS]


def build_cells(cfg: ExperimentConfig, entries: List[SuiteEntry]) -> List[Cell]:
    """Все ячейки в порядке (экземпляр, вариант, p, d_depol, d_thermal)."""
    cells = []
    for entry in entries:
        for variant in cfg.variants:
            for p in cfg.layers:
                run_seed = derive_seed(cfg.seed, entry.instance_id, variant, p)
                for d_depol, d_thermal in cfg.noise_cells():
                    cells.append(Cell(entry, variant, p, float(d_depol), float(d_thermal), run_seed))
    return cells


def run_cell(cell: Cell, cfg: ExperimentConfig) -> ResultRecord:
    """Исполнить одну ячейку; ошибки попадают в record.error."""
    entry = cell.entry
    record = ResultRecord(
        problem=entry.problem,
        n=entry.n,
        instance_id=entry.instance_id,
        seed=entry.instance.seed if entry.instance.seed is not None else -1,
        variant=cell.variant,
        p=cell.p,
        d_depol=cell.d_depol,
        d_thermal=cell.d_thermal,
    )
    try:
        noise = cfg.noise_at(cell.d_depol, cell.d_thermal)
        result = run_variant(entry.instance, cfg.variant_config(cell.variant, cell.p), noise, cell.run_seed)
        record.avg_quality = result.avg_quality
        record.energy = result.energy
        record.optimizer_evals = result.optimizer_evals
        record.quantum_time_est_s = result.quantum_time_est
        record.classical_time_s = result.classical_time
        record.repeats = result.repeats
    except Exception as e:
        record.error = f"{type(e).__name__}: {e}"
        logger.warning("cell %s/%s p=%d (%g, %g) failed: %s", entry.instance_id, cell.variant,
                       cell.p, cell.d_depol, cell.d_thermal, record.error)
    return record


def _run_cell_task(task) -> ResultRecord:
    cell, cfg = task
    return run_cell(cell, cfg)


def iter_records(cfg: ExperimentConfig, cells: List[Cell], jobs: int = 1) -> Iterator[ResultRecord]:
    """Результаты ячеек в порядке cells (при любом jobs)."""
    tasks = [(cell, cfg) for cell in cells]
    if jobs <= 1:
        yield from map(_run_cell_task, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_run_cell_task, tasks)


class RecordWriter:
    """Потоковая запись результатов в CSV."""

    def __init__(self, stream: TextIO):
        self.stream = stream
        self.writer = csv.writer(stream, lineterminator='\n')
        self.writer.writerow(CSV_COLUMNS)

    def write(self, record: ResultRecord) -> None:
        self.writer.writerow(record.to_row())
        self.stream.flush()


@dataclass
class MatrixResult:
    """Итог прогона матрицы"""
    config: ExperimentConfig
    records: List[ResultRecord] = field(default_factory=list)
    instances: int = 0
    execution_time: float = 0.0
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    def mean_quality(self) -> Dict[str, float]:
        """Среднее качество по вариантам (без ячеек с ошибкой)."""
        groups: Dict[str, List[float]] = {}
        for r in self.records:
            if r.ok:
                groups.setdefault(r.variant, []).append(r.avg_quality)
        return {v: sum(q) / len(q) for v, q in groups.items()}

    def summary(self) -> str:
        """Краткое резюме прогона"""
        lines = [
            "=" * 70,
            "РЕЗУЛЬТАТЫ МАТРИЦЫ ПРОГОНОВ",
            "=" * 70,
            "",
            f"Задачи: {', '.join(self.config.problems)}",
            f"Размеры: {self.config.sizes}",
            f"Экземпляров: {self.instances}",
            f"Ячеек: {len(self.records)}",
            "",
            "Среднее качество по вариантам:",
        ]
        for variant, value in sorted(self.mean_quality().items()):
            lines.append(f"  • {variant}: {value:.4f}")
        lines.extend([
            "",
            f"Время выполнения: {self.execution_time:.2f} сек",
            f"Ошибок: {len(self.errors)}",
            f"Предупреждений: {len(self.warnings)}",
            "=" * 70,
        ])
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "cells": len(self.records),
            "instances": self.instances,
            "mean_quality": self.mean_quality(),
            "meta": {
                "execution_time": self.execution_time,
                "errors": self.errors,
                "warnings": self.warnings,
            },
        }

    def save_json(self, filepath: Union[str, Path]) -> None:
        """Сохранить резюме в JSON"""
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, indent=2, ensure_ascii=False)


def run_matrix(
    cfg: ExperimentConfig,
    entries: Optional[List[SuiteEntry]] = None,
    out: Optional[Union[str, Path, TextIO]] = None,
    jobs: Optional[int] = None
) -> MatrixResult:
    """
    Исполнить всю матрицу прогонов.

    Args:
        cfg: Конфигурация
        entries: Набор экземпляров (по умолчанию строится из cfg)
        out: Путь или поток для CSV результатов
        jobs: Число процессов (по умолчанию cfg.jobs)

    Returns:
        MatrixResult
    """
    cfg.validate()
    start = time.time()
    entries = build_suite(cfg) if entries is None else entries
    cells = build_cells(cfg, entries)
    result = MatrixResult(config=cfg, instances=len(entries))
    if not entries:
        result.warnings.append("empty instance suite")

    stream = None
    close = False
    if isinstance(out, (str, Path)):
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        stream = open(out, 'w', encoding='utf-8', newline='')
        close = True
    elif out is not None:
        stream = out
    writer = RecordWriter(stream) if stream is not None else None

    try:
        for k, record in enumerate(iter_records(cfg, cells, jobs or cfg.jobs), start=1):
            result.records.append(record)
            if writer is not None:
                writer.write(record)
            if not record.ok:
                result.errors.append(f"{record.instance_id}/{record.variant}/p={record.p}/"
                                     f"({record.d_depol:g}, {record.d_thermal:g}): {record.error}")
            logger.info("cell %d/%d %s %s p=%d (%g, %g) quality=%.4f", k, len(cells), record.instance_id,
                        record.variant, record.p, record.d_depol, record.d_thermal, record.avg_quality)
    finally:
        if close:
            stream.close()

    result.execution_time = time.time() - start
    return result


def demo():
    """Демонстрация: маленькая матрица на max-cut"""
    print("=" * 70)
    print("ДЕМОНСТРАЦИЯ: Матрица прогонов QAOA")
    print("=" * 70)
    print()

    config = ExperimentConfig(
        problems=['maxcut'],
        sizes=[5],
        instances_per_size=2,
        variants=['standard', 'wsqaoa', 'rqaoa'],
        layers=[1],
        d_depol=[0.0, 1.0],
        d_thermal=[0.0, 1.0],
        repeats=1,
    )

    print("Конфигурация:")
    print(f"  • Варианты: {', '.join(config.variants)}")
    print(f"  • Сетка шума: {config.d_depol} × {config.d_thermal}")
    print(f"  • Ячеек: {config.cell_count()}")
    print()

    print("Запуск матрицы...")
    print("-" * 70)
    result = run_matrix(config)
    for r in result.records:
        print(f"  {r.instance_id} {r.variant:8s} ({r.d_depol:g}, {r.d_thermal:g}) "
              f"q={r.avg_quality:.4f} t_q={r.quantum_time_est_s:.3g}s")
    print("-" * 70)
    print()
    print(result.summary())


if __name__ == "__main__":
    demo()
