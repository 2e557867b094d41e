"""
Агрегированные таблицы по результатам матрицы.

Виды отчётов:
    quality-by-layers   - среднее качество по p (задача, вариант, ячейка шума)
    quality-by-n        - среднее качество по n
    quality-vs-runtime  - среднее качество и время по (вариант, p, n, ячейка шума)
    advantage-grid      - отношение качества при p и p-1 по сетке шума
    baselines           - случайное угадывание и тёплый старт по (задача, n)
    best-layers         - лучшее p для (задача, вариант, ячейка шума)

Все значения - точные средние по строкам без ошибок.
"""

from typing import List, Optional, Sequence, Union
from dataclasses import asdict
from pathlib import Path
import logging

import numpy as np
import pandas as pd

from ..core.errors import ArgumentError
from ..problems.oracle import random_guess_quality
from ..problems.warmstart import warmstart_quality
from .orchestrator import ResultRecord, CSV_COLUMNS
from .suite import SuiteEntry


logger = logging.getLogger(__name__)

REPORT_KINDS = (
    'quality-by-layers', 'quality-by-n', 'quality-vs-runtime',
    'advantage-grid', 'baselines', 'best-layers',
)
NOISE_KEYS = ['d_depol', 'd_thermal']


def records_frame(records: Union[Sequence[ResultRecord], pd.DataFrame]) -> pd.DataFrame:
    """Записи как DataFrame со столбцами CSV."""
    if isinstance(records, pd.DataFrame):
        return records
    return _coerce(pd.DataFrame([asdict(r) for r in records], columns=CSV_COLUMNS))


def _coerce(df: pd.DataFrame) -> pd.DataFrame:
    for column in ('n', 'seed', 'p', 'repeats'):
        df[column] = df[column].astype(int)
    for column in ('d_depol', 'd_thermal', 'avg_quality', 'energy', 'optimizer_evals',
                   'quantum_time_est_s', 'classical_time_s'):
        df[column] = df[column].astype(float)
    df['error'] = df['error'].fillna('').astype(str)
    return df


def load_records(path: Union[str, Path]) -> pd.DataFrame:
    """Прочитать CSV результатов."""
    df = pd.read_csv(path, keep_default_na=False, na_values={c: ['nan'] for c in CSV_COLUMNS if c != 'error'})
    return _coerce(df)


def read_records(path: Union[str, Path]) -> List[ResultRecord]:
    """Прочитать CSV результатов обратно в записи."""
    types = ResultRecord.__annotations__
    return [
        ResultRecord(**{name: types[name](value) for name, value in row.items()})
        for row in load_records(path)[CSV_COLUMNS].to_dict('records')
    ]


def successful(df: pd.DataFrame) -> pd.DataFrame:
    ok = df[df['error'] == '']
    if len(ok) < len(df):
        logger.info("ignoring %d failed cells", len(df) - len(ok))
    return ok


def quality_by(df: pd.DataFrame, axis: str) -> pd.DataFrame:
    """Среднее качество по оси axis внутри (задача, вариант, ячейка шума)."""
    keys = ['problem', 'variant'] + NOISE_KEYS + [axis]
    grouped = successful(df).groupby(keys, sort=True)['avg_quality']
    return grouped.agg(mean_quality='mean', instances='count').reset_index()


def quality_vs_runtime(df: pd.DataFrame) -> pd.DataFrame:
    """Точки качество/время, по строке на (вариант, p, n), задачу и ячейку шума."""
    ok = successful(df)
    table = ok.groupby(['variant', 'p', 'n', 'problem'] + NOISE_KEYS, sort=True).agg(
        mean_quality=('avg_quality', 'mean'),
        mean_quantum_time_s=('quantum_time_est_s', 'mean'),
        mean_classical_time_s=('classical_time_s', 'mean'),
        instances=('avg_quality', 'count'),
    ).reset_index()
    table['mean_runtime_s'] = table['mean_quantum_time_s'] + table['mean_classical_time_s']
    return table


def relative_advantage(df: pd.DataFrame, variant: str, problem: str, p: int) -> pd.DataFrame:
    """
    Отношение среднего качества при p слоях к среднему при p-1 по сетке шума.

    Ячейки, для которых нет данных при p или p-1, остаются в таблице
    с пустым отношением (present = False).

    Returns:
        Строка на каждую пару (d_depol, d_thermal) сетки данных
    """
    if p < 2:
        raise ArgumentError(f"relative advantage needs p >= 2, got {p}")
    ok = successful(df)
    subset = ok[(ok['variant'] == variant) & (ok['problem'] == problem)]
    grid = pd.MultiIndex.from_product(
        [sorted(df['d_depol'].unique()), sorted(df['d_thermal'].unique())], names=NOISE_KEYS)
    means = subset.groupby(NOISE_KEYS + ['p'])['avg_quality'].mean()

    def at(layers: int) -> pd.Series:
        if layers in means.index.get_level_values('p'):
            return means.xs(layers, level='p').reindex(grid)
        return pd.Series(np.nan, index=grid)

    table = pd.DataFrame({'mean_quality_p': at(p), 'mean_quality_prev': at(p - 1)}, index=grid)
    table['ratio'] = table['mean_quality_p'] / table['mean_quality_prev']
    table['present'] = table[['mean_quality_p', 'mean_quality_prev']].notna().all(axis=1)
    table = table.reset_index()
    table.insert(0, 'p', p)
    table.insert(0, 'variant', variant)
    table.insert(0, 'problem', problem)
    return table


def advantage_grids(df: pd.DataFrame) -> pd.DataFrame:
    """Сетки относительного преимущества для всех (задача, вариант, p ≥ 2)."""
    frames = []
    for problem in sorted(df['problem'].unique()):
        for variant in sorted(df['variant'].unique()):
            layers = sorted(df[(df['problem'] == problem) & (df['variant'] == variant)]['p'].unique())
            for p in layers:
                if p >= 2:
                    frames.append(relative_advantage(df, variant, problem, int(p)))
    if not frames:
        return pd.DataFrame(columns=['problem', 'variant', 'p'] + NOISE_KEYS +
                            ['mean_quality_p', 'mean_quality_prev', 'ratio', 'present'])
    return pd.concat(frames, ignore_index=True)


def best_layers(df: pd.DataFrame) -> pd.DataFrame:
    """p с наибольшим средним качеством для (задача, вариант, ячейка шума)."""
    by_layers = quality_by(df, 'p')
    best = by_layers.loc[by_layers.groupby(['problem', 'variant'] + NOISE_KEYS)['mean_quality'].idxmax()]
    return best.rename(columns={'p': 'best_p'}).reset_index(drop=True)


def baselines(entries: Sequence[SuiteEntry], metric: str = 'sum') -> pd.DataFrame:
    """Качество случайного угадывания и тёплого старта по (задача, n)."""
    rows = [
        {
            'problem': e.problem,
            'n': e.n,
            'random_guess': random_guess_quality(e.instance, metric),
            'warmstart': warmstart_quality(e.instance),
        }
        for e in entries
    ]
    df = pd.DataFrame(rows, columns=['problem', 'n', 'random_guess', 'warmstart'])
    return df.groupby(['problem', 'n'], sort=True).agg(
        random_guess=('random_guess', 'mean'),
        warmstart=('warmstart', 'mean'),
        instances=('random_guess', 'count'),
    ).reset_index()


def report(
    records: Union[Sequence[ResultRecord], pd.DataFrame],
    kind: str,
    entries: Optional[Sequence[SuiteEntry]] = None,
    metric: str = 'sum'
) -> pd.DataFrame:
    """
    Таблица отчёта заданного вида.

    Args:
        records: Записи или DataFrame результатов
        kind: Вид отчёта из REPORT_KINDS
        entries: Набор экземпляров (только для baselines)
        metric: Мера качества partition для baselines

    Raises:
        ArgumentError: неизвестный вид, пустые данные, нет набора для baselines
    """
    if kind not in REPORT_KINDS:
        raise ArgumentError(f"unknown report kind '{kind}', expected one of {REPORT_KINDS}")
    if kind == 'baselines':
        if not entries:
            raise ArgumentError("baselines report needs the instance suite")
        return baselines(entries, metric)
    df = records_frame(records)
    if df.empty:
        raise ArgumentError("no records to report on")
    if kind == 'quality-by-layers':
        return quality_by(df, 'p')
    if kind == 'quality-by-n':
        return quality_by(df, 'n')
    if kind == 'quality-vs-runtime':
        return quality_vs_runtime(df)
    if kind == 'advantage-grid':
        return advantage_grids(df)
    return best_layers(df)


def write_report(table: pd.DataFrame, path: Union[str, Path]) -> None:
    """Записать таблицу в CSV (12 значащих цифр)."""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    table.to_csv(path, index=False, float_format='%.12g')
