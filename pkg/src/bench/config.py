"""
Конфигурация эксперимента.

JSON-файл конфигурации повторяет поля ExperimentConfig один к одному,
базовые параметры шума - вложенный объект "noise".
"""

from typing import List, Dict, Any, Iterator, Tuple, Union
from dataclasses import dataclass, field, fields, replace
from itertools import product
from pathlib import Path
import json

from ..core.errors import ArgumentError, ValidationError
from ..noise.params import NoiseParams, baseline_params, scale_params
from ..problems.instances import PROBLEM_KINDS
from ..problems.oracle import PARTITION_METRICS
from ..qaoa.variational import VariantConfig, ALL_VARIANTS
from ..qaoa.optimizer import DEFAULT_TOLERANCE, DEFAULT_MAX_EVALS


NOISE_GRID = [0.0, 0.25, 0.5, 0.75, 1.0]
PRESETS = ('desk', 'paper')


@dataclass
class ExperimentConfig:
    """
    Конфигурация матрицы прогонов

    Attributes:
        problems: Задачи
        sizes: Размеры n
        instances_per_size: Экземпляров на (задачу, n)
        variants: Варианты алгоритма
        layers: Числа слоёв p
        d_depol: Масштабы деполяризации
        d_thermal: Масштабы тепловой релаксации
        shots_per_iteration: Измерений на вычисление целевой функции
        seed: Главное зерно
        jobs: Число процессов
        repeats: Прогонов на ячейку
        tolerance: Конечный радиус COBYLA
        max_evals: Лимит вычислений целевой функции
        rqaoa_samples: Измерений на шаг рекурсии
        rqaoa_cutoff: Остаток рекурсии, решаемый перебором
        edge_prob: Вероятность ребра случайного графа
        metric: Мера качества partition
        noise: Базовые параметры шума (масштабы 1)
    """
    problems: List[str] = field(default_factory=lambda: list(PROBLEM_KINDS))
    sizes: List[int] = field(default_factory=lambda: [5, 6, 7, 8, 9, 10])
    instances_per_size: int = 100
    variants: List[str] = field(default_factory=lambda: list(ALL_VARIANTS))
    layers: List[int] = field(default_factory=lambda: [1, 2, 3, 4])
    d_depol: List[float] = field(default_factory=lambda: list(NOISE_GRID))
    d_thermal: List[float] = field(default_factory=lambda: list(NOISE_GRID))
    shots_per_iteration: int = 1000
    seed: int = 0
    jobs: int = 1
    repeats: int = 3
    tolerance: float = DEFAULT_TOLERANCE
    max_evals: int = DEFAULT_MAX_EVALS
    rqaoa_samples: int = 10
    rqaoa_cutoff: int = 1
    edge_prob: float = 0.5
    metric: str = 'sum'
    noise: NoiseParams = field(default_factory=baseline_params)

    def validate(self) -> None:
        """
        Проверить конфигурацию.

        Raises:
            ValidationError: пустые списки, неизвестные значения
        """
        for name in ('problems', 'sizes', 'variants', 'layers', 'd_depol', 'd_thermal'):
            if not getattr(self, name):
                raise ValidationError(f"config list '{name}' must not be empty")
        unknown = [p for p in self.problems if p not in PROBLEM_KINDS]
        if unknown:
            raise ValidationError(f"unknown problems {unknown}")
        unknown = [v for v in self.variants if v not in ALL_VARIANTS]
        if unknown:
            raise ValidationError(f"unknown variants {unknown}")
        if any(p < 1 for p in self.layers):
            raise ValidationError(f"layer counts must be positive, got {self.layers}")
        if any(n < 2 for n in self.sizes):
            raise ValidationError(f"instance sizes must be at least 2, got {self.sizes}")
        if any(d < 0 for d in self.d_depol + self.d_thermal):
            raise ValidationError("noise scales must be non-negative")
        if self.instances_per_size < 1 or self.jobs < 1:
            raise ValidationError("instances_per_size and jobs must be positive")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValidationError(f"edge probability {self.edge_prob} outside [0, 1]")
        if self.metric not in PARTITION_METRICS:
            raise ValidationError(f"unknown partition metric '{self.metric}'")
        try:
            self.variant_config(self.variants[0], self.layers[0])
        except ArgumentError as e:
            raise ValidationError(str(e)) from e

    def variant_config(self, variant: str, layers: int) -> VariantConfig:
        """Настройки одного варианта при p = layers."""
        return VariantConfig(
            variant=variant,
            layers=layers,
            tolerance=self.tolerance,
            max_evals=self.max_evals,
            repeats=self.repeats,
            rqaoa_samples=self.rqaoa_samples,
            rqaoa_cutoff=self.rqaoa_cutoff,
            shots=self.shots_per_iteration,
            metric=self.metric,
        )

    def noise_cells(self) -> Iterator[Tuple[float, float]]:
        """Декартова сетка (d_depol, d_thermal)."""
        return product(self.d_depol, self.d_thermal)

    def noise_at(self, d_depol: float, d_thermal: float) -> NoiseParams:
        return scale_params(self.noise, d_depol, d_thermal)

    def cell_count(self) -> int:
        instances = len(self.problems) * len(self.sizes) * self.instances_per_size
        return instances * len(self.variants) * len(self.layers) * len(self.d_depol) * len(self.d_thermal)

    def to_dict(self) -> Dict[str, Any]:
        """Сериализация в словарь"""
        data = {f.name: getattr(self, f.name) for f in fields(self) if f.name != 'noise'}
        data = {k: list(v) if isinstance(v, list) else v for k, v in data.items()}
        data['noise'] = self.noise.to_dict()
        return data

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> 'ExperimentConfig':
        known = {f.name for f in fields(ExperimentConfig)}
        unknown = set(data) - known
        if unknown:
            raise ValidationError(f"unknown config fields {sorted(unknown)}")
        kwargs = dict(data)
        if 'noise' in kwargs:
            kwargs['noise'] = NoiseParams.from_dict(kwargs['noise'])
        config = ExperimentConfig(**kwargs)
        config.validate()
        return config

    @staticmethod
    def load(path: Union[str, Path]) -> 'ExperimentConfig':
        with open(path, 'r', encoding='utf-8') as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                raise ValidationError(f"{path}: malformed config ({e})")
        return ExperimentConfig.from_dict(data)

    def save(self, path: Union[str, Path]) -> None:
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, indent=2)

    @staticmethod
    def preset(name: str) -> 'ExperimentConfig':
        """
        Готовые конфигурации.

        desk: n ∈ {5, 6, 7}, 20 экземпляров, p ∈ {1, 2}; сетка шума сужена
            до углов {0, 1} × {0, 1}, поэтому sweep-noise даёт сетки 2×2
        paper: n ∈ {5..10}, 100 экземпляров, p ∈ {1..4}, полная сетка шума
        """
        if name == 'paper':
            return ExperimentConfig()
        if name == 'desk':
            return ExperimentConfig(
                sizes=[5, 6, 7],
                instances_per_size=20,
                layers=[1, 2],
                d_depol=[0.0, 1.0],
                d_thermal=[0.0, 1.0],
            )
        raise ArgumentError(f"unknown preset '{name}', expected one of {PRESETS}")

    def with_overrides(self, **changes: Any) -> 'ExperimentConfig':
        """Копия с изменёнными полями (None пропускается)."""
        config = replace(self, **{k: v for k, v in changes.items() if v is not None})
        config.validate()
        return config

    def __str__(self) -> str:
        return (f"ExperimentConfig(problems={self.problems}, sizes={self.sizes}, "
                f"instances={self.instances_per_size}, variants={self.variants}, "
                f"p={self.layers}, grid={len(self.d_depol)}x{len(self.d_thermal)}, "
                f"seed={self.seed}, cells={self.cell_count()})")
