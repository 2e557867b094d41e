"""
Набор экземпляров эксперимента.

Зерно экземпляра - хеш (главное зерно, задача, n, номер), поэтому
набор не меняется при правке других полей конфигурации.
"""

from typing import List, Union
from dataclasses import dataclass
from pathlib import Path
import hashlib
import logging
import re

from ..core.errors import ValidationError
from ..problems.instances import ProblemInstance, generate, save_instance, load_instance
from .config import ExperimentConfig


logger = logging.getLogger(__name__)

_ID_PATTERN = re.compile(r'^(?P<problem>[a-z]+)-n(?P<n>\d+)-(?P<index>\d+)$')


def derive_seed(*parts: object) -> int:
    """32-битное зерно из хеша SHA-256 частей."""
    key = ':'.join(str(p) for p in parts).encode('utf-8')
    return int.from_bytes(hashlib.sha256(key).digest()[:4], 'little')


def instance_seed(master: int, problem: str, n: int, index: int) -> int:
    return derive_seed(master, problem, n, index)


@dataclass(frozen=True)
class SuiteEntry:
    """
    Экземпляр в наборе.

    Attributes:
        problem: Задача
        n: Размер
        index: Номер экземпляра среди (задача, n)
        instance: Сам экземпляр
    """
    problem: str
    n: int
    index: int
    instance: ProblemInstance

    @property
    def instance_id(self) -> str:
        return f"{self.problem}-n{self.n}-{self.index:03d}"


def build_suite(cfg: ExperimentConfig) -> List[SuiteEntry]:
    """Все экземпляры конфигурации в порядке (задача, n, номер)."""
    entries = []
    for problem in cfg.problems:
        for n in cfg.sizes:
            for index in range(cfg.instances_per_size):
                seed = instance_seed(cfg.seed, problem, n, index)
                entries.append(SuiteEntry(problem, n, index, generate(problem, n, seed, cfg.edge_prob)))
    logger.info("generated %d instances (seed %d)", len(entries), cfg.seed)
    return entries


def save_suite(entries: List[SuiteEntry], directory: Union[str, Path]) -> List[Path]:
    """Записать экземпляры в каталог, файл на экземпляр."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for entry in entries:
        path = directory / f"{entry.instance_id}.json"
        save_instance(entry.instance, path)
        paths.append(path)
    return paths


def load_suite(directory: Union[str, Path]) -> List[SuiteEntry]:
    """
    Прочитать набор, записанный save_suite.

    Raises:
        ValidationError: имя файла не соответствует экземпляру
    """
    entries = []
    for path in sorted(Path(directory).glob('*.json')):
        match = _ID_PATTERN.match(path.stem)
        if match is None:
            raise ValidationError(f"{path.name}: not an instance file name")
        inst = load_instance(path)
        if inst.kind != match['problem'] or inst.n != int(match['n']):
            raise ValidationError(f"{path.name}: file name does not match its {inst.kind} instance")
        entries.append(SuiteEntry(inst.kind, inst.n, int(match['index']), inst))
    entries.sort(key=lambda e: (e.problem, e.n, e.index))
    logger.info("loaded %d instances from %s", len(entries), directory)
    return entries
