"""
Командная строка лаборатории.

Подкоманды:
    generate     - сгенерировать набор экземпляров
    run          - исполнить матрицу прогонов, записать CSV
    report       - построить агрегированную таблицу по CSV результатов
    sweep-noise  - прогнать матрицу и записать сетки относительного преимущества
"""

from typing import List, Optional
from pathlib import Path
import argparse
import logging
import sys

from ..core.errors import LabError
from .config import ExperimentConfig, PRESETS
from .suite import build_suite, save_suite, load_suite
from .orchestrator import run_matrix
from .reports import REPORT_KINDS, load_records, report, write_report


logger = logging.getLogger(__name__)

EPILOG = """
Примеры:
  %(prog)s generate --preset desk --out instances/
  %(prog)s run --config configs/desk.json --instances instances/ --out results.csv --jobs 4
  %(prog)s report --in results.csv --kind quality-by-layers --out quality.csv
  %(prog)s report --in results.csv --kind baselines --instances instances/ --out baselines.csv
  %(prog)s sweep-noise --preset desk --out sweep/

Виды отчётов:
  quality-by-layers   - качество по числу слоёв
  quality-by-n        - качество по размеру задачи
  quality-vs-runtime  - качество и оценка времени
  advantage-grid      - отношение качества p / (p-1) по сетке шума
  baselines           - случайное угадывание и тёплый старт
  best-layers         - лучшее p для каждой ячейки шума
"""


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    """Конфигурация из --config или --preset с учётом --seed и --jobs."""
    if args.config:
        cfg = ExperimentConfig.load(args.config)
    else:
        cfg = ExperimentConfig.preset(args.preset)
    return cfg.with_overrides(seed=args.seed, jobs=args.jobs)


def cmd_generate(args: argparse.Namespace) -> int:
    cfg = load_config(args)
    entries = build_suite(cfg)
    paths = save_suite(entries, args.out)
    print(f"Сгенерировано {len(paths)} экземпляров в {args.out}")
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    cfg = load_config(args)
    entries = load_suite(args.instances) if args.instances else None
    print(cfg)
    result = run_matrix(cfg, entries, out=args.out)
    print(result.summary())
    print(f"Результаты: {args.out}")
    if args.summary:
        result.save_json(args.summary)
    return 1 if result.errors else 0


def cmd_report(args: argparse.Namespace) -> int:
    entries = load_suite(args.instances) if args.instances else None
    records = load_records(args.input) if args.input else []
    table = report(records, args.kind, entries=entries, metric=args.metric)
    write_report(table, args.out)
    print(f"Отчёт {args.kind}: {len(table)} строк → {args.out}")
    return 0


def cmd_sweep_noise(args: argparse.Namespace) -> int:
    cfg = load_config(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    entries = load_suite(args.instances) if args.instances else None
    result = run_matrix(cfg, entries, out=out / 'results.csv')
    print(result.summary())
    table = report(result.records, 'advantage-grid')
    write_report(table, out / 'advantage_grid.csv')
    print(f"Сетки преимущества: {len(table)} строк → {out / 'advantage_grid.csv'}")
    return 1 if result.errors else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qaoa_lab',
        description='Сравнение вариантов QAOA на зашумлённом симуляторе матриц плотности',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Подробнее: -v INFO, -vv DEBUG')
    sub = parser.add_subparsers(dest='command', required=True)

    def experiment_args(p: argparse.ArgumentParser) -> None:
        source = p.add_mutually_exclusive_group()
        source.add_argument('--config', type=Path, help='JSON конфигурации')
        source.add_argument('--preset', choices=PRESETS, default='desk',
                            help='Готовая конфигурация (по умолчанию: desk)')
        p.add_argument('--seed', type=int, default=None, help='Главное зерно')
        p.add_argument('--jobs', type=int, default=None, help='Число процессов')

    gen = sub.add_parser('generate', help='Сгенерировать экземпляры')
    experiment_args(gen)
    gen.add_argument('--out', type=Path, required=True, help='Каталог экземпляров')
    gen.set_defaults(handler=cmd_generate)

    run = sub.add_parser('run', help='Исполнить матрицу прогонов')
    experiment_args(run)
    run.add_argument('--instances', type=Path, default=None,
                     help='Каталог экземпляров (по умолчанию генерируется из конфигурации)')
    run.add_argument('--out', type=Path, required=True, help='CSV результатов')
    run.add_argument('--summary', type=Path, default=None, help='JSON резюме прогона')
    run.set_defaults(handler=cmd_run)

    rep = sub.add_parser('report', help='Агрегированная таблица')
    rep.add_argument('--in', dest='input', type=Path, default=None, help='CSV результатов')
    rep.add_argument('--kind', choices=REPORT_KINDS, required=True, help='Вид отчёта')
    rep.add_argument('--instances', type=Path, default=None, help='Каталог экземпляров (для baselines)')
    rep.add_argument('--metric', choices=('sum', 'cardinality'), default='sum',
                     help='Мера качества partition (для baselines)')
    rep.add_argument('--out', type=Path, required=True, help='CSV отчёта')
    rep.set_defaults(handler=cmd_report)

    sweep = sub.add_parser('sweep-noise', help='Матрица и сетки относительного преимущества')
    experiment_args(sweep)
    sweep.add_argument('--instances', type=Path, default=None, help='Каталог экземпляров')
    sweep.add_argument('--out', type=Path, required=True, help='Выходной каталог')
    sweep.set_defaults(handler=cmd_sweep_noise)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        return args.handler(args)
    except LabError as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"Ошибка: {e}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
