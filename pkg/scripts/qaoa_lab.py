#!/usr/bin/env python3
"""
Запуск лаборатории QAOA из корня репозитория.

Использование:
    python scripts/qaoa_lab.py generate --preset desk --out instances/
    python scripts/qaoa_lab.py run --preset desk --instances instances/ --out results.csv
    python scripts/qaoa_lab.py report --in results.csv --kind quality-by-layers --out quality.csv
    python scripts/qaoa_lab.py sweep-noise --config configs/desk.json --out sweep/
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.bench.cli import main


if __name__ == '__main__':
    sys.exit(main())
