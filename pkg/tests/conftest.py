"""Общие настройки тестов."""

import os

import pytest


SLOW_ENV = 'QAOA_LAB_SLOW'


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale trend checks (включаются QAOA_LAB_SLOW=1)")


def pytest_collection_modifyitems(config, items):
    if os.environ.get(SLOW_ENV) == '1':
        return
    skip = pytest.mark.skip(reason=f"set {SLOW_ENV}=1 to run desk-scale checks")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)
