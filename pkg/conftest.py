import json

import pytest

from factum.textmodel import DatasetItem


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False,
                     help='also run the exhaustive tests marked slow')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: exhaustive checks, run with --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def write_dataset(tmp_path):
    '''Write DatasetItems (or raw JSON lines) to a JSON-lines file and return its path.'''
    def write(items, name='data.jsonl'):
        path = tmp_path / name
        lines = []
        for item in items:
            if isinstance(item, DatasetItem):
                item = {k: v for k, v in item.__dict__.items() if v is not None}
            lines.append(item if isinstance(item, str) else json.dumps(item))
        path.write_text(''.join(line + '\n' for line in lines), encoding='utf-8')
        return str(path)

    return write
