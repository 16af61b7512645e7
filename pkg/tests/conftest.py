import pytest

from dp.pursuit.config import config as pursuit_config


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run the n = 6 corpus sweeps")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def local_executor(monkeypatch):
    monkeypatch.setitem(pursuit_config, "executor", "local")
    monkeypatch.setitem(pursuit_config, "workers", 1)
