import time

import pytest

SESSION_START = time.monotonic()


def session_elapsed() -> float:
    return time.monotonic() - SESSION_START


def pytest_collection_modifyitems(items):
    # Acceptance runs last so its wall-clock criterion sees the whole suite.
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")


@pytest.fixture
def elapsed():
    return session_elapsed
