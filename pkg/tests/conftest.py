import time

import pytest

_RESULTS = []


class Criterion:
    def __init__(self, name):
        self.name = name
        self.start = time.perf_counter()
        self.passed = False

    @property
    def elapsed(self):
        return time.perf_counter() - self.start

    def finish(self, limit=None):
        elapsed = self.elapsed
        if limit is not None:
            assert elapsed < limit, f"{self.name} took {elapsed:.1f}s, limit {limit}s"
        self.passed = True


@pytest.fixture
def criterion(request):
    c = Criterion(request.node.name)
    yield c
    _RESULTS.append((c.name, c.passed, c.elapsed))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, elapsed in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  ({elapsed:.2f}s)")
