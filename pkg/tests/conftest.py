import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""

    class Recorder:
        def __init__(self):
            self.name = None

        def __call__(self, name):
            self.name = name
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            status = "PASS" if exc_type is None else f"FAIL ({exc_type.__name__}: {exc})"
            line = f"{self.name}: {status}"
            _ACCEPTANCE_LINES.append(line)
            print(line)
            return False

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
