import pytest

_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the line stays FAIL unless the test body reaches ``done``."""

    class Recorder:
        def __init__(self):
            self.number = None

        def start(self, number: int, label: str):
            self.number = number
            _CRITERIA[number] = f"[FAIL] criterion {number}: {label}"
            self.label = label

        def done(self, detail: str = ""):
            suffix = f" ({detail})" if detail else ""
            _CRITERIA[self.number] = f"[PASS] criterion {self.number}: {self.label}{suffix}"

        def note(self, detail: str):
            _CRITERIA[self.number] = f"[FAIL] criterion {self.number}: {self.label} ({detail})"

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[number])
