import json
import time
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# number -> {"title", "parts": [(label, ok, elapsed, bound, note)]}
_CRITERIA: dict[int, dict] = {}


def load_table(name: str) -> list[list[int]]:
    return json.loads((DATA / f"{name}.json").read_text())["rows"]


class Criterion:
    """Times one acceptance check against its bound and records the outcome."""

    def __init__(self, number: int, title: str, bound: float, label: str = ""):
        self.number, self.title, self.bound, self.label = number, title, bound, label

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        slow = elapsed >= self.bound
        ok = exc_type is None and not slow
        if exc_type is not None:
            note = f"{exc_type.__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        elif slow:
            note = "over the runtime bound"
        else:
            note = ""
        entry = _CRITERIA.setdefault(self.number, {"title": self.title, "parts": []})
        entry["parts"].append((self.label, ok, elapsed, self.bound, note))
        if exc_type is None and slow:
            pytest.fail(f"criterion {self.number} {self.label}: {elapsed:.1f}s >= {self.bound}s")
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        ok = all(part[1] for part in entry["parts"])
        detail = "; ".join(
            f"{label + ' ' if label else ''}{elapsed:.2f}s/<{bound:g}s{' ' + note if note else ''}"
            for label, _, elapsed, bound, note in entry["parts"]
        )
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d} {entry['title']}: {detail}")
