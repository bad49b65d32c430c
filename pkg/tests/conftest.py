import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_unit(rng, size=3):
    v = rng.standard_normal(size)
    return v / np.linalg.norm(v)


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict = {}


@pytest.fixture
def criterion():
    def record(number, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE.setdefault(number, []).append((bool(ok), line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        for _, line in ACCEPTANCE[number]:
            terminalreporter.write_line(line)
