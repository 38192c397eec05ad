import json
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def oracle_fixture():
    return json.loads((FIXTURES / "oracle_structure_constants.json").read_text())


@pytest.fixture(scope="session")
def pinned_constants():
    return json.loads((FIXTURES / "proportionality_constants.json").read_text())


ACCEPTANCE: dict[int, str] = {}


def record_criterion(n: int, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
