from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from skewpbw import load_presentation

CORPUS = Path(__file__).resolve().parents[1] / "src" / "skewpbw" / "corpus"

settings.register_profile(
    "repo",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("repo")

_ACCEPTANCE: dict = {}


def corpus(name: str):
    return load_presentation(CORPUS / f"{name}.spbw")


@pytest.fixture
def load():
    return corpus


def record_criterion(number: int, title: str, ok: bool, detail: str = ""):
    _ACCEPTANCE[number] = (title, ok, detail)
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
    if detail:
        line += f" ({detail})"
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[number]
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
