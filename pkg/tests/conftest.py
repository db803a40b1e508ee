from pathlib import Path

import pytest
from hypothesis import settings

from onesided_gb.poly import parse_poly
from onesided_gb.presentation import load_presentation
from onesided_gb.reduction import MixedSystem
from onesided_gb.words import Alphabet, Deglex, Tag

# fixed example streams keep runs reproducible
settings.register_profile("repo", derandomize=True, deadline=None)
settings.load_profile("repo")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def load(name: str):
    return load_presentation(FIXTURES / name)


def words_of(text: str) -> tuple:
    return tuple(text.split())


def system(alphabet: Alphabet, exprs, side: Tag = Tag.LEFT) -> MixedSystem:
    return MixedSystem.build([parse_poly(e, alphabet) for e in exprs], Deglex(alphabet), side)


@pytest.fixture
def xy():
    return Alphabet(("x", "y"))


@pytest.fixture
def es():
    return Alphabet(("e", "s"))


@pytest.fixture
def ex33(xy):
    return system(xy, ["<| x y x + <| y x + 2 <| y", "<| y x x + <| x x",
                       "x x y - 3 y x", "y x x x - 2 x y"])


SYM2_RELATIONS = ["e e - e", "s s s - s", "s s e - e", "e s s - e",
                  "e s e s - e s e", "s e s e - e s e"]


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props and rep.when == "call":
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL", props["title"]))
    if lines:
        terminalreporter.section("acceptance criteria")
        for number, verdict, title in sorted(lines):
            terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
