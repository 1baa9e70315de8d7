from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from gridknot.grid import GridDiagram, components

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

sys.path.insert(0, str(Path(__file__).resolve().parent))


def fixture_grid(name: str) -> GridDiagram:
    return GridDiagram.load(FIXTURES / name)


def random_grid(rng: random.Random, n: int, knot: bool = True) -> GridDiagram:
    while True:
        X = list(range(1, n + 1))
        O = X[:]
        rng.shuffle(X)
        rng.shuffle(O)
        if any(a == b for a, b in zip(X, O)):
            continue
        G = GridDiagram(X, O)
        if not knot or components(G) == 1:
            return G


@st.composite
def grids(draw, min_n=2, max_n=7, knot=False):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_grid(random.Random(seed), n, knot)


@st.composite
def braid_words(draw, strands=None, max_len=8):
    n = strands if strands is not None else draw(st.integers(2, 5))
    letters = draw(
        st.lists(
            st.integers(1, n - 1).flatmap(lambda g: st.sampled_from([g, -g])),
            max_size=max_len,
        )
    )
    return n, tuple(letters)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def acceptance():
    def record(k: int, title: str, ok: bool) -> None:
        ACCEPTANCE[k] = (ok, title)
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {title}")

    return record
