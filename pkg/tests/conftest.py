from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import strategies as st

from plokit import Interval, make_map
from plokit.constructions import MODEL_BUMP, one_bump

# rationals with denominators dividing 48, strictly inside (0, 1)
GRID = sorted({F(k, 48) for k in range(1, 48)})

ACCEPTANCE_RESULTS: list[tuple[str, bool, float, float]] = []


@st.composite
def pl_maps(draw, max_interior=10):
    k = draw(st.integers(0, max_interior))
    xs = sorted(draw(st.lists(st.sampled_from(GRID), min_size=k, max_size=k, unique=True)))
    ys = sorted(draw(st.lists(st.sampled_from(GRID), min_size=k, max_size=k, unique=True)))
    return make_map([(0, 0), *zip(xs, ys), (1, 1)])


@st.composite
def intervals(draw):
    pts = [F(0)] + GRID + [F(1)]
    lo, hi = sorted(draw(st.lists(st.sampled_from(pts), min_size=2, max_size=2, unique=True)))
    return Interval(lo, hi)


@pytest.fixture
def a():
    return MODEL_BUMP


@pytest.fixture
def b():
    return one_bump(Interval(F(1, 4), F(1, 2)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, seconds, limit in ACCEPTANCE_RESULTS:
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({seconds:.2f}s, limit {limit:g}s)")
