import pytest
from gmpy2 import mpq
from hypothesis import settings, strategies as st

from rsfusion.exactring import Params

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# pairs used wherever a check should not depend on one lucky choice
PARAM_CHOICES = [Params(2, 3), Params(mpq(1, 2), 5), Params(-3, 7)]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def P():
    return Params(2, 3)


@st.composite
def small_rationals(draw, nonzero=False):
    num = draw(st.integers(-9, 9).filter(lambda x: x != 0) if nonzero else st.integers(-9, 9))
    den = draw(st.integers(1, 9))
    return mpq(num, den)


@st.composite
def params_strategy(draw):
    r = draw(small_rationals(nonzero=True))
    s = draw(small_rationals(nonzero=True).filter(lambda x: x != r and x != -r))
    return Params(r, s)


@st.composite
def partition_strategy(draw, max_m=6):
    m = draw(st.integers(1, max_m))
    parts = []
    rest, cap = m, m
    while rest:
        p = draw(st.integers(1, min(rest, cap)))
        parts.append(p)
        rest -= p
        cap = p
    return tuple(parts)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
