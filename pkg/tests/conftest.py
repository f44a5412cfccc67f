import hypothesis
import pytest
from hypothesis import strategies as st

from farsight import load_example
from farsight.core import Instance

hypothesis.settings.register_profile("fast", max_examples=20)
hypothesis.settings.register_profile("thorough", max_examples=1000)


@st.composite
def instances(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    perm = st.permutations(list(range(n)))
    boys = [draw(perm) for _ in range(n)]
    girls = [draw(perm) for _ in range(n)]
    return Instance(n, boys, girls)


@pytest.fixture
def ex1():
    return load_example("paper_ex1")


@pytest.fixture
def ex2_truthful():
    return load_example("paper_ex2_truthful")


@pytest.fixture
def ex2_lied():
    return load_example("paper_ex2_lied")


def one_based(matching):
    """Pairs as (boy, girl) with the 1-based labels used for Example 1."""
    return [(b + 1, g + 1) for b, g in matching.pairs()]


ACCEPTANCE_RESULTS: dict[int, str] = {}


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_RESULTS[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[k])
