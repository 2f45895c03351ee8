import random

import pytest
from hypothesis import strategies as st

from cubicat.corpus import random_corpus, random_term


def terms(max_width=6, max_gens=12):
    """Hypothesis strategy: random well-typed terms."""
    return st.builds(random_term, st.randoms(use_true_random=False),
                     st.just(max_width), st.just(max_gens))


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(500, seed=1)


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
