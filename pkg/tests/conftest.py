import itertools

import pytest
from hypothesis import strategies as st

from chowlab.corpus import full_corpus, oracle_corpus
from chowlab.matroid import make_projective_geometry, make_uniform


@pytest.fixture(scope="session")
def fano():
    return make_projective_geometry(2, 2)


@pytest.fixture(scope="session")
def corpus():
    return full_corpus()


@pytest.fixture(scope="session")
def base_corpus():
    return oracle_corpus()


# a fixed pool of small matroids for property tests; hypothesis samples from it
SMALL = [m for m in full_corpus() if m.n <= 9]

small_matroids = st.sampled_from(SMALL)
uniform_params = st.integers(1, 7).flatmap(lambda n: st.tuples(st.integers(1, n), st.just(n)))


def brute_flats(m):
    """Every subset equal to its own closure, by exhaustive search."""
    out = []
    for k in range(m.n + 1):
        for c in itertools.combinations(range(m.n), k):
            mask = sum(1 << e for e in c)
            if m.is_flat(mask):
                out.append(mask)
    return out


def brute_descents(n):
    """Count permutations of n by number of descents."""
    counts = [0] * n
    for p in itertools.permutations(range(n)):
        counts[sum(p[i] > p[i + 1] for i in range(n - 1))] += 1
    return counts


@pytest.fixture(scope="session")
def u23():
    return make_uniform(2, 3)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
