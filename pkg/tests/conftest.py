import random

import pytest
from hypothesis import strategies as st

from symthompson.perms import Perm, PermGroup
from symthompson.tables import random_element
from symthompson.words import EvWord

_RESULTS = []


def perm(n, *cycles):
    return Perm.from_cycles(n, cycles)


def perms(n):
    return st.permutations(range(n)).map(Perm)


def words(n, max_size=6):
    return st.lists(st.integers(0, n - 1), max_size=max_size).map(tuple)


def evwords(n):
    return st.builds(EvWord, words(n), st.lists(st.integers(0, n - 1), min_size=1, max_size=4).map(tuple))


def groups(n):
    return st.sampled_from([PermGroup.trivial(n), PermGroup.symmetric(n),
                            PermGroup(n, [perm(n, (0, 1))])])


def elements(n, group, depth=3):
    return st.integers(0, 2**32).map(lambda s: random_element(n, group, depth, seed=s))


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call":
        return
    label, title = mark.args
    _RESULTS.append((label, title, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, title, passed in _RESULTS:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  [{label}] {title}")


def random_top_code(rng, m, max_depth=4, max_expansions=6):
    """Random complete code below the letter m-1, words listed in reverse dictionary order."""
    words = [()]
    for _ in range(rng.randint(0, max_expansions)):
        open_ = [i for i, x in enumerate(words) if len(x) < max_depth - 1]
        if not open_:
            break
        x = words.pop(rng.choice(open_))
        words.extend(x + (a,) for a in range(m))
    return sorted(((m - 1,) + x for x in words), reverse=True)


def higman_pairs():
    return [(m, k * (m - 1) + m) for m in (2, 3, 4) for k in (1, 2, 3)]
