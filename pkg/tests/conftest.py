from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from wvo.golden import example_problem

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def small_rationals(bound=3, max_den=4):
    return st.builds(
        Fraction, st.integers(-bound * max_den, bound * max_den), st.integers(1, max_den)
    )


def rational_vectors(dim, **kw):
    return st.tuples(*[small_rationals(**kw)] * dim)


seeds = st.integers(0, 2**32 - 1)


@pytest.fixture(scope="session")
def ex():
    return example_problem()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in mod.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
