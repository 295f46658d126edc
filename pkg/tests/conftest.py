import pytest
from hypothesis import settings, strategies as st

from knotpair.knotdb import default_db
from knotpair.laurent import LaurentPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def db():
    return default_db()


def laurent_polys(lo=-4, hi=4, bound=9, max_terms=5):
    return st.dictionaries(st.integers(lo, hi), st.integers(-bound, bound),
                           max_size=max_terms).map(LaurentPoly)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture(scope="session")
def report(db):
    """Cached full analysis by knot name (shared with the suites)."""
    from knotpair.suites import _report
    from knotpair.analysis import DEFAULT_WINDOW
    return lambda name: _report(db, name, False, DEFAULT_WINDOW)
