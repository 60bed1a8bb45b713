from fractions import Fraction
from functools import lru_cache

from hypothesis import settings, strategies as st

from ffbundles import Bundle, SlopeWindow
from ffbundles.sequences import all_bundles

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

slopes = st.builds(
    Fraction,
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=1, max_value=4),
)
bundles = st.lists(st.tuples(slopes, st.integers(min_value=1, max_value=3)), max_size=4).map(Bundle.from_pairs)
nonzero_bundles = bundles.filter(lambda V: not V.is_zero())


@lru_cache(maxsize=None)
def enumeration(max_rank: int, lo: int, hi: int) -> tuple:
    return tuple(all_bundles(SlopeWindow(lo, hi, max_rank)))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
