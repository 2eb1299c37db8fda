from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from tdipoly.multiindex import LowerSet, INF
from tdipoly.polynomial import Polynomial

# exact arithmetic makes run times uneven; no per-example deadline
settings.register_profile("tdipoly", deadline=None)
settings.load_profile("tdipoly")


def rationals(height=9):
    return st.builds(
        Fraction,
        st.integers(-height, height),
        st.integers(1, height),
    )


def nonzero_rationals(height=9):
    return rationals(height).filter(bool)


@st.composite
def polynomials(draw, d=None, max_degree=3, max_terms=6, height=9):
    if d is None:
        d = draw(st.integers(1, 3))
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(d)]).filter(
        lambda a: sum(a) <= max_degree
    )
    terms = draw(st.dictionaries(exps, nonzero_rationals(height), max_size=max_terms))
    return Polynomial(d, terms)


@st.composite
def points(draw, d, height=9):
    return tuple(draw(rationals(height)) for _ in range(d))


@st.composite
def lower_sets(draw, d=None, max_entry=4, max_gens=3):
    if d is None:
        d = draw(st.integers(1, 3))
    entry = st.one_of(st.integers(0, max_entry), st.just(INF))
    gens = draw(st.lists(st.tuples(*[entry for _ in range(d)]), max_size=max_gens))
    return LowerSet(d, tuple(gens))


ACCEPTANCE_LINES: list = []


def record(criterion: str, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
