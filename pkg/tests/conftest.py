import math

import pytest
from hypothesis import strategies as st

from cayleyfr.groups import GroupSpec
from cayleyfr.spectra import validate_connection_set

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    """Record one pass/fail line per acceptance criterion."""

    def _record(label: str, ok: bool, detail: str = "") -> bool:
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] {label}" + (f" :: {detail}" if detail else ""))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def group_specs(draw, max_rank=3, max_order=8, max_size=64):
    rank = draw(st.integers(1, max_rank))
    orders = []
    size = 1
    for _ in range(rank):
        cap = min(max_order, max_size // size)
        if cap < 2:
            break
        n = draw(st.integers(2, cap))
        orders.append(n)
        size *= n
    return GroupSpec(tuple(orders))


@st.composite
def elements(draw, spec):
    return spec.element([draw(st.integers(0, n - 1)) for n in spec.orders])


@st.composite
def spec_and_elements(draw, count, **kw):
    spec = draw(group_specs(**kw))
    return spec, [draw(elements(spec)) for _ in range(count)]


@st.composite
def connection_sets(draw, **kw):
    """A random symmetric connection set, closed under negation, without 0."""
    spec = draw(group_specs(**kw))
    picks = draw(st.lists(elements(spec), max_size=6))
    raw = set()
    for g in picks:
        if not g.is_zero():
            raw.add(g)
            raw.add(-g)
    return validate_connection_set(spec, raw)


def cycle(n):
    spec = GroupSpec((n,))
    return validate_connection_set(spec, [1, n - 1])


TWO_PI = 2 * math.pi
