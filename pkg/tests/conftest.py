import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

from dcasp.core import Kind, TheoryBuilder

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def theories(draw, max_atoms=8, max_horn=4, max_clauses=12, max_rules=8, max_posts=4, max_selects=3):
    """Small random theories over atoms a0.. (constraint) and h0.. (Horn)."""
    nc = draw(st.integers(1, max_atoms))
    nh = draw(st.integers(0, max_horn))
    b = TheoryBuilder()
    cs = [b.declare(f"a{i}", Kind.CONSTRAINT) for i in range(nc)]
    hs = [b.declare(f"h{i}", Kind.HORN) for i in range(nh)]
    lit = st.tuples(st.sampled_from(cs), st.booleans())
    for c in draw(st.lists(st.lists(lit, min_size=1, max_size=4), max_size=max_clauses)):
        b.add_clause(c)
    for _ in range(draw(st.integers(0, max_selects))):
        scope = draw(st.lists(st.sampled_from(cs), min_size=1, max_size=5, unique=True))
        lo = draw(st.integers(0, len(scope)))
        b.add_select(lo, draw(st.integers(lo, len(scope))), scope)
    if hs:
        anyatom = st.sampled_from(cs + hs)
        for body in draw(st.lists(st.lists(anyatom, max_size=3), max_size=max_rules)):
            b.add_rule(body, draw(st.sampled_from(hs)))
        plit = st.tuples(anyatom, st.booleans())
        for c in draw(st.lists(st.lists(plit, min_size=1, max_size=3), max_size=max_posts)):
            b.add_post(c)
    return b.build()


_ACCEPTANCE = []


def record_acceptance(line):
    _ACCEPTANCE.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
