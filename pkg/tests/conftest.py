from __future__ import annotations

import os

from hypothesis import HealthCheck, settings, strategies as st

from pfaffian_lab.exactring import Poly

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

VARS = ("q", "x1", "x2")

monomials = st.fixed_dictionaries({v: st.integers(0, 3) for v in VARS})
terms = st.tuples(monomials, st.integers(-5, 5))


@st.composite
def polys(draw, max_terms: int = 8):
    out = Poly()
    for exps, c in draw(st.lists(terms, max_size=max_terms)):
        out = out + Poly.monomial(exps, c)
    return out


@st.composite
def units(draw, max_terms: int = 6):
    """Polynomials with a nonzero constant term."""
    c = draw(st.integers(1, 4)) * draw(st.sampled_from([1, -1]))
    rest = draw(polys(max_terms))
    return rest - rest.constant_term + c


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
