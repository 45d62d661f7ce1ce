from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from laxosp.qscalar import LaurentScalar

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def laurent_scalars(draw, max_terms=4, max_exp=6):
    exps = draw(st.lists(st.integers(-max_exp, max_exp), max_size=max_terms))
    return LaurentScalar({e: draw(small_fractions) for e in exps})


nonzero_s = st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=9).filter(lambda x: x != 1)
even_n = st.sampled_from([2, 4, 6])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
