import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from spherotrop.exact import PuiseuxSeries
from spherotrop.poly import Polynomial

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)
nonzero_fractions = small_fractions.filter(lambda q: q != 0)


@st.composite
def exact_series(draw, max_terms=4, nonzero=False):
    k = draw(st.sampled_from([1, 2, 3]))
    exps = draw(st.lists(st.integers(-4, 8), min_size=1 if nonzero else 0,
                         max_size=max_terms, unique=True))
    terms = {e: draw(nonzero_fractions) for e in exps}
    return PuiseuxSeries(k, terms)


@st.composite
def polynomials(draw, n=2, max_terms=4, max_deg=3):
    exps = draw(st.lists(st.tuples(*[st.integers(0, max_deg)] * n), min_size=1,
                         max_size=max_terms, unique=True))
    return Polynomial({a: draw(nonzero_fractions) for a in exps}, n)


def random_series(rng, lo=-3, hi=3, terms=3):
    """Exact series whose order is drawn uniformly from ``[lo, hi]``."""
    first = rng.randint(lo, hi)
    mapping = {first: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))}
    for _ in range(terms - 1):
        mapping[first + rng.randint(1, 4)] = Fraction(rng.randint(-3, 3))
    return PuiseuxSeries(1, mapping)


def random_polynomial(rng, n, terms=3, max_deg=2, homogeneous=None):
    out = {}
    for _ in range(terms):
        if homogeneous is None:
            alpha = tuple(rng.randint(0, max_deg) for _ in range(n))
        else:
            cuts = sorted(rng.randint(0, homogeneous) for _ in range(n - 1))
            parts = [b - a for a, b in zip([0] + cuts, cuts + [homogeneous])]
            alpha = tuple(parts)
        out[alpha] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
    return Polynomial(out, n)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.format_results():
        terminalreporter.write_line(line)
