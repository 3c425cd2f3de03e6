import sys
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from interlacing.series import Series
from interlacing.tp import det_leibniz

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def P(*coeffs):
    return Series.poly([Fraction(c) for c in coeffs])


def from_roots(*neg_roots, lead=1):
    out = P(lead)
    for r in neg_roots:
        out = out * P(r, 1)
    return out


def brute_tp(M, order):
    """Independent TP oracle: every minor by permutation expansion, in
    (size, rows, cols) lexicographic order. Returns None or (rows, cols, det)
    in local indices."""
    data = M.data
    for k in range(1, min(order, M.rows, M.cols) + 1):
        for rows in combinations(range(M.rows), k):
            for cols in combinations(range(M.cols), k):
                d = det_leibniz([[data[i][j] for j in cols] for i in rows])
                if d < 0:
                    return rows, cols, d
    return None


rats = st.fractions(min_value=-6, max_value=6, max_denominator=4)
nonneg_rats = st.fractions(min_value=0, max_value=6, max_denominator=4)


@st.composite
def polys(draw, max_deg=5, elements=rats):
    cs = draw(st.lists(elements, min_size=1, max_size=max_deg + 1))
    return Series.poly(cs)


@st.composite
def truncated(draw, max_trunc=7, elements=rats):
    cs = draw(st.lists(elements, min_size=1, max_size=max_trunc + 1))
    return Series.truncated(cs)


@st.composite
def any_series(draw, max_trunc=7):
    if draw(st.booleans()):
        return draw(polys(max_trunc))
    return draw(truncated(max_trunc))


@pytest.fixture
def tmp_json(tmp_path):
    import json

    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)
    return write


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
