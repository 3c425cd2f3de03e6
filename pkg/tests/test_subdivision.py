import json
import random
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from interlacing.errors import IndexOutOfRange, PreconditionFailed
from interlacing.harness import random_derivative_family, random_hfamily
from interlacing.interlace import interlaces_roots, is_real_rooted
from interlacing.series import Series, shift, veronese_section
from interlacing.subdivision import (HFamily, check_prop_app, check_strong_interlacing,
                                     derivative_chain_family, esd2_family, esd2_h, esd2_theta,
                                     esd2_theta_summands, theta)

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(path):
    """Load a family and certify it with the root oracle before use."""
    fam = HFamily.from_json(json.loads(path.read_text()))
    for m in range(2, fam.n):
        assert is_real_rooted(fam.simplex_h[m]), (path.name, m)
    for m in range(2, fam.n + 1):
        th = theta(fam, m)
        assert th.is_zero or (th.degree == m - 1 and interlaces_roots(fam.simplex_h[m - 1], th))
    return fam


fixture_paths = sorted(FIXTURES.glob("*.json"))


def test_fixtures_present():
    assert len(fixture_paths) >= 3


def test_theta_examples():
    h = P(1, 2, 1)
    fam = HFamily(2, (P(1), P(1), h), (P(1), P(1), h))
    assert theta(fam, 2).is_zero
    fam2 = HFamily(2, (P(1), P(1), P(1, 3)), (P(1), P(1), P(1, 1)))
    assert theta(fam2, 2) == P(0, 2)
    assert theta(fam + fam2, 2) == theta(fam, 2) + theta(fam2, 2)
    with pytest.raises(IndexOutOfRange):
        theta(fam, 3)


def test_esd2_h_examples():
    assert esd2_h(P(1), 2) == P(1, 1)
    assert esd2_h(P(1, 1), 2) == P(1, 3)
    assert esd2_h(Series.zero(), 3).is_zero


def test_esd2_theta_examples():
    fam = HFamily(2, (P(1), P(1), P(1, 1)), (P(1), P(1), P(1, 1)))
    assert esd2_theta(fam, 2) == P(0, 2)
    even, odd = esd2_theta_summands(fam, 2)
    assert even.is_zero and odd == P(0, 2)


def test_esd2_theta_zero_theta_reduces_to_odd_part():
    h = P(1, 5, 6)
    fam = HFamily(3, (P(1), P(1), P(1, 2), h), (P(1), P(1), P(1, 2), h))
    assert esd2_theta(fam, 3) == shift(veronese_section(P(1, 1) ** 2 * h, 2, 1), 1)


@given(st.integers(0, 10 ** 6), st.integers(2, 6))
def test_split_identity_on_random_families(seed, n):
    fam = random_hfamily(random.Random(seed), n)
    G = esd2_family(fam)
    for m in range(2, n + 1):
        assert esd2_theta(fam, m) == theta(G, m)


def test_esd2_family_special_cases():
    h = (P(1), P(1), P(1, 1), P(1, 4, 2))
    G = esd2_family(HFamily(3, h, h))
    for m in (2, 3):
        lifted = P(1, 1) ** (m - 1) * h[m]
        assert theta(G, m) == shift(veronese_section(lifted, 2, 1), 1)
    Z = HFamily(3, (Series.zero(),) * 4, (Series.zero(),) * 4)
    assert all(x.is_zero for x in esd2_family(Z).simplex_h + esd2_family(Z).boundary_h)


def test_strong_interlacing_examples():
    bad = HFamily(4, (P(1), P(1), P(1, 1), P(1, 1, 1), P(1, 3, 3, 1)),
                  (P(1), P(1), P(1, 1), P(1, 1, 1), P(1, 3, 3, 1)))
    rep = check_strong_interlacing(bad)
    assert not rep.ok and rep.real_rooted[3] is False
    assert any(f.startswith("(i) m=3") for f in rep.failures)
    h = (P(1), P(1), P(1, 1), P(1, 3, 2), P(1, 6, 11, 6))
    rep = check_strong_interlacing(HFamily(4, h, h))
    assert rep.ok and all(rep.theta_ok.values())
    fam = derivative_chain_family(P(1, 1) * P(2, 1) * P(3, 1) * P(4, 1), [1])
    assert check_strong_interlacing(fam).ok


def test_theta_condition_failures():
    # theta = 2x - 1 has a negative coefficient
    fam = HFamily(2, (P(1), P(1), P(1, 2)), (P(1), P(1), P(2)))
    assert any("negative" in f for f in check_strong_interlacing(fam).failures)
    # theta = x, degree 1 where 2 is required
    fam = HFamily(3, (P(1), P(1), P(1, 1), P(1, 2, 1)), (P(1), P(1), P(1, 1), P(1, 1, 1)))
    assert any("degree" in f for f in check_strong_interlacing(fam).failures)


@pytest.mark.parametrize("path", fixture_paths, ids=lambda p: p.stem)
def test_fixture_families_pass_prop(path):
    fam = load_fixture(path)
    assert check_strong_interlacing(fam).ok
    rep = check_prop_app(fam)
    assert rep.ok, rep.to_json()
    assert all(rep.chain.values()) and all(rep.degree_bookkeeping.values())


def test_prop_app_zero_theta_family():
    h = (P(1), P(1), P(1, 1), P(1, 3, 2), P(1, 6, 11, 6))
    rep = check_prop_app(HFamily(4, h, h))
    assert rep.ok


def test_prop_app_precondition():
    bad = HFamily(3, (P(1), P(1), P(1, 1, 1), P(1, 1)), (P(1), P(1), P(1, 1, 1), P(1, 1)))
    with pytest.raises(PreconditionFailed):
        check_prop_app(bad)


@given(st.integers(0, 10 ** 6), st.integers(2, 6))
def test_prop_app_on_derivative_families(seed, n):
    fam = random_derivative_family(random.Random(seed), n)
    assert check_strong_interlacing(fam).ok
    assert check_prop_app(fam).ok


def test_family_json_round_trip(tmp_path):
    fam = load_fixture(fixture_paths[0])
    assert HFamily.from_json(json.loads(json.dumps(fam.to_json()))) == fam
