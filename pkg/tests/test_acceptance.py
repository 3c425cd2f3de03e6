"""Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.

Run under pytest (the lines are repeated in the terminal summary) or directly
with ``python tests/test_acceptance.py``.
"""
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from interlacing.harness import (check_convexity, check_flip_identity, check_product_identity,
                                 check_qn_pn, check_shift, check_veronese_submatrix,
                                 family_minor, random_aesw_pair, random_fully_interlacing,
                                 random_hfamily, random_interlacing_pair, random_series_matrix,
                                 three_term_family)
from interlacing.interlace import (hurwitz_combination, interlaces_roots, interlaces_tp,
                                   is_fully_interlacing, is_hurwitz_window,
                                   is_pairwise_interlacing, is_pairwise_interlacing_roots)
from interlacing.series import Series, veronese_section
from interlacing.subdivision import (HFamily, check_prop_app, check_strong_interlacing,
                                     esd2_family, esd2_theta, theta)
from interlacing.tp import is_tp
from interlacing.windows import SeriesMatrix, WindowSpec, toeplitz_window

FIXTURES = Path(__file__).parent / "fixtures"
SEED = 0
RESULTS: dict = {}


def three_term_example():
    fails = {}
    for t in [Fraction(2), Fraction(17, 8), Fraction(9, 4), Fraction(19, 8)]:
        seq = three_term_family(1, 2, 3, 4, t)
        pairwise = is_pairwise_interlacing_roots(seq) and is_pairwise_interlacing(seq)
        v = is_fully_interlacing(SeriesMatrix.column(seq))
        w = v.witness
        if not (pairwise and w is not None and len(w.rows) == 3 and w.det == 2 * t - 5):
            fails[str(t)] = v.to_json()
    for t in [Fraction(5, 2), Fraction(3)]:
        if family_minor(1, 2, 3, 4, t) < 0:
            fails[str(t)] = "minor negative"
    return not fails, f"t in {{2,17/8,9/4,19/8}} fail with det 2t-5; t in {{5/2,3}} minor >= 0; bad={fails}"


def _identity_batch(make, count=200):
    rng = random.Random(SEED)
    bad = [r.to_json() for r in (make(rng) for _ in range(count)) if not r.ok]
    return not bad, f"{count - len(bad)}/{count} exact{'' if not bad else ' first=' + json.dumps(bad[0])}"


def flip_identity():
    return _identity_batch(lambda rng: check_flip_identity(
        random_series_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), 4)))


def product_identity():
    def make(rng):
        p, t, q = (rng.randint(1, 3) for _ in range(3))
        return check_product_identity(random_series_matrix(rng, p, t, 4),
                                      random_series_matrix(rng, t, q, 4))
    return _identity_batch(make)


def veronese_identity():
    rng = random.Random(SEED)
    total = bad = 0
    for r in (2, 3, 4):
        for _ in range(100):
            A = random_series_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), 4)
            total += 1
            bad += not check_veronese_submatrix(A, r).ok
    return bad == 0, f"{total - bad}/{total} exact (rows and columns variants)"


def hermite_biehler(count=500):
    rng = random.Random(SEED)
    disagree, interlacing = [], 0
    for i in range(count):
        A, B = random_aesw_pair(rng, 6)
        W = 2 * (max(A.trunc, B.trunc) + 1)
        roots = interlaces_roots(A, B)
        lace = interlaces_tp(A, B, W, 5).passed
        hur = is_hurwitz_window(hurwitz_combination(A, B), W, 5).passed
        interlacing += roots
        if not roots == lace == hur:
            disagree.append(i)
    return not disagree, (f"{count} pairs ({interlacing} interlacing), "
                          f"{len(disagree)} disagreements {disagree[:5]}")


def non_aesw_witness():
    v = is_tp(toeplitz_window(Series.poly([1, 1, 1]), WindowSpec.square(6)), 3)
    w = v.witness
    ok = (not v.passed and w.rows == (0, 1, 2) and w.cols == (1, 2, 3) and w.det == -1)
    return ok, f"verdict {json.dumps(v.to_json())}"


def qn_pn_matrices():
    bad = [n for n in range(9) if not check_qn_pn(n, 6, 5).ok]
    return not bad, f"n=0..8 both matrices pass at window 6, order 5; failing n={bad}"


def section_pairs(count=200):
    rng = random.Random(SEED)
    bad = []
    for i in range(count):
        Pp, Qq = random_interlacing_pair(rng, 8)
        if not interlaces_roots(Pp, Qq):
            bad.append((i, "generator"))
            continue
        for r in (2, 3, 4, 5):
            for k in range(r):
                if not interlaces_roots(veronese_section(Pp, r, k), veronese_section(Qq, r, k)):
                    bad.append((i, r, k))
    return not bad, f"{count} pairs x r in 2..5, all sections interlace; bad={bad[:5]}"


def esd2_identity(count=200):
    rng = random.Random(SEED)
    bad = 0
    for _ in range(count):
        fam = random_hfamily(rng, rng.randint(2, 6))
        G = esd2_family(fam)
        bad += any(esd2_theta(fam, m) != theta(G, m) for m in range(2, fam.n + 1))
    fixtures = sorted(FIXTURES.glob("*.json"))
    certified = passed = 0
    for path in fixtures:
        fam = HFamily.from_json(json.loads(path.read_text()))
        if check_strong_interlacing(fam).ok:
            certified += 1
            passed += check_prop_app(fam).ok
    ok = bad == 0 and certified == passed and certified > 0
    return ok, (f"identity exact on {count - bad}/{count} random families; "
                f"{passed}/{certified} certified fixture families pass")


def convexity_and_shift(count=100):
    rng = random.Random(SEED)
    bad_c = bad_s = 0
    for _ in range(count):
        M = random_fully_interlacing(rng.randint(2, 4), 1, 2, rng.randrange(2 ** 32))
        seq = [e[0] for e in M.entries]
        lambdas = [Fraction(rng.randint(0, 5), rng.randint(1, 3)) for _ in seq]
        bad_c += not check_convexity(seq, lambdas).ok
        bad_s += not check_shift(seq).ok
    return bad_c == bad_s == 0, (f"convexity {count - bad_c}/{count}, "
                                 f"shift at W-1 {count - bad_s}/{count}")


CRITERIA = [
    (1, "three-term family counterexample", three_term_example),
    (2, "flip identity", flip_identity),
    (3, "product identity", product_identity),
    (4, "Veronese submatrix identity", veronese_identity),
    (5, "Hermite-Biehler agreement", hermite_biehler),
    (6, "non-AESW witness", non_aesw_witness),
    (7, "Q_n / P_n matrices", qn_pn_matrices),
    (8, "sections of interlacing pairs", section_pairs),
    (9, "esd2 theta identity and subdivision", esd2_identity),
    (10, "convexity and shift", convexity_and_shift),
]


def evaluate(num, name, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2} {name}: {detail} ({time.perf_counter() - t0:.1f}s)"
    RESULTS[num] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_acceptance(num, name, fn):
    ok, line = evaluate(num, name, fn)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
