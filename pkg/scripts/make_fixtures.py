"""Regenerate the h-family fixtures under tests/fixtures.

Each family comes from the derivative chain of a real-rooted polynomial, so
theta(sigma_m) is a positive multiple of x h(sigma_m)' (or zero) and the
strong interlacing property holds by construction.
"""
import json
from fractions import Fraction
from pathlib import Path

from interlacing.harness import poly_from_roots
from interlacing.subdivision import check_strong_interlacing, derivative_chain_family

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

FAMILIES = {
    "deriv_n4": (poly_from_roots([1, 2, 3, 5]), [1, Fraction(1, 2), 2], []),
    "deriv_n5_mixed": (poly_from_roots([1, 1, 2, 4, 7]), [Fraction(1, 3), 1], [3]),
    "deriv_n6": (poly_from_roots([Fraction(1, 2), 1, 2, 3, 5, 8]), [Fraction(3, 2)], [6]),
    "zero_theta_n5": (poly_from_roots([1, 3, 4, 6, 9]), [1], [2, 3, 4, 5]),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (G, scales, zeros) in FAMILIES.items():
        fam = derivative_chain_family(G, scales, zeros)
        rep = check_strong_interlacing(fam)
        if not rep.ok:
            raise SystemExit(f"{name}: {rep.failures}")
        (OUT / f"{name}.json").write_text(json.dumps(fam.to_json(), indent=1) + "\n")
        print(f"wrote {name}.json (n={fam.n})")


if __name__ == "__main__":
    main()
