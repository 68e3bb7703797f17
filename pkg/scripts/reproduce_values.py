#!/usr/bin/env python3
"""Recompute the headline values end to end and compare against the pinned
constants.  Prints one line per item; exits 1 if anything drifts.

Run:  python scripts/reproduce_values.py [--verbose]
"""

import argparse
import sys
from fractions import Fraction

from collatzgraphs import (
    Word,
    an_plus_b_map,
    collatz_cycle,
    collatz_map,
    conjugacy_permutation,
    digit_reversal_permutation,
    fkm_sequence,
    necklace_count,
    original_collatz_map,
    phi_exact,
    phi_truncated,
    verify_conjugacy,
)


def checks():
    t = collatz_map()
    f0 = original_collatz_map()
    g51 = an_plus_b_map(5, 1)

    yield "conjugacy cycles, 3 digits", conjugacy_permutation(t, 3).cycles(), [(1, 5)]
    yield (
        "conjugacy cycles, 4 digits",
        conjugacy_permutation(t, 4).cycles(),
        [(1, 5), (2, 10), (9, 13)],
    )
    yield (
        "5n+1 conjugacy cycles, 3 digits",
        conjugacy_permutation(g51, 3).cycles(),
        [(1, 3), (2, 6), (5, 7)],
    )
    phi0 = conjugacy_permutation(f0, 2)
    yield "3-branch conjugacy, 2 digits", phi0.cycles(), [(1, 4, 7), (3, 6)]
    composite = digit_reversal_permutation(3, 2).compose(phi0)
    yield "digit-reversed composite", composite.cycles(), [(1, 4, 5, 7, 3, 2, 6)]
    yield "composite order", composite.order(), 7

    yield "2-adic image of 1", phi_exact(t, 1).value, Fraction(-1, 3)
    yield "2-adic image of 5", phi_exact(t, 5).value, Fraction(-13, 3)
    yield (
        "truncated image of 10110",
        str(phi_truncated(t, Word.from_str("10110", 2))),
        "10010",
    )

    yield "FKM sequence (2,3)", str(fkm_sequence(2, 3)), "00010111"
    yield "FKM sequence (2,4)", str(fkm_sequence(2, 4)), "0000100110101111"
    yield (
        "aperiodic necklace counts, k=1..6",
        [necklace_count(2, k) for k in range(1, 7)],
        [2, 1, 2, 3, 6, 9],
    )

    for text, b, elements in [
        ("10", 1, (1, 2)),
        ("1", 1, (-1,)),
        ("0", 1, (0,)),
        ("110", 1, (-5, -7, -10)),
        ("100", 5, (1, 4, 2)),
    ]:
        cycle = collatz_cycle(Word.from_str(text, 2))
        yield f"cycle of word {text}", (cycle.b, cycle.integer_cycle), (b, elements)

    yield (
        "isomorphism verified, 8 digits",
        verify_conjugacy(t, 8),
        True,
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--verbose", action="store_true", help="print values, not just verdicts")
    args = parser.parse_args()

    failures = 0
    for name, got, expected in checks():
        ok = got == expected
        failures += not ok
        mark = "ok " if ok else "FAIL"
        if args.verbose or not ok:
            print(f"[{mark}] {name}: {got!r}" + ("" if ok else f" (expected {expected!r})"))
        else:
            print(f"[{mark}] {name}")
    print(f"\n{failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
