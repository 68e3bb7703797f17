"""Acceptance gate: every pinned value and property, checked exactly.

Each criterion is a group of test_cNN_* functions; the terminal summary in
conftest.py prints one PASS/FAIL line per criterion.  All comparisons are
exact (integers, fractions, tuples); there are no tolerances anywhere.

One check is expected to fail: test_c01 asserts that the base-3 conjugacy of
the original three-branch map at two digits is the single 7-cycle
(1,4,5,7,3,2,6).  The digit formula cannot produce that permutation: its
image is always congruent to its input mod 3, which the 7-cycle target
violates (it sends 4 to 5).  The computed permutation is (1,4,7)(3,6) of
order 6, and composing it with the digit-reversal involution yields exactly
the 7-cycle target, so the target describes the reversed digit reading.  The
check is kept as stated to record the discrepancy honestly;
test_c01_reversed_reading_recovers_the_seven_cycle pins the relationship.
"""

import random
from fractions import Fraction
from itertools import product

from collatzgraphs import (
    Word,
    an_plus_b_map,
    check_isomorphism,
    check_uniform_power,
    classify_orbit,
    collatz_cycle,
    collatz_map,
    conjugacy_permutation,
    cycles_with_denominator,
    debruijn_graph,
    digit_reversal_permutation,
    fkm_sequence,
    is_debruijn_sequence,
    line_graph,
    modular_graph,
    necklace_count,
    original_collatz_map,
    phi_exact,
    phi_inverse_truncated,
    phi_truncated,
    restricted_graph,
    transpose,
    verify_conjugacy,
)

T = collatz_map()
F0 = original_collatz_map()


# criterion 1: the conjugacy permutations, exactly


def test_c01_collatz_conjugacy_three_digits():
    assert conjugacy_permutation(T, 3).cycles() == [(1, 5)]


def test_c01_collatz_conjugacy_four_digits():
    assert conjugacy_permutation(T, 4).cycles() == [(1, 5), (2, 10), (9, 13)]


def test_c01_5n_plus_1_conjugacy_three_digits():
    assert conjugacy_permutation(an_plus_b_map(5, 1), 3).cycles() == [(1, 3), (2, 6), (5, 7)]


def test_c01_original_map_conjugacy_two_digits():
    # expected to fail: the digit formula yields (1,4,7)(3,6) of order 6; see
    # the module docstring
    phi = conjugacy_permutation(F0, 2)
    assert phi.cycles() == [(1, 4, 5, 7, 3, 2, 6)]
    assert phi.order() == 7


def test_c01_reversed_reading_recovers_the_seven_cycle():
    composite = digit_reversal_permutation(3, 2).compose(conjugacy_permutation(F0, 2))
    assert composite.cycles() == [(1, 4, 5, 7, 3, 2, 6)]
    assert composite.order() == 7


# criterion 2: conjugacy verified as a graph isomorphism


def test_c02_collatz_map_up_to_ten_digits():
    assert all(verify_conjugacy(T, k) for k in range(1, 11))


def test_c02_affine_family_up_to_eight_digits():
    for a, b in product((-1, 1, 3, 5, 7), repeat=2):
        f = an_plus_b_map(a, b)
        assert all(verify_conjugacy(f, k) for k in range(1, 9)), (a, b)


def test_c02_original_map_up_to_five_digits():
    assert all(verify_conjugacy(F0, k) for k in range(1, 6))


# criterion 3: specific graphs


def test_c03_modular_graph_mod_three_edge_set():
    g = modular_graph(T, 3)
    assert g.simple_edges() == frozenset({(0, 0), (0, 2), (1, 2), (2, 1), (2, 2)})


def test_c03_modular_graph_mod_four_has_label_six():
    assert (2, 3, 6) in modular_graph(T, 4).edges


def test_c03_conjugacy_carries_mod_eight_onto_debruijn():
    phi = conjugacy_permutation(T, 3)
    assert check_isomorphism(modular_graph(T, 8), debruijn_graph(2, 3), phi)


# criterion 4: the line graph steps up the modulus


def line_recursion_holds(f, m_small, m_big):
    lg = line_graph(modular_graph(f, m_small))
    big = modular_graph(f, m_big)
    from collections import Counter

    return lg.n == big.n and Counter((s, t) for s, t, _ in lg.edges) == big.edge_multiset()


def test_c04_line_recursion_base_two():
    for k in range(1, 10):
        assert line_recursion_holds(T, 2**k, 2 ** (k + 1)), k


def test_c04_line_recursion_base_three():
    for k in range(1, 6):
        assert line_recursion_holds(F0, 3**k, 3 ** (k + 1)), k


# criterion 5: adjacency powers are uniform


def test_c05_uniform_walk_counts_base_two():
    for k in range(1, 9):
        assert check_uniform_power(T, k, k + 3), k


def test_c05_uniform_walk_counts_base_three():
    for k in range(1, 6):
        assert check_uniform_power(F0, k, k + 3), k


# criterion 6: 2-adic images


def test_c06_exact_images():
    assert phi_exact(T, 1).value == Fraction(-1, 3)
    assert phi_exact(T, 5).value == Fraction(-13, 3)


def test_c06_truncated_image():
    assert phi_truncated(T, Word.from_str("10110", 2)) == Word.from_str("10010", 2)


def test_c06_denominator_three_for_the_trivial_basin():
    trivial = frozenset({Fraction(1), Fraction(2)})
    for n in range(1, 1001):
        outcome = classify_orbit(T, n)
        assert outcome is not None and outcome.cycle.element_set() == trivial, n
        assert phi_exact(T, n).value.denominator == 3, n


# criterion 7: De Bruijn sequences


def test_c07_fkm_values():
    assert str(fkm_sequence(2, 3)) == "00010111"
    assert str(fkm_sequence(2, 4)) == "0000100110101111"


def test_c07_fkm_outputs_verify():
    for p in (2, 3, 4):
        for k in range(1, 9):
            assert is_debruijn_sequence(fkm_sequence(p, k), p, k), (p, k)


# criterion 8: counting


def test_c08_word_count_identity():
    for p in (2, 3, 5):
        for k in range(1, 21):
            divisor_sum = sum(d * necklace_count(p, d) for d in range(1, k + 1) if k % d == 0)
            assert divisor_sum == p**k, (p, k)


def test_c08_binary_counts_with_brute_force_oracle():
    assert [necklace_count(2, k) for k in range(1, 7)] == [2, 1, 2, 3, 6, 9]
    for k in range(1, 7):
        classes = set()
        for digits in product(range(2), repeat=k):
            rotations = {digits[i:] + digits[:i] for i in range(k)}
            if len(rotations) == k:
                classes.add(min(rotations))
        assert necklace_count(2, k) == len(classes), k


# criterion 9: cycle correspondence


def test_c09_word_to_cycle_table():
    expected = {
        "10": (1, {1, 2}),
        "1": (1, {-1}),
        "0": (1, {0}),
        "110": (1, {-5, -7, -10}),
        "100": (5, {1, 4, 2}),
    }
    for text, (b, elements) in expected.items():
        cycle = collatz_cycle(Word.from_str(text, 2))
        assert cycle.b == b, text
        assert set(cycle.integer_cycle) == elements, text


def test_c09_enumerated_cycles_confirmed_by_iteration():
    for b in (1, 5, 7, 11):
        for cycle in cycles_with_denominator(b, 12):
            n = cycle.integer_cycle[0]
            for expected in cycle.integer_cycle[1:]:
                n = n // 2 if n % 2 == 0 else (3 * n + b) // 2
                assert n == expected, (b, cycle.word)
            n = n // 2 if n % 2 == 0 else (3 * n + b) // 2
            assert n == cycle.integer_cycle[0], (b, cycle.word)


# criterion 10: the 5n+1 map has several coexisting cycles


def test_c10_5n_plus_1_has_at_least_three_cycles():
    f = an_plus_b_map(5, 1)
    found = set()
    for seed in range(1, 31):
        outcome = classify_orbit(f, seed, max_steps=400)
        if outcome is not None:
            found.add(outcome.cycle.element_set())
    assert len(found) >= 3, sorted(len(c) for c in found)


# criterion 11: structural properties


def test_c11_restricted_graph_embeds_in_modular_graph():
    for k in range(1, 11):
        bound = 2**k
        small = restricted_graph(T, bound).simple_edges()
        assert small <= modular_graph(T, bound).simple_edges(), k


def test_c11_conjugacy_prefixes_are_stable():
    for f in (T, an_plus_b_map(5, 1)):
        prev = conjugacy_permutation(f, 1)
        for k in range(2, 11):
            cur = conjugacy_permutation(f, k)
            q = 2 ** (k - 1)
            assert all(cur(n) % q == prev(n % q) for n in range(2**k)), k
            prev = cur


def test_c11_phi_inverse_round_trips_random_words():
    rng = random.Random(1729)
    for _ in range(1000):
        w = Word(2, tuple(rng.randrange(2) for _ in range(16)))
        assert phi_truncated(T, phi_inverse_truncated(T, w)) == w


def test_c11_debruijn_transpose_isomorphic_under_digit_reversal():
    for k in range(1, 9):
        b = debruijn_graph(2, k)
        rev = digit_reversal_permutation(2, k)
        assert check_isomorphism(transpose(b), b, rev), k
