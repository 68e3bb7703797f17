"""Conjugacy maps between modular map graphs and De Bruijn graphs.

For an admissible branch map f, the word of orbit residues n -> (x_0, ...,
x_{k-1}) with x_i = f^i(n) mod p is a bijection mod p**k, and it carries the
modular graph of f mod p**k onto the p-ary De Bruijn graph of dimension k.
The same digit map extends to truncated residues (words) and, exactly, to
rationals with denominator coprime to p, where the digit stream is eventually
periodic precisely when the orbit falls into a cycle.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import PeriodicDigits, Word
from .graphs import (
    Permutation,
    _check_vertex_budget,
    check_isomorphism,
    debruijn_graph,
    modular_graph,
)
from .maps import BranchMap


def conjugacy_permutation(f: BranchMap, k: int) -> Permutation:
    """The digit map n -> sum x_i(n) p**i on {0..p**k - 1}.

    Digit i of the image is the residue of the i-th iterate of n (digit 0,
    the least significant, is n's own residue), so the image is always
    congruent to n mod p.
    """
    if k < 1:
        raise ValueError(f"word length must be at least 1, got {k}")
    size = f.p**k
    _check_vertex_budget(size)
    return Permutation(tuple(f.digit_sequence(n, k).value() for n in range(size)))


def verify_conjugacy(f: BranchMap, k: int) -> bool:
    """Check that the digit map is an isomorphism from the mod-p**k graph of f
    onto the De Bruijn graph of dimension k."""
    c = modular_graph(f, f.p**k)
    b = debruijn_graph(f.p, k)
    return check_isomorphism(c, b, conjugacy_permutation(f, k))


def permutation_order(phi: Permutation) -> int:
    return phi.order()


def digit_reversal_permutation(p: int, k: int) -> Permutation:
    """n -> the number whose length-k word is n's word reversed.

    An involution on {0..p**k - 1}; it is also an isomorphism from the
    transposed De Bruijn graph onto the De Bruijn graph, since reversing
    words turns suffix overlap into prefix overlap.
    """
    if k < 1:
        raise ValueError(f"word length must be at least 1, got {k}")
    size = p**k
    _check_vertex_budget(size)
    return Permutation(tuple(Word.from_int(n, p, k).reversed().value() for n in range(size)))


def phi_truncated(f: BranchMap, w: Word) -> Word:
    """The digit map applied to a truncated residue.

    Digit i of the result is the leading digit of the i-th truncated iterate
    of w, so the value equals conjugacy_permutation(f, len(w)) applied to
    w.value(). Truncation is harmless: digit i only depends on the input mod
    p**(i+1).
    """
    if w.base != f.p:
        raise ValueError(f"word base {w.base} does not match p={f.p}")
    digits = []
    cur = w
    while len(cur) > 0:
        digits.append(cur[0])
        if len(cur) == 1:
            break
        cur = f.apply_word(cur)
    return Word(f.p, tuple(digits))


def phi_inverse_truncated(f: BranchMap, target: Word) -> Word:
    """The unique word w of the same length with phi_truncated(f, w) == target.

    Built one digit at a time: digits below j of the image never depend on
    input digits at or above j, so each new input digit is pinned by matching
    the next image digit. Exactly one candidate can match per position; zero
    or several would mean f lost the De Bruijn branching property, which
    admissible maps cannot, so that is reported as an internal error.
    """
    if target.base != f.p:
        raise ValueError(f"word base {target.base} does not match p={f.p}")
    p = f.p
    digits: list[int] = []
    value = 0
    weight = 1
    for j in range(len(target)):
        hit = None
        for c in range(p):
            cur: int | Fraction = value + c * weight
            for _ in range(j):
                cur = f.apply(cur)
            if f.residue(cur) == target[j]:
                if hit is not None:
                    raise RuntimeError(
                        f"two digits lift position {j}; map branches are not De Bruijn"
                    )
                hit = c
        if hit is None:
            raise RuntimeError(f"no digit lifts position {j}; map branches are not De Bruijn")
        digits.append(hit)
        value += hit * weight
        weight *= p
    return Word(p, tuple(digits))


@dataclass(frozen=True)
class PhiExactResult:
    """Exact digit-map value of a rational input.

    digits is the full eventually periodic digit stream of the orbit residues
    and value the rational it denotes; steps_used counts the map applications
    spent before the orbit revisited a state.
    """

    digits: PeriodicDigits
    value: Fraction
    steps_used: int


def phi_exact(f: BranchMap, r: int | Fraction, max_steps: int = 10000) -> PhiExactResult | None:
    """Exact digit-map value of a rational with denominator coprime to p.

    Iterates f and records orbit residues until a state repeats; the residue
    stream is then eventually periodic, and its p-adic value is returned
    exactly. Returns None (undetermined) when no state repeats within
    max_steps; never an approximation.
    """
    if max_steps < 0:
        raise ValueError(f"max_steps must be nonnegative, got {max_steps}")
    state = Fraction(r)
    if gcd(state.denominator, f.p) != 1:
        raise ValueError(f"denominator of {state} is not coprime to {f.p}")
    seen: dict[Fraction, int] = {}
    digits: list[int] = []
    while True:
        if state in seen:
            start = seen[state]
            stream = PeriodicDigits(f.p, tuple(digits[:start]), tuple(digits[start:]))
            return PhiExactResult(stream, stream.to_rational(), len(digits))
        if len(digits) >= max_steps:
            return None
        seen[state] = len(digits)
        digits.append(f.residue(state))
        state = f.apply(state)
