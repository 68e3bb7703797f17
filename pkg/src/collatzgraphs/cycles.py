"""Cycles of branch maps over the rationals, and the 3n+b integer correspondence.

A digit word w of length k pins down the unique rational x whose orbit
traverses the branches w_0, w_1, ... cyclically: composing the branches gives
f^k(x) = (A*x + B) / p**k with A the product of the branch multipliers, and
the cycle condition f^k(x) = x solves to x = B / (p**k - A).

For the 3n+1 map, scaling a rational cycle by its common denominator b turns
it into an integer cycle of the 3n+b map, since T(n/b) = T_b(n)/b where
T_b(n) = (3n+b)/2 on odds and n/2 on evens. The denominators that occur are
exactly the odd divisors of 2**k - 3**h coprime to 3.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Word
from .maps import BranchMap, an_plus_b_map, collatz_map
from .words import is_primitive, lyndon_words


@dataclass(frozen=True)
class RationalCycle:
    """A rational cycle together with its scaled integer form.

    elements[0] traverses word; every element has the same reduced
    denominator b; integer_cycle is b * elements, elementwise.
    """

    word: Word
    elements: tuple[Fraction, ...]
    b: int
    integer_cycle: tuple[int, ...]

    def element_set(self) -> frozenset[Fraction]:
        return frozenset(self.elements)

    def to_jsonable(self) -> dict:
        return {
            "word": str(self.word),
            "b": self.b,
            "rational_cycle": [str(e) for e in self.elements],
            "integer_cycle": list(self.integer_cycle),
        }


def cycle_from_word(f: BranchMap, w: Word) -> Fraction:
    """The unique rational whose f-orbit traverses the digit word w cyclically.

    Degenerate only when the multiplier product A equals p**k, which
    admissible maps (multipliers coprime to p) never achieve for k >= 1.
    The admissibility conditions also force the solution to actually take
    branch w_i at step i; a mismatch is an internal error, not bad input.
    """
    if w.base != f.p:
        raise ValueError(f"word base {w.base} does not match p={f.p}")
    k = len(w)
    if k < 1:
        raise ValueError("cycle word must be non-empty")
    a_total, b_total = 1, 0
    power = 1
    for d in w:
        a, b = f.branches[d]
        a_total, b_total = a * a_total, a * b_total + b * power
        power *= f.p
    if a_total == power:
        raise ValueError(f"word {w} is degenerate: multiplier product equals {power}")
    x = Fraction(b_total, power - a_total)
    if f.digit_sequence(x, k) != w:
        raise RuntimeError(f"cycle solution {x} does not traverse {w}")
    return x


def _orbit(f: BranchMap, x: Fraction, k: int) -> tuple[Fraction, ...]:
    out = []
    for _ in range(k):
        out.append(x)
        x = f.apply(x)
    return tuple(out)


def _as_rational_cycle(f: BranchMap, elements: tuple[Fraction, ...], word: Word) -> RationalCycle:
    denominators = {e.denominator for e in elements}
    if len(denominators) != 1:
        raise RuntimeError(f"cycle elements do not share a denominator: {elements}")
    b = denominators.pop()
    return RationalCycle(word, elements, b, tuple((e * b).numerator for e in elements))


def word_cycle(f: BranchMap, w: Word) -> RationalCycle:
    """Full cycle record of w under f: the anchor solution and its orbit."""
    x = cycle_from_word(f, w)
    return _as_rational_cycle(f, _orbit(f, x, len(w)), w)


def collatz_cycle(w: Word) -> RationalCycle:
    """Cycle data of a primitive binary word under the 3n+1 map.

    Rotating w rotates the cycle, so any rotation of a Lyndon word is
    accepted; the cycle is anchored at the element whose orbit spells w
    itself.  The common denominator b is automatically odd and coprime to 3
    (it divides 2**k - 3**h), and the scaled elements are re-verified to be a
    genuine integer cycle of the 3n+b map.
    """
    if w.base != 2:
        raise ValueError(f"expected a binary word, got base {w.base}")
    if not is_primitive(w):
        raise ValueError(f"{w} is a repeated shorter word")
    cycle = word_cycle(collatz_map(), w)
    if gcd(cycle.b, 6) not in (1, 5):
        raise RuntimeError(f"denominator {cycle.b} is not coprime to 6")
    scaled = an_plus_b_map(3, cycle.b)
    n = cycle.integer_cycle[0]
    for expected in cycle.integer_cycle[1:]:
        n = scaled.apply(n)
        if n != expected:
            raise RuntimeError(f"scaled cycle of {w} is not a 3n+{cycle.b} orbit")
    if scaled.apply(n) != cycle.integer_cycle[0]:
        raise RuntimeError(f"scaled cycle of {w} does not close up")
    return cycle


def cycles_with_denominator(b: int, max_len: int) -> list[RationalCycle]:
    """All 3n+1 rational cycles of denominator exactly b indexed by binary
    Lyndon words of length <= max_len, in (length, lex) word order."""
    if b < 1 or b % 2 == 0 or b % 3 == 0:
        raise ValueError(f"b must be positive, odd and coprime to 3, got {b}")
    if max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    out = []
    for k in range(1, max_len + 1):
        for w in lyndon_words(2, k, mode="exact"):
            cycle = collatz_cycle(w)
            if cycle.b == b:
                out.append(cycle)
    return out


@dataclass(frozen=True)
class ClassifiedOrbit:
    """Outcome of bounded forward iteration that reached a cycle.

    The cycle is anchored at its least element; preperiod is the number of
    steps before that anchor first appears in the orbit.
    """

    cycle: RationalCycle
    preperiod: int


def classify_orbit(
    f: BranchMap, r: int | Fraction, max_steps: int = 10000
) -> ClassifiedOrbit | None:
    """Iterate r under f until a state repeats, then report the cycle reached.

    Returns None (undetermined) when no state repeats within max_steps.
    Divergence can never be certified by iteration, only cycling can.
    """
    if max_steps < 0:
        raise ValueError(f"max_steps must be nonnegative, got {max_steps}")
    state = Fraction(r)
    if gcd(state.denominator, f.p) != 1:
        raise ValueError(f"denominator of {state} is not coprime to {f.p}")
    seen: dict[Fraction, int] = {}
    orbit: list[Fraction] = []
    while True:
        if state in seen:
            start = seen[state]
            looped = orbit[start:]
            shift = looped.index(min(looped))
            elements = tuple(looped[shift:] + looped[:shift])
            word = f.digit_sequence(elements[0], len(elements))
            return ClassifiedOrbit(_as_rational_cycle(f, elements, word), start + shift)
        if len(orbit) >= max_steps:
            return None
        seen[state] = len(orbit)
        orbit.append(state)
        state = f.apply(state)
