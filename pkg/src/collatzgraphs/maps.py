"""Branch maps: p-branch affine maps such as the 3n+1 map and its relatives.

A branch map sends n in the class i mod p to (a_i * n + b_i) / p. Two
conditions make a coefficient table admissible:

* a_i * i + b_i = 0 (mod p), so each branch divides exactly (integers map to
  integers, and rationals with denominator coprime to p stay that way);
* gcd(a_i, p) = 1, which makes the p lifts of a residue hit p distinct
  targets one level up. That is the property the conjugacy machinery needs.

Maps evaluate on integers, on rationals with denominator coprime to p, and on
truncated residues (digit words).
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Word, residue


@dataclass(frozen=True)
class BranchMap:
    """A p-branch affine map; branches[i] = (a_i, b_i) applies on n = i (mod p)."""

    p: int
    branches: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(tuple(br) for br in self.branches))
        if self.p < 2:
            raise ValueError(f"p must be at least 2, got {self.p}")
        if len(self.branches) != self.p:
            raise ValueError(f"expected {self.p} branches, got {len(self.branches)}")
        for i, (a, b) in enumerate(self.branches):
            if gcd(a, self.p) != 1:
                raise ValueError(f"branch {i}: a={a} shares a factor with p={self.p}")
            if (a * i + b) % self.p != 0:
                raise ValueError(
                    f"branch {i}: a*i+b = {a * i + b} is not divisible by p={self.p}"
                )

    def residue(self, x: int | Fraction) -> int:
        """Which branch x takes: its residue mod p."""
        return residue(x, self.p)

    def apply(self, x: int | Fraction) -> int | Fraction:
        """One forward step. Exact: integer in, integer out."""
        a, b = self.branches[self.residue(x)]
        if isinstance(x, int):
            return (a * x + b) // self.p
        return (a * x + b) / self.p

    def apply_word(self, w: Word) -> Word:
        """Forward step on a truncated residue.

        An N-digit word stands for a residue mod p**N; its image is well
        defined mod p**(N-1), one digit shorter.
        """
        if w.base != self.p:
            raise ValueError(f"word base {w.base} does not match p={self.p}")
        if len(w) == 0:
            raise ValueError("cannot step an empty word")
        return Word.from_int(self.apply(w.value()), self.p, len(w) - 1)

    def digit_sequence(self, x: int | Fraction, k: int) -> Word:
        """The word x_0 .. x_{k-1} of orbit residues: x_i = (i-th iterate) mod p."""
        if k < 0:
            raise ValueError(f"length must be nonnegative, got {k}")
        cur = x
        digits = []
        for _ in range(k):
            digits.append(self.residue(cur))
            cur = self.apply(cur)
        return Word(self.p, tuple(digits))


def collatz_map() -> BranchMap:
    """n/2 on evens, (3n+1)/2 on odds."""
    return BranchMap(2, ((1, 0), (3, 1)))


def an_plus_b_map(a: int, b: int) -> BranchMap:
    """n/2 on evens, (a*n + b)/2 on odds; a and b must both be odd."""
    if a % 2 == 0 or b % 2 == 0:
        raise ValueError(f"a and b must both be odd, got a={a}, b={b}")
    return BranchMap(2, ((1, 0), (a, b)))


def shift_map() -> BranchMap:
    """The binary digit shift: n/2 on evens, (n-1)/2 on odds."""
    return an_plus_b_map(1, -1)


def original_collatz_map() -> BranchMap:
    """The three-branch map 2n/3, (4n-1)/3, (4n+1)/3 on the classes mod 3."""
    return BranchMap(3, ((2, 0), (4, -1), (4, 1)))


PRESETS = ("collatz", "shift", "collatz-original", "an+b")


def standard_map(kind: str, a: int | None = None, b: int | None = None) -> BranchMap:
    """Look up a named preset; "an+b" additionally needs odd a and b."""
    if kind == "collatz":
        return collatz_map()
    if kind == "shift":
        return shift_map()
    if kind == "collatz-original":
        return original_collatz_map()
    if kind == "an+b":
        if a is None or b is None:
            raise ValueError("preset an+b needs both a and b")
        return an_plus_b_map(a, b)
    raise ValueError(f"unknown map preset {kind!r}; choose from {', '.join(PRESETS)}")


def map_to_json(f: BranchMap) -> str:
    """Wire form: {"p": p, "branches": [[a0, b0], ...]}."""
    return json.dumps({"p": f.p, "branches": [list(br) for br in f.branches]})


def map_from_json(text: str) -> BranchMap:
    """Parse the wire form, re-validating the admissibility conditions."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid map JSON: {exc}") from None
    if not isinstance(data, dict) or set(data) != {"p", "branches"}:
        raise ValueError('map JSON must be an object with keys "p" and "branches"')
    p = data["p"]
    branches = data["branches"]
    if not isinstance(p, int) or not isinstance(branches, list):
        raise ValueError("map JSON: p must be an integer and branches a list")
    pairs = []
    for br in branches:
        if not (isinstance(br, list) and len(br) == 2 and all(isinstance(v, int) for v in br)):
            raise ValueError(f"map JSON: branch {br!r} is not a pair of integers")
        pairs.append((br[0], br[1]))
    return BranchMap(p, tuple(pairs))
