"""Exact arithmetic: digit words, p-adic digit expansions, periodic digit streams.

Everything in this package is exact integer or rational arithmetic; no floats
anywhere. Rationals are plain ``fractions.Fraction`` values (already reduced,
with positive denominators), re-exported here as ``Rational``. A rational a/q
with gcd(q, p) = 1 embeds into the p-adic integers, so it has a well defined
residue mod p and an eventually periodic base-p digit expansion.

Digit order convention, used throughout: digit i is the coefficient of p**i,
so the leftmost digit of a rendered word is the least significant one. In
base 2 the word "10110" denotes 1 + 4 + 8 = 13.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m, in {0..m-1}. Raises ValueError unless gcd(a, m) = 1."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {m}") from None


def residue(x: int | Fraction, m: int) -> int:
    """Canonical residue of x in {0..m-1}.

    For a rational, the residue is numerator * denominator**-1 mod m, which
    requires the denominator to be a unit mod m.
    """
    if isinstance(x, int):
        return x % m
    x = Fraction(x)
    return x.numerator * mod_inverse(x.denominator, m) % m


@dataclass(frozen=True)
class Word:
    """A finite digit word over the alphabet {0..base-1}.

    Words double as truncated residues: a word of length N denotes its value
    sum(digits[i] * base**i), a canonical representative mod base**N.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError(f"digits out of range for base {self.base}: {self.digits}")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def __str__(self) -> str:
        if self.base <= 10:
            return "".join(str(d) for d in self.digits)
        return ",".join(str(d) for d in self.digits)

    def value(self) -> int:
        """The number this word denotes (digit i weighted by base**i)."""
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v

    def reversed(self) -> "Word":
        return Word(self.base, self.digits[::-1])

    @classmethod
    def from_int(cls, n: int, base: int, length: int) -> "Word":
        """The length-digit word of the canonical residue of n mod base**length."""
        if length < 0:
            raise ValueError(f"length must be nonnegative, got {length}")
        n %= base**length
        digits = []
        for _ in range(length):
            n, d = divmod(n, base)
            digits.append(d)
        return cls(base, tuple(digits))

    @classmethod
    def from_str(cls, text: str, base: int) -> "Word":
        """Parse a rendered word; single characters for base <= 10, else comma separated."""
        if not text:
            return cls(base, ())
        if base <= 10:
            return cls(base, tuple(int(c) for c in text))
        return cls(base, tuple(int(part) for part in text.split(",")))


@dataclass(frozen=True)
class PeriodicDigits:
    """An eventually periodic digit stream: preperiod, then period repeated forever.

    Construction canonicalizes: the period is made primitive (never a power of
    a shorter word) and any preperiod tail that could be absorbed into a
    rotation of the period is absorbed. Equality is therefore structural:
    two streams are equal iff they agree digit by digit.
    """

    base: int
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        pre = tuple(self.preperiod)
        per = tuple(self.period)
        if not per:
            raise ValueError("period must be non-empty")
        if any(not 0 <= d < self.base for d in pre + per):
            raise ValueError(f"digits out of range for base {self.base}")
        n = len(per)
        for span in range(1, n + 1):
            if n % span == 0 and per[:span] * (n // span) == per:
                per = per[:span]
                break
        # a preperiod digit matching the period's last digit shifts into the
        # period (rotated right) without changing the stream
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1:] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    def __str__(self) -> str:
        pre = Word(self.base, self.preperiod)
        per = Word(self.base, self.period)
        return f"{pre}({per})"

    def prefix(self, n: int) -> Word:
        """The first n digits of the stream, unrolled."""
        digits = list(self.preperiod)
        i = 0
        while len(digits) < n:
            digits.append(self.period[i % len(self.period)])
            i += 1
        return Word(self.base, tuple(digits[:n]))

    def to_rational(self) -> Fraction:
        """The p-adic value of the stream: A + p**|pre| * B / (1 - p**|per|)."""
        p = self.base
        a = Word(p, self.preperiod).value()
        b = Word(p, self.period).value()
        return a + Fraction(p ** len(self.preperiod) * b, 1 - p ** len(self.period))


def padic_digits(r: int | Fraction, p: int, n: int) -> Word:
    """First n base-p digits of the rational r.

    Repeated digit extraction: d = r mod p (through the inverse of the
    denominator), then r <- (r - d) / p. The result is the unique length-n
    word congruent to r mod p**n. The denominator of r must be coprime to p.
    """
    if p < 2:
        raise ValueError(f"base must be at least 2, got {p}")
    if n < 0:
        raise ValueError(f"digit count must be nonnegative, got {n}")
    r = Fraction(r)
    if gcd(r.denominator, p) != 1:
        raise ValueError(f"denominator of {r} is not coprime to {p}")
    digits = []
    for _ in range(n):
        d = residue(r, p)
        digits.append(d)
        r = (r - d) / p
    return Word(p, tuple(digits))


def periodic_expansion(r: int | Fraction, p: int) -> PeriodicDigits:
    """The full (eventually periodic) base-p expansion of a rational.

    Digit extraction r -> (r - d)/p keeps the denominator fixed and drives the
    numerator into a bounded range, so the state must repeat; the digits
    emitted between the two visits form the period.
    """
    if p < 2:
        raise ValueError(f"base must be at least 2, got {p}")
    r = Fraction(r)
    if gcd(r.denominator, p) != 1:
        raise ValueError(f"denominator of {r} is not coprime to {p}")
    seen: dict[Fraction, int] = {}
    digits: list[int] = []
    state = r
    while state not in seen:
        seen[state] = len(digits)
        d = residue(state, p)
        digits.append(d)
        state = (state - d) / p
    start = seen[state]
    return PeriodicDigits(p, tuple(digits[:start]), tuple(digits[start:]))


def rational_from_periodic(stream: PeriodicDigits) -> Fraction:
    """The exact rational denoted by an eventually periodic digit stream."""
    return stream.to_rational()
