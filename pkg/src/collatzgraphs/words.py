"""Lyndon words, necklace counting, and FKM De Bruijn sequences."""

from .arith import Word


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    """The Moebius function: 0 on square factors, else (-1)**(number of primes)."""
    if n < 1:
        raise ValueError(f"mobius needs a positive integer, got {n}")
    primes = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            primes += 1
        else:
            d += 1
    if n > 1:
        primes += 1
    return -1 if primes % 2 else 1


def necklace_count(p: int, k: int) -> int:
    """Aperiodic rotation classes (equivalently Lyndon words) of length k over
    p letters: (1/k) * sum over d | k of mobius(d) * p**(k/d)."""
    if p < 2 or k < 1:
        raise ValueError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    total = sum(mobius(d) * p ** (k // d) for d in _divisors(k))
    return total // k


def is_lyndon(w: Word) -> bool:
    """Strictly smaller than every proper rotation of itself (hence aperiodic)."""
    d = w.digits
    if not d:
        return False
    return all(d < d[i:] + d[:i] for i in range(1, len(d)))


def is_primitive(w: Word) -> bool:
    """Not a repetition of a strictly shorter word.

    Primitive words are exactly the rotations of Lyndon words; every one has
    len(w) distinct rotations.
    """
    d = w.digits
    k = len(d)
    if k == 0:
        return False
    return all(d[:m] * (k // m) != d for m in _divisors(k) if m < k)


def _duval(p: int, cap: int):
    """All Lyndon words over {0..p-1} of length <= cap, in lexicographic order."""
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < cap:
            w.append(w[len(w) - m])
        while w and w[-1] == p - 1:
            w.pop()


def lyndon_words(p: int, k: int, mode: str = "exact") -> list[Word]:
    """Lyndon words over p letters in lexicographic order.

    mode "exact" keeps length k only; mode "dividing" keeps lengths dividing
    k, which is the concatenation order of the FKM construction.
    """
    if p < 2 or k < 1:
        raise ValueError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    if mode == "exact":
        keep = lambda n: n == k
    elif mode == "dividing":
        keep = lambda n: k % n == 0
    else:
        raise ValueError(f'mode must be "exact" or "dividing", got {mode!r}')
    return [Word(p, w) for w in _duval(p, k) if keep(len(w))]


def fkm_sequence(p: int, k: int) -> Word:
    """The FKM De Bruijn sequence of span k over p letters: the concatenation,
    in lexicographic order, of the Lyndon words whose length divides k."""
    digits: list[int] = []
    for w in lyndon_words(p, k, mode="dividing"):
        digits.extend(w.digits)
    return Word(p, tuple(digits))


def is_debruijn_sequence(s: Word, p: int, k: int) -> bool:
    """Does every length-k word over p letters occur exactly once cyclically in s?

    Requires length exactly p**k with digits below p; a verdict, not an error,
    on any failure.
    """
    if p < 2 or k < 1:
        raise ValueError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    n = p**k
    if len(s) != n or any(d >= p for d in s.digits):
        return False
    doubled = s.digits + s.digits[: k - 1]
    windows = {doubled[i : i + k] for i in range(n)}
    return len(windows) == n
