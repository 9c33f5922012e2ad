"""
Brute-force ground truth used to certify every closed form in the package.

The permutation oracle filters all n! permutations by descent count; it
deliberately does not go through the binary-word encoding, so the counting
formulas and the oracle share no code path.  The word oracle iterates all
2^m words with its own subsequence and inversion helpers.  Only
``patterns.permutation_contains`` is shared, for pattern filtering.

Enumeration caps keep full sweeps in the seconds range; raise them
explicitly when you mean to.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .patterns import permutation_contains
from .errors import CapExceededError, DomainError

PERM_CAP = 10
WORD_CAP = 24

_CLASS_FILTERS = ("all", "bigrass", "involution")
_PARITY_FILTERS = ("all", "odd", "even")


def _descents(p: tuple[int, ...]) -> int:
    d = 0
    for i in range(len(p) - 1):
        if p[i] > p[i + 1]:
            d += 1
            if d > 1:
                break
    return d


def _inversions(p: tuple[int, ...]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def _is_involution(p: tuple[int, ...]) -> bool:
    return all(p[p[i] - 1] == i + 1 for i in range(len(p)))


def _inverse_is_grassmannian(p: tuple[int, ...]) -> bool:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return _descents(tuple(inv)) <= 1


@lru_cache(maxsize=None)
def _grassmannians(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        p for p in permutations(range(1, n + 1)) if _descents(p) <= 1
    )


def oracle_grassmannians(n: int, cap: int = PERM_CAP) -> list[tuple[int, ...]]:
    """All Grassmannian permutations of [n], found by filtering all of S_n.

    >>> len(oracle_grassmannians(4))
    12
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > cap:
        raise CapExceededError(
            f"permutation oracle capped at n <= {cap} (asked for {n}); "
            "raise the cap explicitly to go further"
        )
    return list(_grassmannians(n))


def oracle_count(
    n: int,
    pattern: tuple[int, ...],
    class_filter: str = "all",
    parity_filter: str = "all",
    cap: int = PERM_CAP,
) -> int:
    """Count Grassmannian permutations of [n] avoiding ``pattern``, filtered
    by class (biGrassmannian / involution) and inversion parity.

    >>> oracle_count(4, (1, 2, 3))
    2
    >>> oracle_count(4, (1, 2, 3), parity_filter="odd")
    1
    """
    if class_filter not in _CLASS_FILTERS:
        raise DomainError(f"unknown class filter {class_filter!r}")
    if parity_filter not in _PARITY_FILTERS:
        raise DomainError(f"unknown parity filter {parity_filter!r}")
    count = 0
    for p in oracle_grassmannians(n, cap):
        if class_filter == "bigrass" and not _inverse_is_grassmannian(p):
            continue
        if class_filter == "involution" and not _is_involution(p):
            continue
        if parity_filter != "all" and _inversions(p) % 2 != (parity_filter == "odd"):
            continue
        if permutation_contains(p, pattern):
            continue
        count += 1
    return count


def _word_contains(w: str, pat: str) -> bool:
    i = 0
    for c in w:
        if i < len(pat) and c == pat[i]:
            i += 1
    return i == len(pat)


def _word_inversions(w: str) -> int:
    ones = 0
    total = 0
    for c in w:
        if c == "1":
            ones += 1
        else:
            total += ones
    return total


def oracle_word_count(
    k: int,
    m: int,
    parity_filter: str = "all",
    zeros: int | None = None,
    cap: int = WORD_CAP,
) -> int:
    """Count length-m binary words avoiding ``0^j 1^(k-j)`` for every j in
    [0, k], optionally restricted to a zero count and an inversion parity.

    Inversions of a word are its ``10`` subsequences, counted directly.

    >>> oracle_word_count(3, 4)
    2
    >>> oracle_word_count(3, 4, parity_filter="odd")
    1
    """
    if k < 0 or m < 0:
        raise DomainError("k and m must be nonnegative")
    if parity_filter not in _PARITY_FILTERS:
        raise DomainError(f"unknown parity filter {parity_filter!r}")
    if m > cap:
        raise CapExceededError(
            f"word oracle capped at m <= {cap} (asked for {m})"
        )
    pats = ["0" * j + "1" * (k - j) for j in range(k + 1)]
    count = 0
    for x in range(2**m):
        w = format(x, f"0{m}b") if m else ""
        if any(_word_contains(w, pat) for pat in pats):
            continue
        if zeros is not None and w.count("0") != zeros:
            continue
        if parity_filter != "all" and _word_inversions(w) % 2 != (
            parity_filter == "odd"
        ):
            continue
        count += 1
    return count


def oracle_inversion_histogram(n: int, cap: int = PERM_CAP) -> dict[int, int]:
    """Histogram {inversions: count} over all Grassmannian permutations of [n]."""
    hist: dict[int, int] = {}
    for p in oracle_grassmannians(n, cap):
        inv = _inversions(p)
        hist[inv] = hist.get(inv, 0) + 1
    return hist
