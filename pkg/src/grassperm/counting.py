"""
Exact counting formulas: binomials, Catalan and ballot numbers, the three
equivalent expressions for the number of length-m words avoiding every
``0^j 1^(k-j)``, peak statistics of Dyck paths, fixed-point counts, and the
grand totals.

Everything is exact integer arithmetic.  Binomials follow the combinatorial
convention C(n, k) = 0 outside 0 <= k <= n, which lets the alternating sums
run over their natural index ranges without case splits.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import DomainError


def binomial(n: int, k: int) -> int:
    """C(n, k), and 0 whenever k < 0, k > n, or n < 0.

    >>> binomial(5, 2)
    10
    >>> binomial(1, 2)
    0
    >>> binomial(-1, 0)
    0
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    """The n-th Catalan number C(2n, n) / (n + 1); 0 for negative n.

    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        return 0
    return math.comb(2 * n, n) // (n + 1)


def catalan_or_zero(x: int | Fraction) -> int:
    """Catalan number at ``x`` when ``x`` is a nonnegative integer, else 0.

    Several parity formulas index Catalan numbers at half-integers like
    (k - 2)/2; those terms vanish by convention.

    >>> catalan_or_zero(Fraction(3, 2))
    0
    >>> catalan_or_zero(Fraction(4, 2))
    2
    """
    if isinstance(x, Fraction):
        if x.denominator != 1:
            return 0
        x = int(x)
    elif not isinstance(x, int):
        raise DomainError(f"index must be an int or Fraction, got {x!r}")
    return catalan(x)


def ballot(n: int, k: int) -> int:
    """Ballot number T(n, k) = (n - k + 1)/(n + 1) * C(n + k, n).

    Counts Dyck paths of semilength n + 1 whose last peak has height
    n + 1 - k.  Zero outside 0 <= k <= n + 1 or for n < 0.

    >>> ballot(3, 0), ballot(3, 1), ballot(3, 3)
    (1, 3, 5)
    """
    if n < 0 or k < 0 or k > n + 1:
        return 0
    q, r = divmod((n - k + 1) * math.comb(n + k, n), n + 1)
    assert r == 0, f"ballot({n}, {k}) not an integer"
    return q


def avoiding_word_count_alternating(k: int, m: int) -> int:
    """Alternating closed form for the number of length-m avoiding words.

    sum_{j=1}^{2k-m} (-1)^(j-1) * j * C(2k-m-j, j) * catalan(k-j); terms with
    2k - m - j < j vanish through the binomial convention.  Defined for all
    k, m >= 0 (empty sum once m >= 2k).
    """
    if k < 0 or m < 0:
        raise DomainError("k and m must be nonnegative")
    return sum(
        (-1) ** (j - 1) * j * binomial(2 * k - m - j, j) * catalan(k - j)
        for j in range(1, 2 * k - m + 1)
    )


# Memo for the recurrence, keyed by (k, m); only the interior cells
# 1 <= m <= 2k - 2 are stored, the base cases stay implicit.  Rows are
# filled in order, so a concurrent reader only ever sees finished cells.
_recurrence_memo: dict[tuple[int, int], int] = {}
_rows_filled = 0


def avoiding_word_count(k: int, m: int) -> int:
    """Number of length-m words avoiding every ``0^j 1^(k-j)``, by recurrence.

    Base cases: 0 for k = 0, 1 for m = 0 (k >= 1), 0 for m >= 2k - 1;
    otherwise counts split on the last letter, subtracting the ballot number
    of shorter words that already carry k - 1 zeros:

        count(k, m) = count(k, m-1) + count(k-1, m-1) - ballot(k-1, m-k)

    >>> avoiding_word_count(3, 4)
    2
    >>> avoiding_word_count(4, 4)
    11
    """
    if k < 0 or m < 0:
        raise DomainError("k and m must be nonnegative")
    if k == 0:
        return 0
    if m == 0:
        return 1
    if m >= 2 * k - 1:
        return 0
    global _rows_filled
    for kk in range(_rows_filled + 1, k + 1):
        for mm in range(1, 2 * kk - 1):
            _recurrence_memo[(kk, mm)] = (
                _memo_cell(kk, mm - 1)
                + _memo_cell(kk - 1, mm - 1)
                - ballot(kk - 1, mm - kk)
            )
    _rows_filled = max(_rows_filled, k)
    return _recurrence_memo[(k, m)]


def _memo_cell(k: int, m: int) -> int:
    if m == 0:
        return 1 if k >= 1 else 0
    if k == 0 or m >= 2 * k - 1:
        return 0
    return _recurrence_memo[(k, m)]


def avoiding_word_count_binomial(k: int, m: int) -> int:
    """Binomial-difference form: sum_{a=1}^{2k-m-1} [C(m, k-a) - C(m, k)]."""
    if k < 0 or m < 0:
        raise DomainError("k and m must be nonnegative")
    return sum(binomial(m, k - a) - binomial(m, k) for a in range(1, 2 * k - m))


def avoiding_perm_count(k: int, m: int) -> int:
    """Grassmannian permutations of [m] avoiding the identity of size k.

    Below length k nothing contains an increasing run of k, so the count is
    all of them (2^m - m); from length k on it matches the word count, the
    identity words having been excluded already.
    """
    if k < 1:
        raise DomainError("k must be positive")
    if m < k:
        return 2**m - m
    return avoiding_word_count(k, m)


def nonidentity_avoider_count(n: int, k: int) -> int:
    """Grassmannian permutations of [n] avoiding a fixed non-identity
    Grassmannian pattern of size k: 1 + sum_{j=2}^{k-1} C(n, j).

    Independent of which non-identity pattern is chosen.

    >>> nonidentity_avoider_count(4, 3)
    7
    """
    if k < 2:
        raise DomainError("pattern size k must be at least 2")
    return 1 + sum(binomial(n, j) for j in range(2, k))


def dyck_peak_pair_count(n: int, a: int, b: int) -> int:
    """Dyck paths of semilength n + 1 with first peak height a and last peak
    height b: C(2n-a-b, n-a) - C(2n-a-b, n), valid for a, b >= 1, a+b <= 2n.
    """
    if a < 1 or b < 1 or a + b > 2 * n:
        raise DomainError(f"need a, b >= 1 and a + b <= 2n, got ({n}, {a}, {b})")
    return binomial(2 * n - a - b, n - a) - binomial(2 * n - a - b, n)


def dyck_peak_sum_count(n: int, s: int) -> int:
    """Dyck paths of semilength n whose first and last peak heights sum to s.

    sum_{j=1}^{floor(s/2)} (-1)^(j-1) * j * C(s-j, j) * catalan(n-1-j),
    valid for s <= 2n - 2 (the single-peak staircase path is excluded).
    """
    if n < 1:
        raise DomainError("n must be positive")
    if s > 2 * n - 2:
        raise DomainError(f"s must be at most 2n - 2, got s={s}, n={n}")
    return sum(
        (-1) ** (j - 1) * j * binomial(s - j, j) * catalan(n - 1 - j)
        for j in range(1, s // 2 + 1)
    )


def fixed_point_count(n: int, k: int) -> int:
    """Grassmannian permutations of [n] with exactly k fixed points.

    1 for k = n (the identity), 0 for k = n - 1, else (k+1) * 2^(n-k-2).

    >>> [fixed_point_count(4, k) for k in range(5)]
    [4, 4, 3, 0, 1]
    """
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got ({n}, {k})")
    if k == n:
        return 1
    if k == n - 1:
        return 0
    return (k + 1) * 2 ** (n - k - 2)


def total_avoiding_words(k: int) -> int:
    """Words of any length avoiding every ``0^j 1^(k-j)``: catalan(k+1) - 1."""
    if k < 1:
        raise DomainError("k must be positive")
    return catalan(k + 1) - 1


def total_avoiding_perms(k: int) -> int:
    """Grassmannian permutations of any size avoiding the identity of size k:
    catalan(k+1) - C(k, 2) - 1.

    The C(k, 2) correction removes the identity-word multiplicity: each size
    m < k contributes m extra words for its single identity permutation.
    """
    if k < 1:
        raise DomainError("k must be positive")
    return catalan(k + 1) - binomial(k, 2) - 1


def avoiding_words_with_zeros(k: int, j: int) -> int:
    """Avoiding words (any length) with exactly j zeros: the ballot number
    T(k, j + 1).

    >>> avoiding_words_with_zeros(3, 2)
    5
    """
    if k < 1 or j < 0:
        raise DomainError("need k >= 1 and j >= 0")
    return ballot(k, j + 1)


def ballot_catalan_identity_holds(a: int, b: int) -> bool:
    """Check T(a, b) = sum_{j=0}^{a-b} (-1)^j * C(a-b-j, j) * catalan(a-j)."""
    if a < 0 or b < 0 or b > a:
        raise DomainError(f"need 0 <= b <= a, got ({a}, {b})")
    rhs = sum(
        (-1) ** j * binomial(a - b - j, j) * catalan(a - j) for j in range(a - b + 1)
    )
    return ballot(a, b) == rhs


class IdentityCheck(NamedTuple):
    identity: str
    k: int
    m: int | None
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def verify_concluding_identities(k_max: int) -> list[IdentityCheck]:
    """Evaluate both closing identities for every k up to k_max.

    (i)  the alternating sum equals 2^m for all 0 <= m < k, and
    (ii) sum_{j=1}^{k} (-1)^(j-1) * j * C(k-j, j) * catalan(k-j) = 2^k - k - 1.
    """
    if k_max < 1:
        raise DomainError("k_max must be positive")
    checks = []
    for k in range(1, k_max + 1):
        for m in range(k):
            checks.append(
                IdentityCheck(
                    "alternating_sum_is_power_of_two",
                    k,
                    m,
                    2**m,
                    avoiding_word_count_alternating(k, m),
                )
            )
        lhs = sum(
            (-1) ** (j - 1) * j * binomial(k - j, j) * catalan(k - j)
            for j in range(1, k + 1)
        )
        checks.append(
            IdentityCheck("alternating_sum_at_full_length", k, None, 2**k - k - 1, lhs)
        )
    return checks


def avoiding_word_table(k_max: int) -> Iterator[tuple[int, int, int]]:
    """Rows (k, m, count) for 1 <= k <= k_max, 0 <= m <= 2k - 2, row-major."""
    if k_max < 1:
        raise DomainError("k_max must be positive")
    for k in range(1, k_max + 1):
        for m in range(2 * k - 1):
            yield k, m, avoiding_word_count(k, m)
