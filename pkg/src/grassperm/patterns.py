"""
Pattern containment for permutations and binary words, and enumeration of
the avoider sets the counting formulas are certified against.

Word containment is plain subsequence containment.  For permutations it is
the usual order-isomorphic-subsequence relation.  The two notions agree on
Grassmannian permutations through the word encoding, except that the
identity is reachable from several words; ``grassmannian_contains`` handles
that case.
"""

from __future__ import annotations

from . import core
from .core import Permutation, Word
from .errors import DomainError


def word_contains(wprime: Word, w: Word) -> bool:
    """True iff ``w`` is a subsequence of ``wprime`` (greedy left-to-right match).

    >>> word_contains("01001101100", "1100")
    True
    >>> word_contains("01001101100", "001001")
    False
    >>> word_contains("0", "")
    True
    """
    it = iter(wprime)
    return all(c in it for c in w)


def permutation_contains(sigma: Permutation, pi: Permutation) -> bool:
    """True iff some subsequence of ``sigma`` is order-isomorphic to ``pi``.

    Backtracking over candidate index sequences; exponential in the worst
    case but fine at the enumeration sizes used here (n <= 12).
    """
    n, m = len(sigma), len(pi)
    if m == 0:
        return True
    if m > n:
        return False
    chosen: list[int] = []

    def extend(j: int, start: int) -> bool:
        if j == m:
            return True
        for i in range(start, n - (m - j) + 1):
            if all((sigma[t] < sigma[i]) == (pi[u] < pi[j]) for u, t in enumerate(chosen)):
                chosen.append(i)
                if extend(j + 1, i + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def grassmannian_contains(wprime: Word, w: Word) -> bool:
    """Containment of G(w) in G(w'), decided at the word level.

    For non-identity G(w) this is word containment.  When G(w) is the
    identity of size k, G(w') contains it iff w' contains some ``0^j 1^(k-j)``.
    """
    core.check_word(wprime)
    core.check_word(w)
    if core.is_identity(core.grassmannian_of_word(w)):
        return any(word_contains(wprime, u) for u in core.identity_words(len(w)))
    return word_contains(wprime, w)


def is_avoiding_word(k: int, w: Word) -> bool:
    """True iff ``w`` avoids every word ``0^j 1^(k-j)``, j in [0, k].

    These are exactly the words whose permutation avoids the identity of
    size k.  For k = 0 the empty pattern is contained in everything, so no
    word qualifies.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    core.check_word(w)
    return not any(word_contains(w, u) for u in core.identity_words(k))


def enumerate_avoiding_words(k: int, m: int) -> list[Word]:
    """All length-m words avoiding every ``0^j 1^(k-j)``, lexicographically sorted.

    >>> enumerate_avoiding_words(3, 4)
    ['1010', '1100']
    >>> enumerate_avoiding_words(2, 0)
    ['']
    """
    if k < 0 or m < 0:
        raise DomainError("k and m must be nonnegative")
    if k == 0:
        return []
    if m >= 2 * k - 1:
        # pigeonhole: the word has k zeros or k ones, hence contains
        # 0^k or 1^k
        return []
    words = (format(x, f"0{m}b") if m else "" for x in range(2**m))
    return sorted(w for w in words if is_avoiding_word(k, w))


def enumerate_avoiders(n: int, pattern: Permutation) -> list[Permutation]:
    """All Grassmannian permutations of [n] avoiding ``pattern``, sorted.

    The pattern must itself be Grassmannian.  The host set is materialized
    from binary words with the identity deduplicated.
    """
    pattern = core.check_permutation(pattern)
    if not core.is_grassmannian(pattern):
        raise DomainError(f"pattern is not Grassmannian: {pattern!r}")
    return [p for p in core.grassmannian_permutations(n) if not permutation_contains(p, pattern)]
