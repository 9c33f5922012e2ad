"""
Dyck paths, the shifted lattice paths used for the parity arguments, their
peak/valley statistics, and the constructive bijections with avoiding words.

Paths are strings over {'U', 'D'}.  A Dyck path of semilength n has n of
each step and never dips below height 0.  A word with j zeros in the
avoiding set for parameter k maps two ways:

- to a Dyck path of semilength k + 1 of the form
  ``U^(k-j) D^(a0+1) U D^a1 ... U D^aj U D^(k+j-m)``
  whose first and last peak heights sum to 2k - m, and
- to a lattice path ``D^a0 U D^a1 ... U D^aj`` staying weakly above the
  line y = j - k + 1 (used for the odd/even counts).

Here (a_0, ..., a_j) is the run-length sequence of the word, m its length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import core, patterns
from .core import Word
from .errors import DomainError

UP = "U"
DOWN = "D"


def check_steps(p: str) -> str:
    if any(c not in "UD" for c in p):
        raise DomainError(f"not a U/D step string: {p!r}")
    return p


def is_dyck_path(p: str) -> bool:
    """True iff ``p`` is balanced and no prefix has more downs than ups."""
    h = 0
    for c in p:
        h += 1 if c == UP else -1
        if h < 0:
            return False
    return h == 0


def check_dyck(p: str) -> str:
    check_steps(p)
    if not is_dyck_path(p):
        raise DomainError(f"not a Dyck path: {p!r}")
    return p


def semilength(p: str) -> int:
    return len(p) // 2


def extrema(p: str) -> list[tuple[int, str, int]]:
    """All peaks and valleys of a step string, left to right.

    Returns triples (i, kind, height): the factor occupies steps i and i+1
    (0-based) and ``height`` is the y-coordinate at the turning point.

    >>> extrema("UDUUDD")
    [(0, 'peak', 1), (1, 'valley', 0), (3, 'peak', 2)]
    """
    check_steps(p)
    out = []
    h = 0
    for i, c in enumerate(p):
        h += 1 if c == UP else -1
        if i + 1 < len(p) and c != p[i + 1]:
            out.append((i, "peak" if c == UP else "valley", h))
    return out


def peaks(p: str) -> list[int]:
    """Peak heights in left-to-right order.

    >>> peaks("UDUD")
    [1, 1]
    """
    return [h for _, kind, h in extrema(p) if kind == "peak"]


def valleys(p: str) -> list[int]:
    """Valley heights in left-to-right order."""
    return [h for _, kind, h in extrema(p) if kind == "valley"]


def first_last_peak_sum(p: str) -> int:
    """Height of the first peak plus height of the last peak.

    A single-peak path contributes twice its peak height.
    """
    ps = peaks(check_dyck(p))
    if not ps:
        raise DomainError("the empty path has no peaks")
    return ps[0] + ps[-1]


def dyck_run_sequence(p: str) -> tuple[int, ...]:
    """(a_1, ..., a_n) where a_i is the number of downs right after the i-th up."""
    check_dyck(p)
    runs = []
    for c in p:
        if c == UP:
            runs.append(0)
        else:
            runs[-1] += 1
    return tuple(runs)


def is_odd_dyck(p: str) -> bool:
    """Parity of a Dyck path: an odd number of odd terms among a_1, a_3, a_5, ...

    Matches the word parity transported through the lattice-path encoding
    (not through ``word_to_dyck``, whose parity behaviour shifts with k and
    the number of zeros).

    >>> is_odd_dyck("UDUD"), is_odd_dyck("UUDD")
    (True, False)
    """
    a = dyck_run_sequence(p)
    return sum(a[i] % 2 for i in range(0, len(a), 2)) % 2 == 1


def word_to_dyck(k: int, w: Word) -> str:
    """Encode an avoiding word as a Dyck path of semilength k + 1.

    The first and last peak heights of the image sum to 2k - len(w).

    >>> word_to_dyck(3, "1100")
    'UDUUDDUD'
    """
    if not patterns.is_avoiding_word(k, w):
        raise DomainError(f"{w!r} is not an avoiding word for k={k}")
    m = len(w)
    a = core.a_sequence(w)
    j = len(a) - 1
    path = (
        UP * (k - j)
        + DOWN * (a[0] + 1)
        + "".join(UP + DOWN * a[i] for i in range(1, j + 1))
        + UP
        + DOWN * (k + j - m)
    )
    assert is_dyck_path(path) and semilength(path) == k + 1
    return path


def dyck_to_word(k: int, p: str) -> Word:
    """Inverse of :func:`word_to_dyck`.

    Defined on every Dyck path of semilength k + 1 except the staircase
    ``U^(k+1) D^(k+1)``; the recovered word has length 2k minus the path's
    first/last peak height sum.
    """
    if k < 1:
        raise DomainError("k must be positive")
    check_dyck(p)
    if semilength(p) != k + 1:
        raise DomainError(f"expected semilength {k + 1}, got {semilength(p)}")
    first_run = len(p) - len(p.lstrip(UP))
    j = k - first_run
    if j < 0:
        raise DomainError("path outside the bijection image (first peak too high)")
    blocks = dyck_run_sequence(p)[first_run - 1 :]
    # blocks[0] is the down-run ending the first peak; then one entry per
    # remaining up-step, j + 1 of them.
    a = (blocks[0] - 1,) + blocks[1 : j + 1]
    w = core.word_from_a_sequence(a)
    assert patterns.is_avoiding_word(k, w)
    return w


@dataclass(frozen=True)
class LatticePath:
    """A U/D path from the origin staying weakly above y = zeros - k + 1.

    ``zeros`` up-steps stand for the word's 0-bits, the down-steps for its
    1-bits, so the word length is len(steps).
    """

    steps: str
    k: int
    zeros: int = field(init=False)

    def __post_init__(self):
        check_steps(self.steps)
        if self.k < 1:
            raise DomainError("k must be positive")
        object.__setattr__(self, "zeros", self.steps.count(UP))
        h = 0
        for c in self.steps:
            h += 1 if c == UP else -1
            if h < self.floor:
                raise DomainError(
                    f"path {self.steps!r} falls below its floor y={self.floor}"
                )

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def floor(self) -> int:
        return self.zeros - self.k + 1


def lattice_run_sequence(path: LatticePath) -> tuple[int, ...]:
    """(a_0, ..., a_j): leading down-run, then the down-run after each up-step."""
    runs = [0]
    for c in path.steps:
        if c == UP:
            runs.append(0)
        else:
            runs[-1] += 1
    return tuple(runs)


def is_odd_lattice(path: LatticePath) -> bool:
    """Same odd/even rule as for words: odd count of odd a_i at odd i."""
    a = lattice_run_sequence(path)
    return sum(a[i] % 2 for i in range(1, len(a), 2)) % 2 == 1


def word_to_lattice(k: int, w: Word) -> LatticePath:
    """Encode an avoiding word as the lattice path ``D^a0 U D^a1 ... U D^aj``.

    >>> word_to_lattice(5, "110011").steps
    'DDUUDD'
    """
    if not patterns.is_avoiding_word(k, w):
        raise DomainError(f"{w!r} is not an avoiding word for k={k}")
    a = core.a_sequence(w)
    steps = DOWN * a[0] + "".join(UP + DOWN * a[i] for i in range(1, len(a)))
    return LatticePath(steps, k)


def lattice_to_word(path: LatticePath) -> Word:
    """Inverse of :func:`word_to_lattice`."""
    w = core.word_from_a_sequence(lattice_run_sequence(path))
    assert patterns.is_avoiding_word(path.k, w)
    return w


def _toggle(steps: str, i: int) -> str:
    return steps[:i] + steps[i + 1] + steps[i] + steps[i + 2 :]


def find_first_even_extremum(p: str) -> tuple[int, str, int]:
    """First peak or valley of a Dyck path at even height, as (index, kind, height)."""
    check_dyck(p)
    for item in extrema(p):
        if item[2] % 2 == 0:
            return item
    raise DomainError(f"all peaks and valleys of {p!r} are at odd height")


def toggle_first_even_extremum(p: str) -> str:
    """Swap the first even-height peak into a valley (or valley into a peak).

    An involution on Dyck paths with at least one even-height extremum, and
    it flips the path's parity under :func:`is_odd_dyck`.

    >>> toggle_first_even_extremum("UDUUDUDD")
    'UUDUDUDD'
    >>> toggle_first_even_extremum("UUDUDUDD")
    'UDUUDUDD'
    """
    i, _, _ = find_first_even_extremum(p)
    out = _toggle(p, i)
    assert is_dyck_path(out)
    return out


def find_first_floor_parity_extremum(path: LatticePath) -> tuple[int, str, int]:
    """First extremum whose height has the parity of the floor line."""
    for item in extrema(path.steps):
        if item[2] % 2 == path.floor % 2:
            return item
    raise DomainError(f"no peak or valley of {path.steps!r} matches the floor parity")


def toggle_lattice_path(path: LatticePath) -> LatticePath:
    """The parity-flipping involution on lattice paths.

    Toggles the first peak/valley whose height has the same parity as the
    floor y = zeros - k + 1.
    """
    i, _, _ = find_first_floor_parity_extremum(path)
    return LatticePath(_toggle(path.steps, i), path.k)


def halve_all_odd_path(p: str) -> str:
    """Collapse a Dyck path with all extrema at odd height to half its size.

    Such a path has odd semilength n and run form
    ``U^(2a+1) D^(2b) ... U^(2c) D^(2d+1)``; halving every run (after
    shaving the forced odd step off the first and last) gives a Dyck path
    of semilength (n - 1) / 2, bijectively.

    >>> halve_all_odd_path("UUUDDD")
    'UD'
    >>> halve_all_odd_path("UD")
    ''
    """
    check_dyck(p)
    if not p:
        raise DomainError("the empty path is not in the domain")
    if any(h % 2 == 0 for _, _, h in extrema(p)):
        raise DomainError(f"{p!r} has a peak or valley at even height")
    if semilength(p) % 2 == 0:
        raise DomainError(f"{p!r} has even semilength")
    runs: list[list] = []
    for c in p:
        if runs and runs[-1][0] == c:
            runs[-1][1] += 1
        else:
            runs.append([c, 1])
    runs[0][1] -= 1
    runs[-1][1] -= 1
    assert all(n % 2 == 0 for _, n in runs)
    out = "".join(c * (n // 2) for c, n in runs)
    assert is_dyck_path(out) and semilength(out) == (semilength(p) - 1) // 2
    return out


def enumerate_dyck(n: int) -> list[str]:
    """All Dyck paths of semilength n in lexicographic order ('D' < 'U')."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    out: list[str] = []
    steps: list[str] = []

    def build(h: int, ups_left: int) -> None:
        if ups_left == 0 and h == 0:
            out.append("".join(steps))
            return
        if h > 0:
            steps.append(DOWN)
            build(h - 1, ups_left)
            steps.pop()
        if ups_left > 0:
            steps.append(UP)
            build(h + 1, ups_left - 1)
            steps.pop()

    build(0, n)
    return out


def path_svg(steps: str, floor: int = 0, unit: int = 24) -> str:
    """Minimal SVG rendering of a path, with its floor line when below 0."""
    check_steps(steps)
    hs = [0]
    for c in steps:
        hs.append(hs[-1] + (1 if c == UP else -1))
    top, bot = max(hs + [0]), min(hs + [floor])
    width, height = unit * (len(steps) + 2), unit * (top - bot + 2)
    y = lambda v: height - unit * (v - bot + 1)
    pts = " ".join(f"{unit * (i + 1)},{y(v)}" for i, v in enumerate(hs))
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<line x1="{unit}" y1="{y(floor)}" x2="{width - unit}" y2="{y(floor)}" '
        'stroke="#999" stroke-dasharray="4"/>',
        f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="2"/>',
        "</svg>",
    ]
    return "\n".join(lines)
