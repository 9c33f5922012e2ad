"""
Verification suites: every closed form, recurrence, and bijection swept
against the brute-force oracles and against each other.

Each check compares a family of cells and records how many agree; a check
passes iff every cell does, and the first disagreeing cell is kept in the
check's params so failures name the exact spot.  Suites run in a fixed
declared order and all output is deterministic.

``Options.fault`` perturbs one cell of the recurrence table as seen by the
oracle-agreement check; it exists so the harness can prove that a single
wrong value turns the run red.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from . import classes, core, counting, oracle, parity, paths, patterns, series
from .errors import DomainError


@dataclass(frozen=True)
class Options:
    k_max: int = 6
    perm_cap: int = 9
    word_cap: int = 20
    fault: tuple[int, int] | None = None


@dataclass(frozen=True)
class Check:
    name: str
    params: dict
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _sweep(name: str, params: dict, cells: Iterable[tuple[dict, int, int]]) -> Check:
    """Fold per-cell (params, expected, actual) comparisons into one check."""
    total = matched = 0
    first = None
    for cell, expected, actual in cells:
        total += 1
        if expected == actual:
            matched += 1
        elif first is None:
            first = {**cell, "expected": expected, "actual": actual}
    params = dict(params)
    if first is not None:
        params["first_mismatch"] = first
    return Check(name, params, total, matched)


def _word_m_range(k: int, word_cap: int) -> range:
    return range(0, min(2 * k - 2, word_cap) + 1)


def suite_counting(opts: Options) -> list[Check]:
    fault = opts.fault

    def table(k: int, m: int) -> int:
        value = counting.avoiding_word_count(k, m)
        return value + 1 if fault == (k, m) else value

    checks = [
        _sweep(
            "recurrence_vs_word_oracle",
            {"k_max": opts.k_max, "word_cap": opts.word_cap},
            (
                (
                    {"k": k, "m": m},
                    oracle.oracle_word_count(k, m, cap=opts.word_cap),
                    table(k, m),
                )
                for k in range(1, opts.k_max + 1)
                for m in _word_m_range(k, opts.word_cap)
            ),
        ),
        _sweep(
            "closed_forms_agree",
            {"k_max": opts.k_max},
            (
                (
                    {"k": k, "m": m, "form": form},
                    counting.avoiding_word_count(k, m),
                    value,
                )
                for k in range(1, opts.k_max + 1)
                for m in range(1, 2 * k + 1)
                for form, value in (
                    ("alternating", counting.avoiding_word_count_alternating(k, m)),
                    ("binomial", counting.avoiding_word_count_binomial(k, m)),
                )
            ),
        ),
        _sweep(
            "word_count_vs_permutation_count",
            {"k_max": opts.k_max, "word_cap": opts.word_cap},
            (
                (
                    {"k": k, "m": m},
                    counting.avoiding_word_count(k, m),
                    len(patterns.enumerate_avoiders(m, core.identity_permutation(k)))
                    + (m if m < k else 0),
                )
                for k in range(2, opts.k_max + 1)
                for m in _word_m_range(k, opts.word_cap)
            ),
        ),
        _sweep(
            "total_words",
            {"k_max": opts.k_max},
            (
                (
                    {"k": k},
                    counting.total_avoiding_words(k),
                    sum(counting.avoiding_word_count(k, m) for m in range(2 * k - 1)),
                )
                for k in range(1, opts.k_max + 1)
            ),
        ),
        _sweep(
            "total_perms",
            {"k_max": opts.k_max},
            (
                (
                    {"k": k},
                    counting.total_avoiding_perms(k),
                    sum(counting.avoiding_perm_count(k, m) for m in range(2 * k - 1)),
                )
                for k in range(1, opts.k_max + 1)
            ),
        ),
        _sweep(
            "words_by_zero_count",
            {"k_max": opts.k_max},
            (
                (
                    {"k": k, "j": j},
                    sum(
                        oracle.oracle_word_count(k, m, zeros=j, cap=opts.word_cap)
                        for m in _word_m_range(k, opts.word_cap)
                    ),
                    counting.avoiding_words_with_zeros(k, j),
                )
                for k in range(1, opts.k_max + 1)
                for j in range(k + 1)
            ),
        ),
        _sweep(
            "fixed_points_vs_oracle",
            {"perm_cap": opts.perm_cap},
            (
                (
                    {"n": n, "k": k},
                    sum(
                        1
                        for p in oracle.oracle_grassmannians(n, opts.perm_cap)
                        if len(core.fixed_points(p)) == k
                    ),
                    counting.fixed_point_count(n, k),
                )
                for n in range(opts.perm_cap + 1)
                for k in range(n + 1)
            ),
        ),
        _sweep(
            "fixed_point_row_sums",
            {"n_max": 20},
            (
                (
                    {"n": n},
                    2**n - n,
                    sum(counting.fixed_point_count(n, k) for k in range(n + 1)),
                )
                for n in range(1, 21)
            ),
        ),
    ]
    return checks


def suite_parity(opts: Options) -> list[Check]:
    return [
        _sweep(
            "odd_vs_word_oracle",
            {"k_max": opts.k_max, "word_cap": opts.word_cap},
            (
                (
                    {"k": k, "m": m},
                    oracle.oracle_word_count(k, m, parity_filter="odd", cap=opts.word_cap),
                    parity.odd_word_count(k, m),
                )
                for k in range(1, opts.k_max + 1)
                for m in _word_m_range(k, opts.word_cap)
            ),
        ),
        _sweep(
            "odd_plus_even_is_total",
            {"k_max": opts.k_max},
            (
                (
                    {"k": k, "m": m},
                    counting.avoiding_word_count(k, m),
                    parity.odd_word_count(k, m) + parity.even_word_count(k, m),
                )
                for k in range(1, opts.k_max + 1)
                for m in range(2 * k - 1)
            ),
        ),
        _sweep(
            "closed_form_at_max_length",
            {"k_max": max(opts.k_max, 2)},
            (
                (
                    {"k": k},
                    parity.odd_word_count(k, 2 * k - 2),
                    parity.odd_word_count_max_length(k),
                )
                for k in range(2, max(opts.k_max, 2) + 1)
            ),
        ),
        _sweep(
            "one_shorter_is_twice_even",
            {"k_max": max(opts.k_max, 2)},
            (
                (
                    {"k": k},
                    parity.odd_word_count(k, 2 * k - 3),
                    2 * parity.even_word_count(k, 2 * k - 2),
                )
                for k in range(2, max(opts.k_max, 2) + 1)
            ),
        ),
        _sweep(
            "odd_words_by_zero_count",
            {"k_max": opts.k_max},
            (
                (
                    {"k": k, "j": j},
                    sum(
                        oracle.oracle_word_count(
                            k, m, parity_filter="odd", zeros=j, cap=opts.word_cap
                        )
                        for m in _word_m_range(k, opts.word_cap)
                    ),
                    parity.odd_avoiding_words_with_zeros(k, j),
                )
                for k in range(1, opts.k_max + 1)
                for j in range(k + 1)
            ),
        ),
        _sweep(
            "total_odd",
            {"k_max": opts.k_max},
            (
                (
                    {"k": k},
                    sum(
                        parity.odd_word_count(k, m) for m in range(2 * k - 1)
                    ),
                    parity.total_odd_avoiders(k),
                )
                for k in range(1, opts.k_max + 1)
            ),
        ),
    ]


def suite_classes(opts: Options) -> list[Check]:
    id_k = core.identity_permutation

    def cells():
        # A pattern longer than the host matches nothing, so these are
        # unrestricted totals per class.
        for m in range(opts.perm_cap + 1):
            yield (
                {"class": "bigrass", "m": m},
                oracle.oracle_count(m, id_k(m + 1), "bigrass", cap=opts.perm_cap),
                classes.bigrassmannian_count(m),
            )
            yield (
                {"class": "bigrass_odd", "m": m},
                oracle.oracle_count(m, id_k(m + 1), "bigrass", "odd", opts.perm_cap),
                classes.odd_bigrassmannian_count(m),
            )
            yield (
                {"class": "invol", "m": m},
                oracle.oracle_count(m, id_k(m + 1), "involution", cap=opts.perm_cap),
                classes.involution_count(m),
            )
            yield (
                {"class": "invol_odd", "m": m},
                oracle.oracle_count(m, id_k(m + 1), "involution", "odd", opts.perm_cap),
                classes.odd_involution_count(m),
            )

    def avoider_cells():
        for k in range(2, opts.k_max + 1):
            for m in range(opts.perm_cap + 1):
                yield (
                    {"class": "bigrass", "k": k, "m": m},
                    oracle.oracle_count(m, id_k(k), "bigrass", cap=opts.perm_cap),
                    classes.bigrassmannian_avoider_count(k, m),
                )
                yield (
                    {"class": "bigrass_odd", "k": k, "m": m},
                    oracle.oracle_count(m, id_k(k), "bigrass", "odd", opts.perm_cap),
                    classes.odd_bigrassmannian_avoider_count(k, m),
                )
                yield (
                    {"class": "invol", "k": k, "m": m},
                    oracle.oracle_count(m, id_k(k), "involution", cap=opts.perm_cap),
                    classes.involution_avoider_count(k, m),
                )
                yield (
                    {"class": "invol_odd", "k": k, "m": m},
                    oracle.oracle_count(m, id_k(k), "involution", "odd", opts.perm_cap),
                    classes.odd_involution_avoider_count(k, m),
                )

    return [
        _sweep("class_totals_vs_oracle", {"perm_cap": opts.perm_cap}, cells()),
        _sweep(
            "class_avoiders_vs_oracle",
            {"k_max": opts.k_max, "perm_cap": opts.perm_cap},
            avoider_cells(),
        ),
        _sweep(
            "odd_involution_shift_relation",
            {"m_max": 40},
            (
                (
                    {"m": m},
                    classes.odd_involution_count(m - 4) + m - 1,
                    classes.odd_involution_count(m),
                )
                for m in range(5, 41)
            ),
        ),
        _sweep(
            "bigrassmannian_iff_avoids_2413",
            {"n_max": min(opts.perm_cap, 8)},
            (
                (
                    {"n": n, "perm": core.perm_to_str(p)},
                    int(not patterns.permutation_contains(p, (2, 4, 1, 3))),
                    int(classes.is_bigrassmannian(p)),
                )
                for n in range(min(opts.perm_cap, 8) + 1)
                for p in core.grassmannian_permutations(n)
            ),
        ),
        _sweep(
            "involution_iff_word_form",
            {"n_max": min(opts.perm_cap, 8)},
            (
                (
                    {"n": n, "perm": core.perm_to_str(p)},
                    int(classes.has_involution_word_form(core.canonical_word(p))),
                    int(classes.is_grassmannian_involution(p)),
                )
                for n in range(min(opts.perm_cap, 8) + 1)
                for p in core.grassmannian_permutations(n)
            ),
        ),
    ]


def suite_paths(opts: Options) -> list[Check]:
    k_top = min(opts.k_max, 7)

    def bijection_cells():
        for k in range(1, k_top + 1):
            by_sum: dict[int, set[str]] = {}
            for p in paths.enumerate_dyck(k + 1):
                if paths.peaks(p):
                    by_sum.setdefault(paths.first_last_peak_sum(p), set()).add(p)
            for m in _word_m_range(k, opts.word_cap):
                words = patterns.enumerate_avoiding_words(k, m)
                images = {paths.word_to_dyck(k, w) for w in words}
                round_trip = all(
                    paths.dyck_to_word(k, paths.word_to_dyck(k, w)) == w for w in words
                )
                target = by_sum.get(2 * k - m, set())
                yield (
                    {"k": k, "m": m, "aspect": "image_set"},
                    int(images == target and len(images) == len(words)),
                    1,
                )
                yield ({"k": k, "m": m, "aspect": "round_trip"}, int(round_trip), 1)

    def toggle_cells():
        for n in range(1, 9):
            all_odd = 0
            for p in paths.enumerate_dyck(n):
                if all(h % 2 == 1 for h in paths.peaks(p) + paths.valleys(p)):
                    all_odd += 1
                    continue
                q = paths.toggle_first_even_extremum(p)
                yield (
                    {"n": n, "path": p, "aspect": "involution"},
                    int(paths.toggle_first_even_extremum(q) == p),
                    1,
                )
                yield (
                    {"n": n, "path": p, "aspect": "parity_flip"},
                    int(paths.is_odd_dyck(q) != paths.is_odd_dyck(p)),
                    1,
                )
            yield (
                {"n": n, "aspect": "all_odd_count"},
                all_odd,
                parity.all_odd_extrema_count(n),
            )

    def halving_cells():
        for n in range(1, 10, 2):
            domain = [
                p
                for p in paths.enumerate_dyck(n)
                if all(h % 2 == 1 for h in paths.peaks(p) + paths.valleys(p))
            ]
            images = {paths.halve_all_odd_path(p) for p in domain}
            yield (
                {"n": n},
                int(
                    len(images) == len(domain)
                    and images == set(paths.enumerate_dyck((n - 1) // 2))
                ),
                1,
            )
            yield (
                {"n": n, "aspect": "all_odd_paths_are_odd"},
                sum(1 for p in domain if paths.is_odd_dyck(p)),
                len(domain),
            )

    def peak_formula_cells():
        for n in range(2, 8):
            all_paths = paths.enumerate_dyck(n)
            sums = [paths.first_last_peak_sum(p) for p in all_paths]
            for s in range(2, 2 * n - 1):
                yield (
                    {"n": n, "s": s},
                    sums.count(s),
                    counting.dyck_peak_sum_count(n, s),
                )
            firsts_lasts = [
                (paths.peaks(p)[0], paths.peaks(p)[-1]) for p in all_paths
            ]
            for a in range(1, n + 1):
                for b in range(1, 2 * (n - 1) - a + 1):
                    yield (
                        {"n": n - 1, "a": a, "b": b},
                        firsts_lasts.count((a, b)),
                        counting.dyck_peak_pair_count(n - 1, a, b),
                    )

    def lattice_cells():
        for k in range(1, min(opts.k_max, 6) + 1):
            for m in _word_m_range(k, opts.word_cap):
                untoggleable_balance = 0
                for w in patterns.enumerate_avoiding_words(k, m):
                    lp = paths.word_to_lattice(k, w)
                    yield (
                        {"k": k, "m": m, "word": w, "aspect": "round_trip"},
                        int(paths.lattice_to_word(lp) == w),
                        1,
                    )
                    yield (
                        {"k": k, "m": m, "word": w, "aspect": "parity_transport"},
                        int(paths.is_odd_lattice(lp) == core.is_odd_word(w)),
                        1,
                    )
                    try:
                        partner = paths.toggle_lattice_path(lp)
                    except DomainError:
                        untoggleable_balance += -1 if paths.is_odd_lattice(lp) else 1
                        continue
                    yield (
                        {"k": k, "m": m, "word": w, "aspect": "toggle"},
                        int(
                            paths.toggle_lattice_path(partner) == lp
                            and paths.is_odd_lattice(partner)
                            != paths.is_odd_lattice(lp)
                        ),
                        1,
                    )
                # The toggle pairs odd with even, so the even-odd surplus
                # lives entirely on the untoggleable paths.
                yield (
                    {"k": k, "m": m, "aspect": "untoggleable_balance"},
                    counting.avoiding_word_count(k, m)
                    - 2 * parity.odd_word_count(k, m),
                    untoggleable_balance,
                )

    return [
        _sweep(
            "word_dyck_bijection",
            {"k_max": k_top, "word_cap": opts.word_cap},
            bijection_cells(),
        ),
        _sweep("even_extremum_toggle", {"n_max": 8}, toggle_cells()),
        _sweep("all_odd_halving", {"n_max": 9}, halving_cells()),
        _sweep("peak_statistics_formulas", {"n_max": 7}, peak_formula_cells()),
        _sweep(
            "lattice_encoding",
            {"k_max": min(opts.k_max, 6), "word_cap": opts.word_cap},
            lattice_cells(),
        ),
    ]


def suite_series(opts: Options) -> list[Check]:
    table = series.inversion_table(opts.perm_cap)

    def histogram_cells():
        for n in range(opts.perm_cap + 1):
            hist = oracle.oracle_inversion_histogram(n, opts.perm_cap)
            row = table.row(n)
            keys = sorted(set(hist) | set(row))
            for i in keys:
                yield ({"n": n, "inversions": i}, hist.get(i, 0), row.get(i, 0))

    big = series.inversion_table(max(opts.perm_cap, 12))
    return [
        _sweep(
            "coefficients_vs_oracle", {"perm_cap": opts.perm_cap}, histogram_cells()
        ),
        _sweep(
            "row_sums",
            {"n_max": big.max_n},
            (
                ({"n": n}, 2**n - n, sum(big.row(n).values()))
                for n in range(1, big.max_n + 1)
            ),
        ),
    ]


def suite_identities(opts: Options) -> list[Check]:
    a_max = max(opts.k_max, 6)
    return [
        _sweep(
            "ballot_catalan_alternating_sum",
            {"a_max": a_max},
            (
                (
                    {"a": a, "b": b},
                    1,
                    int(counting.ballot_catalan_identity_holds(a, b)),
                )
                for a in range(a_max + 1)
                for b in range(a + 1)
            ),
        ),
        _sweep(
            "concluding_identities",
            {"k_max": opts.k_max},
            (
                (
                    {"identity": c.identity, "k": c.k, "m": c.m},
                    c.expected,
                    c.actual,
                )
                for c in counting.verify_concluding_identities(opts.k_max)
            ),
        ),
    ]


SUITES: dict[str, Callable[[Options], list[Check]]] = {
    "counting": suite_counting,
    "parity": suite_parity,
    "classes": suite_classes,
    "paths": suite_paths,
    "series": suite_series,
    "identities": suite_identities,
}


def run_suites(names: Iterable[str] | None = None, opts: Options | None = None) -> list[SuiteResult]:
    """Run the named suites (all of them by default) in declared order."""
    opts = opts or Options()
    selected = list(SUITES) if names is None else list(names)
    for name in selected:
        if name not in SUITES:
            raise DomainError(f"unknown suite {name!r}")
    return [SuiteResult(name, SUITES[name](opts)) for name in selected]
