import pytest
from hypothesis import given, strategies as st

from grassperm import core, counting, parity, paths, patterns
from grassperm.errors import DomainError


def all_extrema_odd(p):
    return all(h % 2 == 1 for h in paths.peaks(p) + paths.valleys(p))


@st.composite
def avoiding_words(draw, k_max=12):
    """A parameter k and a word avoiding every 0^j 1^(k-j).

    Built from a run-length sequence (a_0, ..., a_j) drawn against the
    prefix budgets a_0 + ... + a_i < (k - j) + i, which characterize the
    avoiding words with j zeros.
    """
    k = draw(st.integers(1, k_max))
    j = draw(st.integers(0, k - 1))
    a = []
    total = 0
    for i in range(j + 1):
        budget = (k - j) + i - 1 - total
        a.append(draw(st.integers(0, budget)))
        total += a[-1]
    return k, core.word_from_a_sequence(tuple(a))


class TestStatistics:
    @pytest.mark.parametrize(
        "p,pk,vl",
        [
            ("UUDD", [2], []),
            ("UDUD", [1, 1], [0]),
            ("UDUUDUDD", [1, 2, 2], [0, 1]),
        ],
    )
    def test_peaks_and_valleys(self, p, pk, vl):
        assert paths.peaks(p) == pk
        assert paths.valleys(p) == vl

    def test_peak_sum_single_peak_counts_twice(self):
        for n in range(1, 6):
            assert paths.first_last_peak_sum("U" * n + "D" * n) == 2 * n

    def test_peak_sum_sawtooth(self):
        assert paths.first_last_peak_sum("UD" * 5) == 2

    def test_peak_sum_mixed(self):
        assert paths.first_last_peak_sum("UUDDUD") == 3

    def test_peak_sum_rejects_empty(self):
        with pytest.raises(DomainError):
            paths.first_last_peak_sum("")

    def test_rejects_invalid_paths(self):
        with pytest.raises(DomainError):
            paths.check_dyck("UDD")
        with pytest.raises(DomainError):
            paths.check_dyck("DU")
        with pytest.raises(DomainError):
            paths.check_steps("UX")


class TestWordDyckBijection:
    def test_example(self):
        p = paths.word_to_dyck(3, "1100")
        assert paths.semilength(p) == 4
        assert paths.first_last_peak_sum(p) == 2 * 3 - 4

    def test_empty_word(self):
        for k in range(1, 6):
            p = paths.word_to_dyck(k, "")
            assert p == "U" * k + "D" + "U" + "D" * k
            assert paths.first_last_peak_sum(p) == 2 * k

    def test_round_trip_everywhere(self):
        for k in range(1, 6):
            for m in range(2 * k - 1):
                for w in patterns.enumerate_avoiding_words(k, m):
                    assert paths.dyck_to_word(k, paths.word_to_dyck(k, w)) == w

    def test_image_is_exactly_the_peak_sum_class(self):
        for k in range(1, 6):
            by_sum = {}
            for p in paths.enumerate_dyck(k + 1):
                if paths.peaks(p):
                    by_sum.setdefault(paths.first_last_peak_sum(p), set()).add(p)
            for m in range(2 * k - 1):
                words = patterns.enumerate_avoiding_words(k, m)
                images = {paths.word_to_dyck(k, w) for w in words}
                assert len(images) == len(words)
                assert images == by_sum.get(2 * k - m, set())

    def test_rejects_non_avoiding_word(self):
        with pytest.raises(DomainError):
            paths.word_to_dyck(2, "01")

    def test_rejects_wrong_semilength(self):
        with pytest.raises(DomainError):
            paths.dyck_to_word(3, "UUDD")

    def test_rejects_staircase(self):
        with pytest.raises(DomainError):
            paths.dyck_to_word(3, "UUUUDDDD")


class TestParityOfPaths:
    @pytest.mark.parametrize("p,odd", [("UDUD", True), ("UUDD", False)])
    def test_examples(self, p, odd):
        assert paths.is_odd_dyck(p) is odd

    def test_agreement_with_word_parity_at_max_length(self):
        # at m = 2k - 2 every avoiding word has k - 1 zeros and no trailing
        # ones, so dropping a_0 gives a semilength-(k - 1) Dyck path whose
        # parity matches the word's
        for k in range(2, 7):
            for w in patterns.enumerate_avoiding_words(k, 2 * k - 2):
                a = core.a_sequence(w)
                assert a[0] == 0 and len(a) == k
                p = "".join("U" + "D" * a[i] for i in range(1, k))
                assert paths.is_odd_dyck(p) == core.is_odd_word(w)


class TestToggle:
    def test_figure_pair(self):
        assert paths.toggle_first_even_extremum("UDUUDUDD") == "UUDUDUDD"
        assert paths.toggle_first_even_extremum("UUDUDUDD") == "UDUUDUDD"

    def test_run_sequence_shift(self):
        # the toggle moves one down-step between adjacent runs
        assert paths.dyck_run_sequence("UDUUDUDD") == (1, 0, 1, 2)
        assert paths.dyck_run_sequence("UUDUDUDD") == (0, 1, 1, 2)

    def test_involution_and_parity_flip(self):
        for n in range(1, 7):
            for p in paths.enumerate_dyck(n):
                if all_extrema_odd(p):
                    continue
                q = paths.toggle_first_even_extremum(p)
                assert paths.toggle_first_even_extremum(q) == p
                assert paths.is_odd_dyck(q) != paths.is_odd_dyck(p)

    def test_rejects_all_odd_path(self):
        with pytest.raises(DomainError):
            paths.toggle_first_even_extremum("UD")


class TestHalving:
    def test_smallest(self):
        assert paths.halve_all_odd_path("UD") == ""

    def test_single_tall_peak(self):
        assert paths.halve_all_odd_path("UUUDDD") == "UD"

    def test_counts(self):
        for n in range(1, 10):
            domain = [p for p in paths.enumerate_dyck(n) if all_extrema_odd(p)]
            assert len(domain) == parity.all_odd_extrema_count(n)
            if n % 2 == 1:
                images = {paths.halve_all_odd_path(p) for p in domain}
                assert len(images) == len(domain)
                assert images == set(paths.enumerate_dyck((n - 1) // 2))

    def test_all_odd_paths_are_odd(self):
        for n in range(1, 10):
            for p in paths.enumerate_dyck(n):
                if all_extrema_odd(p):
                    assert paths.is_odd_dyck(p)

    def test_rejects_even_extremum(self):
        with pytest.raises(DomainError):
            paths.halve_all_odd_path("UUDD")


class TestLattice:
    def test_figure_left_path(self):
        lp = paths.word_to_lattice(5, "110011")
        assert lp.steps == "DDUUDD"
        assert lp.floor == -2

    def test_all_ones(self):
        for m in range(4):
            lp = paths.word_to_lattice(m + 1, "1" * m)
            assert lp.steps == "D" * m

    def test_figure_toggle_pair(self):
        lp = paths.word_to_lattice(5, "110011")
        partner = paths.toggle_lattice_path(lp)
        assert partner.steps == "DUDUDD"
        assert paths.lattice_to_word(partner) == "110101"
        assert paths.toggle_lattice_path(partner) == lp

    def test_round_trip_and_parity(self):
        for k in range(1, 6):
            for m in range(2 * k - 1):
                for w in patterns.enumerate_avoiding_words(k, m):
                    lp = paths.word_to_lattice(k, w)
                    assert paths.lattice_to_word(lp) == w
                    assert paths.is_odd_lattice(lp) == core.is_odd_word(w)

    def test_rejects_word_outside_class(self):
        with pytest.raises(DomainError):
            paths.word_to_lattice(2, "11")

    def test_floor_violation_rejected(self):
        with pytest.raises(DomainError):
            paths.LatticePath("DDD", 2)


class TestEnumeration:
    def test_counts_are_catalan(self):
        for n in range(9):
            assert len(paths.enumerate_dyck(n)) == counting.catalan(n)

    def test_sorted_and_unique(self):
        for n in range(7):
            out = paths.enumerate_dyck(n)
            assert out == sorted(out)
            assert len(set(out)) == len(out)

    def test_peak_pair_example(self):
        assert counting.dyck_peak_pair_count(2, 1, 1) == 1

    def test_peak_pair_matches_enumeration(self):
        for n in range(2, 7):
            pairs = [
                (paths.peaks(p)[0], paths.peaks(p)[-1])
                for p in paths.enumerate_dyck(n)
            ]
            for a in range(1, n + 1):
                for b in range(1, 2 * (n - 1) - a + 1):
                    assert pairs.count((a, b)) == counting.dyck_peak_pair_count(
                        n - 1, a, b
                    ), (n, a, b)

    def test_peak_sum_matches_enumeration(self):
        for n in range(1, 8):
            sums = [
                paths.first_last_peak_sum(p)
                for p in paths.enumerate_dyck(n)
                if paths.peaks(p)
            ]
            for s in range(2 * n - 1):
                assert sums.count(s) == counting.dyck_peak_sum_count(n, s), (n, s)

    def test_peak_sum_ties_to_word_count(self):
        for k in range(1, 8):
            for m in range(1, 2 * k - 1):
                assert counting.dyck_peak_sum_count(
                    k + 1, 2 * k - m
                ) == counting.avoiding_word_count(k, m)

    def test_peak_pair_sums_to_peak_sum_count(self):
        for n in range(2, 7):
            for s in range(2, 2 * n - 1):
                total = sum(
                    counting.dyck_peak_pair_count(n, a, s - a)
                    for a in range(1, s)
                )
                assert total == counting.dyck_peak_sum_count(n + 1, s), (n, s)


@given(avoiding_words())
def test_dyck_bijection_on_random_words(kw):
    k, w = kw
    assert patterns.is_avoiding_word(k, w)
    p = paths.word_to_dyck(k, w)
    assert paths.semilength(p) == k + 1
    assert paths.first_last_peak_sum(p) == 2 * k - len(w)
    assert paths.dyck_to_word(k, p) == w


@given(avoiding_words())
def test_lattice_bijection_on_random_words(kw):
    k, w = kw
    lp = paths.word_to_lattice(k, w)
    assert paths.lattice_to_word(lp) == w
    assert paths.is_odd_lattice(lp) == core.is_odd_word(w)


def test_svg_rendering_smoke():
    svg = paths.path_svg("UUDD")
    assert svg.startswith("<svg") and "polyline" in svg
    svg = paths.path_svg("DDUUDD", floor=-2)
    assert "polyline" in svg
