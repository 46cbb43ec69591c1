import pytest

from conftest import S, all_strings
from zwalk.core import Alphabet, LabeledString, naive_radii
from zwalk.gen import SplitMix64, adversarial, random_string
from zwalk.oracle import (
    Strategy,
    chain_step_ok,
    check_confluence,
    frontier_naive,
    frontier_table,
    is_stable_naive,
    normal_form_naive,
    originator_naive,
)

FIG3 = "xabbcddeeddcbbaabbcddcbbcy"

ALL_STRATEGIES = [
    Strategy.leftmost(),
    Strategy.shortest_then_leftmost(),
    Strategy.random(1),
    Strategy.random(2),
]


class TestNormalForm:
    def test_paper_toy_example(self):
        assert normal_form_naive(S("cbaaaabccbaabba")).to_text() == "cba"

    def test_empty(self):
        assert normal_form_naive(S("")).to_text() == ""

    def test_figure_one_walk(self):
        w = S("abcaacbbbaabccbbca")
        got = normal_form_naive(w, Strategy.leftmost())
        assert got.to_text() == "abca"
        # cross-check with an unrelated order before trusting the vector
        assert normal_form_naive(w, Strategy.random(99)) == got

    def test_strategies_are_deterministic(self):
        w = S("abaabbbaabaababba")
        for st in ALL_STRATEGIES:
            assert normal_form_naive(w, st) == normal_form_naive(w, st)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            normal_form_naive(S("aaa"), Strategy("weird"))


class TestConfluence:
    def test_paper_example_two_orders(self):
        assert check_confluence(S("cbaaaabccbaabba"), [Strategy.leftmost(), Strategy.random(7)])

    def test_already_irreducible(self):
        assert check_confluence(S("abc"), ALL_STRATEGIES)

    def test_needs_two_strategies(self):
        with pytest.raises(ValueError):
            check_confluence(S("aaa"), [Strategy.leftmost()])

    def test_exhaustive_small(self):
        # uniqueness of the irreducible form, definition-level, two alphabets
        for w in all_strings("ab", 0, 10):
            assert check_confluence(w, ALL_STRATEGIES), w
        for w in all_strings("abc", 0, 7):
            assert check_confluence(w, ALL_STRATEGIES), w

    def test_random_strings(self):
        rng = SplitMix64(5)
        for _ in range(300):
            w = random_string(rng.next() % 65, 1 + rng.next() % 4, rng.next())
            assert check_confluence(w, ALL_STRATEGIES)


def _frontier_by_enumeration(radii, c):
    # exponential walk over every palindrome chain from c; independent of the DP
    n = len(radii)
    best = c + int(radii[c - 1])
    for d in range(c + 1, n + 1):
        if chain_step_ok(radii, c, d):
            best = max(best, _frontier_by_enumeration(radii, d))
    return best


class TestFrontier:
    def test_fig3_chain(self):
        assert frontier_naive(S(FIG3), 8) == 25

    def test_isolated_position(self):
        # no palindrome and no successor: the chain (c) alone
        w = S("abcd")
        for c in range(1, 5):
            assert frontier_naive(w, c) == c

    def test_dp_matches_enumeration(self):
        for text in [FIG3, "ababccbaabcc", "aabbaabb", "abaaba"]:
            w = S(text)
            radii = naive_radii(w)
            table = frontier_table(radii)
            for c in range(1, len(w) + 1):
                assert table[c - 1] == _frontier_by_enumeration(radii, c)

    def test_derived_example(self):
        w = S("ababccbaabcc")
        assert frontier_naive(w, 5) == _frontier_by_enumeration(naive_radii(w), 5) == 12

    def test_rejects_reducible_prefix(self):
        with pytest.raises(ValueError):
            frontier_naive(S("aaab"), 1)

    def test_position_out_of_range(self):
        with pytest.raises(ValueError):
            frontier_naive(S("abc"), 4)


class TestOriginator:
    def test_fig3_basin(self):
        w = S(FIG3)
        for d in range(8, 26):
            assert originator_naive(w, d) == 8

    def test_first_position(self):
        assert originator_naive(S("abcab"), 1) == 1

    def test_matches_definition(self):
        w = S("ababccbaabcc")
        radii = naive_radii(w)
        for d in range(1, len(w) + 1):
            got = originator_naive(w, d)
            expected = min(
                c for c in range(1, d + 1) if _frontier_by_enumeration(radii, c) >= d
            )
            assert got == expected


class TestStability:
    def test_fig3_stable(self):
        assert is_stable_naive(S(FIG3), 8)  # frontier 25 < 26

    def test_last_position_never_stable(self):
        w = S("abcd")
        assert not is_stable_naive(w, 4)

    def test_adversarial_suffix_palindrome_centers_unstable(self):
        # the nested suffix palindromes of the adversarial family never settle
        m = 3
        _, base = adversarial(m)
        ab = base.alphabet
        a = ab.id_of("a")
        w1 = LabeledString(list(base.ids) + [a], ab)  # base + "a"
        radii1 = naive_radii(w1)
        centers = [
            c
            for c in range(1, len(w1))
            if radii1[c - 1] >= 1 and c + radii1[c - 1] == len(w1)
        ]
        assert len(centers) == m
        w2 = LabeledString(list(base.ids) + [a, a], ab)  # base + "aa"
        for c in centers:
            assert not is_stable_naive(w2, c)


class TestRadiusRelation:
    def test_mirrored_radius_rule(self):
        # rho(c) = r + min(rho(c+r), rho(c-r)) when the two differ,
        # and rho(c) >= r + rho(c+r) otherwise
        rng = SplitMix64(11)
        for _ in range(120):
            w = random_string(4 + rng.next() % 60, 1 + rng.next() % 3, rng.next())
            radii = naive_radii(w).tolist()
            for c in range(1, len(w) + 1):
                for r in range(1, radii[c - 1] + 1):
                    lo, hi = c - r, c + r
                    if lo < 1 or hi > len(w):
                        continue
                    if radii[hi - 1] != radii[lo - 1]:
                        assert radii[c - 1] == r + min(radii[hi - 1], radii[lo - 1])
                    else:
                        assert radii[c - 1] >= r + radii[hi - 1]


class TestMonotonicity:
    def test_sampled(self):
        # frontier of a covering position dominates: c < d <= F(c) implies F(c) >= F(d)
        for text in [FIG3, "ababccbaabcc", "caabbaacbbcaabbaa"]:
            w = S(text)
            table = frontier_table(naive_radii(w))
            for c in range(1, len(w) + 1):
                for d in range(c + 1, table[c - 1] + 1):
                    assert table[c - 1] >= table[d - 1]


class TestStabilityPreservation:
    def test_randomized_trials(self):
        # stable segments survive any future extension verbatim
        rng = SplitMix64(23)
        done = 0
        while done < 120:
            raw = random_string(8 + rng.next() % 40, 1 + rng.next() % 3, rng.next())
            w = normal_form_naive(raw)
            if len(w) < 2:
                continue
            table = frontier_table(naive_radii(w))
            stable = [c for c in range(1, len(w) + 1) if table[c - 1] < len(w)]
            if not stable:
                continue
            c = stable[rng.next() % len(stable)]
            f = table[c - 1]
            xlen = 1 + rng.next() % 8
            x = [int(w.ids[rng.next() % len(w)]) for _ in range(xlen)]
            # the lemma is conditional: discard trials where a prefix of x
            # already erases the segment
            escaped = False
            for k in range(1, xlen + 1):
                wy = LabeledString(list(w.ids) + x[:k], w.alphabet)
                if len(normal_form_naive(wy)) < c:
                    escaped = True
                    break
            if escaped:
                continue
            wx = LabeledString(list(w.ids) + x, w.alphabet)
            nf = normal_form_naive(wx)
            assert len(nf) > f
            assert nf.ids[c - 1 : f + 1].tolist() == w.ids[c - 1 : f + 1].tolist()
            done += 1
