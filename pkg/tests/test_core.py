import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import S, all_strings
from zwalk.core import (
    Alphabet,
    LabeledString,
    ZOccurrence,
    contract,
    find_z_shapes,
    from_text,
    naive_radii,
    naive_radius,
)

texts = st.text(alphabet="abcd", max_size=40)


class TestAlphabet:
    def test_ids_start_after_sentinels(self):
        ab = Alphabet()
        assert ab.intern("x") == 2
        assert ab.intern("y") == 3
        assert ab.intern("x") == 2  # idempotent
        assert ab.name_of(3) == "y"
        assert ab.names() == {2: "x", 3: "y"}
        assert len(ab) == 2
        assert "x" in ab and "z" not in ab

    def test_sentinel_ids_have_no_name(self):
        with pytest.raises(ValueError):
            Alphabet().name_of(0)

    def test_order_of_first_appearance(self):
        s = from_text("cbaaab")
        assert s.alphabet.names() == {2: "c", 3: "b", 4: "a"}


class TestLabeledString:
    def test_sequence_behaviour(self):
        s = S("abca")
        assert len(s) == 4
        assert list(s) == [2, 3, 4, 2]
        assert s[0] == 2
        assert s[1:3].to_text() == "bc"
        assert (s + s).to_text() == "abcaabca"
        assert s.reverse().to_text() == "acba"

    def test_equality_and_hash(self):
        ab = Alphabet()
        assert S("abc", ab) == S("abc", ab)
        assert S("abc", ab) != S("abd", ab)
        assert hash(S("abc", ab)) == hash(S("abc", ab))

    def test_multichar_names_need_delimiter(self):
        s = from_text("foo bar", delimiter=" ")
        assert len(s) == 2
        assert s.to_text(" ") == "foo bar"
        with pytest.raises(ValueError):
            s.to_text()


class TestNaiveRadius:
    def test_paper_values(self):
        w = S("ababccbaabcc")
        assert naive_radius(w, 5) == 3
        assert naive_radius(w, 8) == 4

    def test_no_adjacent_equal_letters(self):
        assert naive_radius(S("abc"), 2) == 0

    def test_uniform_string_clipped_by_boundary(self):
        assert naive_radius(S("aaaa"), 2) == 2

    @pytest.mark.parametrize("c", [0, -1, 4])
    def test_out_of_range(self, c):
        with pytest.raises(ValueError):
            naive_radius(S("abc"), c)

    @given(texts)
    def test_radii_array_matches_per_position(self, text):
        w = from_text(text)
        radii = naive_radii(w)
        assert [naive_radius(w, c) for c in range(1, len(w) + 1)] == radii.tolist()

    @given(texts.filter(lambda t: len(t) >= 2))
    def test_reversal_symmetry(self, text):
        w = from_text(text)
        r = w.reverse()
        for c in range(1, len(w)):
            assert naive_radius(w, c) == naive_radius(r, len(w) - c)

    def test_radii_examples(self):
        assert naive_radii(S("abc")).tolist() == [0, 0, 0]
        assert naive_radii(S("")).tolist() == []


def _has_triple_substring(w: LabeledString) -> bool:
    # independent scan: any occurrence of x + reversed(x) + x with x nonempty
    ids = w.ids.tolist()
    n = len(ids)
    for i in range(n):
        for xlen in range(1, (n - i) // 3 + 1):
            x = ids[i : i + xlen]
            if ids[i + xlen : i + 2 * xlen] == x[::-1] and ids[i + 2 * xlen : i + 3 * xlen] == x:
                return True
    return False


class TestFindZShapes:
    def test_paper_example(self):
        assert ZOccurrence(5, 8) in find_z_shapes(S("ababccbaabcc"))

    def test_irreducible(self):
        assert find_z_shapes(S("abc")) == []
        assert find_z_shapes(S("")) == []

    def test_aaa(self):
        assert find_z_shapes(S("aaa")) == [ZOccurrence(1, 2)]

    def test_lexicographic_order(self):
        shapes = find_z_shapes(S("aaaabbbb"))
        assert shapes == sorted(shapes)

    def test_occurrence_invariants(self):
        w = S("cbaaaabccbaabba")
        for occ in find_z_shapes(w):
            s = occ.p2 - occ.p1
            assert s > 0
            assert naive_radius(w, occ.p1) >= s
            assert naive_radius(w, occ.p2) >= s
            assert occ.start >= 1 and occ.end <= len(w)

    def test_exhaustive_vs_substring_scan(self):
        # definition-level agreement on every binary string up to length 12
        for w in all_strings("ab", 0, 12):
            assert bool(find_z_shapes(w)) == _has_triple_substring(w)


class TestContract:
    def test_paper_first_step(self):
        w = S("cbaaaabccbaabba")
        assert contract(w, ZOccurrence(3, 4)).to_text() == "cbaabccbaabba"

    def test_shortest_z(self):
        assert contract(S("aaa"), ZOccurrence(1, 2)).to_text() == "a"

    def test_full_z_shape(self):
        assert contract(S("abccbaabc"), ZOccurrence(3, 6)).to_text() == "abc"

    def test_invalid_occurrence(self):
        with pytest.raises(ValueError):
            contract(S("abc"), ZOccurrence(1, 2))
        with pytest.raises(ValueError):
            contract(S("aaa"), ZOccurrence(2, 1))

    @given(texts)
    def test_parity_preserved(self, text):
        w = from_text(text)
        for occ in find_z_shapes(w)[:4]:
            assert len(contract(w, occ)) % 2 == len(w) % 2

    def test_length_drops_by_twice_the_arm(self):
        w = S("ababccbaabcc")
        occ = ZOccurrence(5, 8)
        assert len(w) - len(contract(w, occ)) == 2 * occ.arm


def test_sentinel_ids_rejected_downstream():
    from zwalk.reducer import reduce

    bad = LabeledString(np.array([0, 2, 3], dtype=np.int32), Alphabet(["a", "b"]))
    with pytest.raises(ValueError):
        reduce(bad)
