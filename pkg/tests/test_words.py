import pytest

from stringalg.errors import (
    Ambiguous,
    EmptyString,
    ForbiddenSubword,
    LimitExceeded,
    NotComposable,
    OnPeak,
    ParseError,
)
from stringalg.words import (
    Band,
    String,
    Word,
    empty_word,
    enumerate_bands,
    enumerate_strings,
    e_of,
    inv_letter,
    is_band,
    make_string,
    mirror_string,
    modify,
    modify_candidates,
    parse_word,
    removal_candidates,
    s_of,
    top_socle_decomposition,
    word_flaw,
)


class TestParsing:
    def test_s0011_word(self):
        s = make_string("alpha- gamma eta-")
        assert len(s) == 3

    def test_square_is_forbidden(self):
        with pytest.raises(ForbiddenSubword):
            make_string("alpha alpha")

    def test_empty_at_vertex_zero(self):
        s = make_string("1_0")
        assert s.letters == () and s.vertex == 0

    def test_endpoint_mismatch(self):
        with pytest.raises(NotComposable):
            make_string("beta eta")

    def test_garbage(self):
        with pytest.raises(ParseError):
            parse_word("delta")

    def test_reduced_rule(self):
        with pytest.raises(ForbiddenSubword):
            make_string("alpha alpha-")


class TestBands:
    def test_known_band(self):
        assert is_band(parse_word("eta- beta alpha- gamma"))

    def test_eta_inverse_is_not_a_band(self):
        # the square of its inverse contains the loop relation
        assert not is_band(parse_word("eta-"))

    def test_three_letter_band(self):
        assert is_band(parse_word("alpha- gamma beta"))

    def test_power_is_not_primitive(self):
        w = parse_word("alpha beta- gamma- alpha beta- gamma-")
        assert not is_band(w)

    def test_noncyclic_word_rejected(self):
        assert not is_band(parse_word("alpha- gamma"))


class TestEnumeration:
    def test_empty_strings(self):
        assert [s.text() for s in enumerate_strings(0)] == ["1_0", "1_1"]

    def test_single_letters(self):
        # single letters are identified with their inverses
        assert [s.text() for s in enumerate_strings(1)] == [
            "1_0", "1_1", "alpha", "beta", "gamma", "eta",
        ]

    def test_guard(self):
        with pytest.raises(LimitExceeded):
            enumerate_strings(25)

    def test_oracle_equivalence(self):
        # independent generate-and-filter over all composable words
        out = {String((), 0), String((), 1)}
        frontier = [(l,) for l in range(8)]
        for n in range(1, 9):
            for w in frontier:
                if word_flaw(w) is None:
                    out.add(String.from_word(Word(w)))
            nxt = []
            if n < 8:
                for w in frontier:
                    for cand in range(8):
                        if e_of(cand) == s_of(w[-1]):
                            nxt.append(w + (cand,))
            frontier = nxt
        key = lambda s: (len(s.letters), s.vertex or 0, s.letters)
        assert sorted(out, key=key) == enumerate_strings(8)

    def test_band_oracle(self):
        # same style oracle for bands: filter all composable words
        found = set()
        frontier = [(l,) for l in range(8)]
        for n in range(1, 9):
            for w in frontier:
                word = Word(w)
                if is_band(word):
                    found.add(Band.from_word(word))
            nxt = []
            if n < 8:
                for w in frontier:
                    for cand in range(8):
                        if e_of(cand) == s_of(w[-1]):
                            nxt.append(w + (cand,))
            frontier = nxt
        assert sorted(found, key=lambda b: (len(b.letters), b.letters)) == enumerate_bands(8)
        for b in enumerate_bands(8):
            assert is_band(b.word)

    def test_canonicalization_idempotent(self):
        for s in enumerate_strings(6):
            assert String.from_word(s.word) == s
        for b in enumerate_bands(8):
            assert Band.from_word(b.word) == b
            assert Band.from_word(b.rotation(1)) == b

    def test_class_accepts_inverse(self):
        for s in enumerate_strings(8):
            if s.letters:
                assert String.from_word(s.word.inverse()) == s


class TestHooks:
    def test_hook_right_of_alpha_inverse(self):
        assert modify(parse_word("alpha-"), "hook", "right").text() == "alpha- gamma eta-"

    def test_hook_right_of_eta_is_on_peak(self):
        with pytest.raises(OnPeak):
            modify(parse_word("eta"), "hook", "right")

    def test_hook_left_of_eta_exists(self):
        # eta does not end on a peak, so the left hook is defined; the
        # result is the depth-2 tube module over the boundary
        assert modify(parse_word("eta"), "hook", "left").text() == "beta alpha beta- eta"

    def test_empty_string_is_ambiguous(self):
        with pytest.raises(Ambiguous) as info:
            modify(empty_word(0), "hook", "right")
        texts = sorted(w.text() for w in info.value.candidates)
        assert texts == ["alpha beta- gamma-", "gamma eta-"]

    def test_cohook_round_trip(self):
        for text in ("alpha-", "gamma beta", "alpha beta- gamma-"):
            w = parse_word(text)
            try:
                c = modify(w, "cohook", "right")
            except Exception:
                continue
            back = removal_candidates(c, "cohook", "right")
            assert [b.letters for b in back] == [w.letters]

    def test_hook_then_removal(self):
        a1 = parse_word("alpha beta- gamma-")
        a2 = modify(a1, "hook", "right")
        assert a2.text() == "alpha beta- gamma- alpha beta- gamma-"
        assert [b.letters for b in removal_candidates(a2, "hook", "right")] == [a1.letters]

    def test_unique_for_nonempty(self):
        for s in enumerate_strings(6):
            if not s.letters:
                continue
            for op in ("hook", "cohook"):
                for side in ("left", "right"):
                    assert len(modify_candidates(s.word, op, side)) <= 1


class TestMirror:
    def test_three_letter_example(self):
        m = mirror_string(String.from_word(parse_word("alpha beta- gamma-")))
        assert m == String.from_word(parse_word("alpha- gamma beta"))

    def test_involution_and_length(self):
        for s in enumerate_strings(8):
            if not s.letters:
                continue
            m = mirror_string(s)
            assert len(m) == len(s)
            assert mirror_string(m) == s

    def test_fixes_eta(self):
        assert mirror_string(make_string("eta")) == make_string("eta")

    def test_empty_raises(self):
        with pytest.raises(EmptyString):
            mirror_string(String((), 0))


class TestTopSocle:
    def test_four_piece_example(self):
        b = Band.from_word(parse_word("eta- beta alpha- gamma"))
        pieces = sorted(p.text() for p in top_socle_decomposition(b))
        assert pieces == sorted(["alpha-", "beta-", "gamma-", "eta-"])

    def test_reconstruction_and_piece_set(self):
        for b in enumerate_bands(12):
            pieces = top_socle_decomposition(b)
            assert len(pieces) % 2 == 0 and len(pieces) >= 2
            concat = []
            for i, p in enumerate(pieces):
                concat.extend(p.letters if i % 2 == 0 else p.inverse().letters)
            n = len(b.letters)
            doubled = b.letters * 2
            rotations = {doubled[i : i + n] for i in range(n)}
            inv = tuple(inv_letter(x) for x in reversed(b.letters))
            doubled_inv = inv * 2
            rotations |= {doubled_inv[i : i + n] for i in range(n)}
            assert tuple(concat) in rotations

    def test_piece_count_equals_run_count(self):
        b = Band.from_word(parse_word("eta- beta alpha- gamma"))
        assert len(top_socle_decomposition(b)) == 4


def test_cohook_of_deep_string_raises():
    from stringalg.errors import InDeep

    # beta- gamma- starts in a deep (its trailing inverse run is maximal)
    with pytest.raises(InDeep):
        modify(parse_word("beta- gamma-"), "cohook", "right")
