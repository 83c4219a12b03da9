import random

import pytest

from conftest import all_binary_strings, random_text
from lexparse.alphabet import AlphabetOrdering, all_orderings
from lexparse.fibwords import edited_fib, fibonacci
from lexparse.parse import (
    Copy,
    Explicit,
    LexParse,
    MalformedParseError,
    decode,
    from_dict,
    from_lines,
    lex_parse,
    lex_parse_naive,
    lz77_count,
    phrase_strings,
    to_dict,
    to_lines,
    v_count,
)
from lexparse.suffixes import build_suffix_array

ORD_AB = AlphabetOrdering.from_string("ab")
ORD_BA = AlphabetOrdering.from_string("ba")


def test_worked_example():
    w = "ababbaaba"
    p = lex_parse(w, ORD_AB)
    assert phrase_strings(p, w) == ["aba", "b", "ba", "a", "b", "a"]
    assert p.v == 6
    assert p.phrases == (
        Copy(3, 7),
        Copy(1, 2),
        Copy(2, 8),
        Copy(1, 6),
        Explicit("b"),
        Explicit("a"),
    )
    assert p.starts() == [1, 4, 5, 7, 8, 9]
    assert [ph.is_explicit for ph in p.phrases] == [False] * 4 + [True, True]


def test_fib8_parse():
    F = fibonacci(8)
    p = lex_parse(F, ORD_AB)
    assert p.v == 4
    assert p.lengths() == [8, 11, 1, 1]
    assert phrase_strings(p, F) == [fibonacci(6), F[8:19], "b", "a"]


def test_edited_word_parse_lengths():
    T = edited_fib(12)
    p = lex_parse(T, ORD_AB)
    assert p.v == 10
    assert p.lengths() == [88, 20, 14, 7, 6, 2, 3, 1, 2, 1]


def test_tiny_counts():
    assert v_count("a") == 1
    assert v_count(fibonacci(9), ORD_AB) == 6
    assert lex_parse("a").phrases == (Explicit("a"),)


def test_explicit_count_equals_alphabet_size():
    rng = random.Random(2024)
    for _ in range(80):
        w = random_text(rng, "abcd", 60)
        p = lex_parse(w)
        assert sum(ph.is_explicit for ph in p.phrases) == len(set(w))
        assert p.v >= len(set(w))


def test_copy_phrase_invariants_against_suffix_array():
    rng = random.Random(555)
    for _ in range(40):
        w = random_text(rng, "abc", 80)
        sa = build_suffix_array(w)
        p = lex_parse(w, sa=sa)
        for (start, length), ph in zip(p.spans(), p.phrases):
            if ph.is_explicit:
                # explicit iff the suffix is the smallest one starting with its symbol
                assert sa.lcp_at_rank(sa.rank_of(start)) == 0
                continue
            # content equality with the source
            assert w[start - 1 : start - 1 + length] == w[ph.source - 1 : ph.source - 1 + length]
            # source is the immediate lexicographic predecessor
            assert sa.rank_of(ph.source) == sa.rank_of(start) - 1
            # greedy maximality: length is the full adjacent-rank lcp
            assert length == sa.lcp_at_rank(sa.rank_of(start))


def test_matches_naive_oracle_exhaustive():
    for w in all_binary_strings(1, 12):
        for ordering in (ORD_AB, ORD_BA):
            assert lex_parse(w, ordering) == lex_parse_naive(w, ordering)


def test_matches_naive_oracle_random():
    rng = random.Random(31)
    for _ in range(150):
        w = random_text(rng, "abcd", 50)
        ordering = AlphabetOrdering(tuple(rng.sample(sorted(set(w)), len(set(w)))))
        assert lex_parse(w, ordering) == lex_parse_naive(w, ordering)


def test_prebuilt_sa_must_match():
    sa = build_suffix_array("abab")
    with pytest.raises(ValueError):
        lex_parse("abba", sa=sa)


def test_decode_round_trip_random():
    rng = random.Random(606)
    for _ in range(300):
        w = random_text(rng, "abcd"[: rng.randint(1, 4)], 120)
        symbols = sorted(set(w))
        ordering = AlphabetOrdering(tuple(rng.sample(symbols, len(symbols))))
        p = lex_parse(w, ordering)
        assert decode(p) == w


def test_decode_round_trip_exhaustive():
    for w in all_binary_strings(1, 10):
        assert decode(lex_parse(w, ORD_AB)) == w


def test_decode_round_trip_all_orderings():
    rng = random.Random(909)
    for _ in range(30):
        w = random_text(rng, "abcd"[: rng.randint(2, 4)], 120)
        for ordering in all_orderings(set(w)):
            assert decode(lex_parse(w, ordering)) == w


def test_decode_single_explicit():
    p = LexParse((Explicit("a"),), 1, AlphabetOrdering.from_string("a"))
    assert decode(p) == "a"


def test_decode_rejects_bad_lengths():
    p = LexParse((Explicit("a"), Explicit("b")), 3, ORD_AB)
    with pytest.raises(MalformedParseError):
        decode(p)


def test_decode_rejects_bad_source():
    p = LexParse((Explicit("a"), Copy(2, 4)), 3, ORD_AB)  # source run [4..5] outside [1..3]
    with pytest.raises(MalformedParseError):
        decode(p)
    p = LexParse((Copy(2, 0), Explicit("a")), 3, ORD_AB)
    with pytest.raises(MalformedParseError):
        decode(p)


def test_decode_rejects_cycles():
    # positions 1..2 reference 2..3 and positions 3..4 reference 1..2
    p = LexParse((Copy(2, 2), Copy(2, 1)), 4, ORD_AB)
    with pytest.raises(MalformedParseError):
        decode(p)


def test_line_serialization_round_trip():
    w = edited_fib(10)
    p = lex_parse(w, ORD_AB)
    text = to_lines(p)
    assert text.startswith("LEXPARSE 55 ab\n")
    q = from_lines(text)
    assert q == p
    assert decode(q) == w


def test_line_serialization_escapes():
    w = "a\nb\na"
    ordering = AlphabetOrdering.from_string("\nab")
    p = lex_parse(w, ordering)
    restored = from_lines(to_lines(p))
    assert restored == p
    assert decode(restored) == w


def test_line_serialization_rejects_junk():
    for junk in ("", "NOPE 3 ab\nE a", "LEXPARSE x ab\nE a", "LEXPARSE 2 ab\nQ 1 2"):
        with pytest.raises(MalformedParseError):
            from_lines(junk)


def test_dict_serialization_round_trip():
    w = fibonacci(10)
    for ordering in (ORD_AB, ORD_BA):
        p = lex_parse(w, ordering)
        obj = to_dict(p)
        assert obj["v"] == p.v
        assert obj["ordering"] == ordering.spec
        q = from_dict(obj)
        assert q == p
        assert decode(q) == w


def test_dict_serialization_rejects_junk():
    with pytest.raises(MalformedParseError):
        from_dict({"n": 1})
    with pytest.raises(MalformedParseError):
        from_dict({"n": 1, "ordering": "a", "phrases": [["X", 1]]})


def naive_lz77_count(w):
    n = len(w)
    i = 0
    count = 0
    while i < n:
        best = 0
        for j in range(i):
            l = 0
            while i + l < n and w[j + l] == w[i + l]:
                l += 1
            best = max(best, l)
        i += max(1, best)
        count += 1
    return count


def test_lz77_examples():
    assert lz77_count("aaaa") == 2  # a | aaa with self-overlap
    assert lz77_count("a") == 1
    assert lz77_count("ab") == 2
    with pytest.raises(ValueError):
        lz77_count("")


def test_lz77_fibonacci_counts():
    # one factor short of the index under this package's base cases ("b", "a")
    for k in range(2, 17):
        assert lz77_count(fibonacci(k)) == k - 1


def test_lz77_matches_naive():
    for w in all_binary_strings(1, 10):
        assert lz77_count(w) == naive_lz77_count(w)
    rng = random.Random(8)
    for _ in range(200):
        w = random_text(rng, "abc", 40)
        assert lz77_count(w) == naive_lz77_count(w)


def test_empty_text_rejected():
    with pytest.raises(ValueError):
        lex_parse("")
    with pytest.raises(ValueError):
        lex_parse_naive("")
