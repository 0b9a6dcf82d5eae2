from itertools import product

import pytest

from cosetleaders.code import (
    LinearCode, brute_force_coset_table, bundled_codes, covering_radius, format_code, load_code,
    make_code, min_distance, parse_code, random_code, syndrome,
)
from cosetleaders.exceptions import ParseError, RankDeficient, SpecMismatch, TooLarge
from cosetleaders.field import FieldSpec, add, all_words, weight


def test_repetition_code(gf2):
    C = make_code(gf2, [[1, 1, 1]])
    assert (C.n, C.k) == (3, 1)
    assert set(C.codewords) == {(0, 0, 0), (1, 1, 1)}


def test_tetracode_parity_check(gf3):
    C = make_code(gf3, [[1, 0, 1, 1], [0, 1, 1, 2]])
    for g, h in product(C.G, C.H):
        assert sum(gf3.mul(a, b) for a, b in zip(g, h)) % 3 == 0
    assert len(C.H) == C.n - C.k


def test_rank_deficient(gf2):
    with pytest.raises(RankDeficient):
        make_code(gf2, [[1, 1], [1, 1]])


def test_syndromes(codes, gf2):
    rep = codes["repetition3"]
    assert syndrome(rep, (1, 0, 0)) == syndrome(rep, (0, 1, 1))
    with pytest.raises(SpecMismatch):
        syndrome(rep, (1, 0))
    for code in codes.values():
        F = code.field
        zero_s = (0,) * (code.n - code.k)
        for c in code.codewords:
            assert syndrome(code, c) == zero_s
        for y in list(code.words())[:50]:
            for c in code.codewords[:5]:
                assert syndrome(code, add(F, y, c)) == syndrome(code, y)


def test_encode_spans_codewords(codes):
    for code in codes.values():
        msgs = product(range(code.q), repeat=code.k)
        assert {code.encode(m) for m in msgs} == set(code.codewords)


@pytest.mark.parametrize("name,d,t", [("repetition3", 3, 1), ("tetracode", 3, 1), ("hamming7", 3, 1),
                                      ("parity4", 2, 0), ("random_gf4", 4, 1), ("random_gf5", 3, 1)])
def test_min_distance(codes, name, d, t):
    assert min_distance(codes[name]) == d
    assert codes[name].t == t


@pytest.mark.parametrize("name,rho", [("repetition3", 1), ("tetracode", 1), ("hamming7", 1),
                                      ("parity4", 1), ("random_gf4", 3), ("random_gf5", 2)])
def test_covering_radius(codes, oracles, name, rho):
    assert oracles[name].covering_radius == rho
    assert covering_radius(codes[name]) == rho


def test_repetition_table(oracles):
    T = oracles["repetition3"]
    assert len(T) == 4
    assert {rec.canonical for rec in T} == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert all(len(rec.leaders) == 1 and rec.weight <= 1 for rec in T)


def test_tetracode_table(oracles):
    T = oracles["tetracode"]
    assert len(T) == 9
    assert all(len(rec.leaders) == 1 and rec.weight <= 1 for rec in T)
    assert len(T.leaders) == 9


def test_unique_leader_below_t(codes, oracles):
    for name, T in oracles.items():
        for rec in T:
            if rec.weight <= codes[name].t:
                assert len(rec.leaders) == 1


def test_oracle_matches_direct_minimum(codes, oracles):
    # recompute each coset's leaders from scratch, without any ordering
    for name in ("tetracode", "hamming7", "parity4"):
        code, T = codes[name], oracles[name]
        cosets = {}
        for y in code.words():
            cosets.setdefault(code.syndrome(y), []).append(y)
        for s, ys in cosets.items():
            w = min(map(weight, ys))
            rec = T.get(ys[0])
            assert rec.weight == w
            assert set(rec.leaders) == {y for y in ys if weight(y) == w}


def test_caps(gf2):
    C = LinearCode(gf2, [[1] * 10], cap=2**8)
    with pytest.raises(TooLarge) as exc:
        list(C.words())
    assert exc.value.exit_code == 3
    with pytest.raises(TooLarge):
        LinearCode(gf2, [[1] * 10], table_cap=2**8).check_table_size()


def test_bundled_corpus():
    assert bundled_codes() == ["hamming7", "parity4", "random_gf4", "random_gf5", "repetition3", "tetracode"]


def test_random_codes_reproduce_bundled(codes):
    gf4 = FieldSpec(2, 2)
    assert random_code(gf4, 5, 2, seed=2024).G == codes["random_gf4"].G
    assert random_code(FieldSpec(5), 4, 2, seed=2024).G == codes["random_gf5"].G


def test_format_round_trip(codes):
    for code in codes.values():
        again = parse_code(format_code(code, comment="round trip"))
        assert again.G == code.G and again.field.f == code.field.f


@pytest.mark.parametrize("text,line,column", [
    ("2 1 3 1\n1 1 x\n", 2, 5),
    ("2 1 3 1\n1 1\n", 2, 3),
    ("2 1 3\n", 1, 5),
    ("2 1 3 1\n1 1 2\n", 2, 5),
    ("2 2 2 1\n1 0 1\n1 1\n", 2, 1),
    ("2 1 3 2  # two rows promised\n1 1 1\n", 3, None),
])
def test_parse_errors_have_location(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_code(text)
    assert exc.value.line == line
    if column is not None:
        assert exc.value.column == column
    assert exc.value.exit_code == 2


def test_load_by_path(tmp_path, codes):
    path = tmp_path / "mine.code"
    path.write_text(format_code(codes["tetracode"]))
    assert load_code(path).G == codes["tetracode"].G
    with pytest.raises(FileNotFoundError):
        load_code(tmp_path / "absent.code")


def test_brute_force_sorted_by_order(codes):
    for code in codes.values():
        T = brute_force_coset_table(code)
        for rec in T:
            keys = [T.order.word_key(code.field)(v) for v in rec.leaders]
            assert keys == sorted(keys)


def test_all_words_count(gf4):
    assert len(list(all_words(gf4, 3))) == 64
