import pytest

from cosetleaders.code import make_code
from cosetleaders.exceptions import NotReducible
from cosetleaders.field import all_words, weight, zero
from cosetleaders.ideal import build_ideal
from cosetleaders.leaders import (
    Geometry, boundary, boundary_x, decode_gradient, descent_step, in_voronoi_zero, is_test_set,
    leader_codewords, leader_codewords_by_definition, voronoi_contains, voronoi_region, zero_neighbours,
)
from cosetleaders.order import DEGLEX, DEGREVLEX, LEX

from conftest import BUNDLED

REP_D0 = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)}


@pytest.fixture(scope="module")
def L(registries):
    return {name: leader_codewords(reg) for name, reg in registries.items()}


def test_repetition_leaders(L):
    assert L["repetition3"].words == {(1, 1, 1)}


def test_tetracode_leaders(codes, L):
    assert L["tetracode"].words == set(codes["tetracode"].nonzero_codewords)
    assert L["tetracode"].max_weight == 3


def test_hamming_leaders(codes, L):
    heavy3 = {c for c in codes["hamming7"].codewords if weight(c) == 3}
    assert len(heavy3) == 7
    assert L["hamming7"].words == heavy3


@pytest.mark.parametrize("name,size", [("parity4", 6), ("random_gf4", 15), ("random_gf5", 24)])
def test_leader_counts(L, name, size):
    assert len(L[name]) == size


@pytest.mark.parametrize("name", BUNDLED)
@pytest.mark.parametrize("order", [LEX, DEGLEX, DEGREVLEX], ids=lambda o: o.tie_break)
def test_recipe_equals_definition(codes, name, order):
    reg = build_ideal(codes[name], order)
    assert leader_codewords(reg).words == leader_codewords_by_definition(codes[name], reg.table)


@pytest.mark.parametrize("name", BUNDLED)
def test_leaders_are_test_set_and_bounded(codes, oracles, L, name):
    assert is_test_set(codes[name], L[name].words) is True
    assert L[name].max_weight <= 2 * oracles[name].covering_radius + 1
    assert all(codes[name].is_codeword(c) and any(c) for c in L[name].words)


def test_empty_test_set(codes):
    y = is_test_set(codes["repetition3"], [])
    assert y is not True and weight(y) >= 2


def test_audit_provenance(codes, registries):
    for name in BUNDLED:
        reg = registries[name]
        F = reg.code.field
        Ls = leader_codewords(reg, audit=True)
        assert set(Ls.provenance) == Ls.words
        for c, triples in Ls.provenance.items():
            for v1, (i, j), v2 in triples:
                u = list(v1)
                u[i - 1] = F.add(u[i - 1], F.p ** (j - 1))
                assert tuple(F.sub(a, b) for a, b in zip(u, v2)) == c
                assert reg.table.is_leader(v2)


def test_descent_step(gf2):
    assert descent_step(gf2, (1, 1, 0), [(1, 1, 1)]) == (1, 1, 1)
    assert descent_step(gf2, (0, 0, 0), [(1, 1, 1)]) is None


def test_decode_examples(codes, L, oracles):
    rep = codes["repetition3"]
    res = decode_gradient(rep.field, (1, 1, 0), L["repetition3"].words)
    assert (res.error, res.codeword, res.steps) == ((0, 0, 1), (1, 1, 1), 1)
    tet = codes["tetracode"]
    res = decode_gradient(tet.field, (1, 0, 0, 0), L["tetracode"].words, table=oracles["tetracode"])
    assert (res.error, res.codeword, res.steps) == ((1, 0, 0, 0), (0, 0, 0, 0), 0)


def test_decode_not_reducible(codes, oracles):
    rep = codes["repetition3"]
    with pytest.raises(NotReducible) as exc:
        decode_gradient(rep.field, (1, 1, 0), [], table=oracles["repetition3"])
    assert exc.value.exit_code == 4


@pytest.mark.parametrize("name", BUNDLED)
def test_decoding_soundness(codes, oracles, L, name):
    code, T = codes[name], oracles[name]
    for y in code.words():
        res = decode_gradient(code.field, y, L[name].words, table=T)
        assert weight(res.error) == T.coset_weight(y)
        assert code.is_codeword(res.codeword)


def test_voronoi_repetition(codes):
    rep = codes["repetition3"]
    assert voronoi_contains(rep, (1, 1, 1), (1, 1, 0))
    assert not voronoi_contains(rep, (0, 0, 0), (1, 1, 0))
    assert voronoi_region(rep, (0, 0, 0)) == REP_D0


def test_voronoi_overlap(gf2):
    C = make_code(gf2, [[1, 1]])
    assert voronoi_region(C, (0, 0)) & voronoi_region(C, (1, 1)) == {(1, 0), (0, 1)}


@pytest.mark.parametrize("name", BUNDLED)
def test_voronoi_zero_is_leaders(codes, oracles, name):
    code = codes[name]
    d0 = voronoi_region(code, zero(code.n))
    assert d0 == oracles[name].leaders
    assert all(in_voronoi_zero(code, y) == in_voronoi_zero(code, y, oracles[name]) for y in code.words())


def test_boundary_examples(codes, gf2):
    rep = codes["repetition3"]
    everything = set(all_words(gf2, 3))
    # nothing outside the whole space, so nothing at distance exactly one
    assert boundary_x(rep, everything) == set()
    assert boundary_x(rep, []) == set()
    # 111 is two steps from every word of D(0)
    assert boundary_x(rep, REP_D0) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert boundary(rep, REP_D0) == REP_D0 - {(0, 0, 0)} | {(1, 1, 0), (1, 0, 1), (0, 1, 1)}


def test_zero_neighbours(codes, L):
    assert zero_neighbours(codes["repetition3"]) == {(1, 1, 1)}
    assert L["tetracode"].words <= zero_neighbours(codes["tetracode"])


@pytest.mark.parametrize("name", BUNDLED)
def test_properties_items_3_and_4(codes, L, name):
    code = codes[name]
    g = Geometry(code)
    for w in L[name].words:
        assert g.touches_weakly(w)
    for w in code.nonzero_codewords:
        if g.touches_strongly(w):
            assert w in L[name]
    assert L[name].words <= g.zero_neighbours()
