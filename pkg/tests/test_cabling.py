import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidhoms.braid import BraidWord, named, words_equal
from braidhoms.cabling import (
    CableStructure,
    CablingError,
    CrossedVector,
    SemidirectElement,
    beta,
    cable_twist,
    classification_json,
    classify_cabling,
    crossed_vector,
    decompose,
    embed_F,
    exterior_part,
    interior_part,
    interior_writhe,
    iota,
)
from braidhoms.homs import Homomorphism, StandardKind, apply_hom, compose_hom, standard_hom, transvect
from braidhoms.suites import random_word

from conftest import braid_words


def W(n, *letters):
    return BraidWord(n, letters)


def cabling(k, n):
    return standard_hom(StandardKind.of("cabling", k), n)


def crossings_between(n, letters, a, b):
    """Signed crossings between the strands starting at a and b, by tracking positions."""
    pos = {a: a, b: b}
    total = 0
    for x in letters:
        i = abs(x)
        hit = [s for s, p in pos.items() if p in (i, i + 1)]
        if len(hit) == 2:
            total += 1 if x > 0 else -1
        for s in hit:
            pos[s] = i + 1 if pos[s] == i else i
    return total


# -- cable structures -----------------------------------------------------------

def test_cable_structure():
    cs = CableStructure.parse("P: 2 3 2")
    assert cs.count == 3 and cs.total == 7
    assert list(cs.strands_of(2)) == [3, 4, 5]
    assert str(cs) == "P: 2 3 2"
    assert CableStructure.pairs(3).pattern == (2, 2, 2)
    for bad in ("2 2", "P: 2 0"):
        with pytest.raises(ValueError):
            CableStructure.parse(bad)


def test_block_permutation():
    cs = CableStructure.pairs(3)
    assert cs.block_permutation(beta(W(3, 1), cs)) == (2, 1, 3)
    assert cs.block_permutation(W(6, 1, 3)) == (1, 2, 3)
    assert cs.block_permutation(W(6, 2)) is None
    uneven = CableStructure((1, 2))
    assert uneven.block_permutation(W(3, 1, 2)) is None


# -- the embedding ----------------------------------------------------------------

def test_iota_beta_examples():
    cs = CableStructure.pairs(3)
    assert iota(2, W(2, 1), cs).letters == (3,)
    assert beta(W(3, 1), cs).letters == (2, 3, 1, 2)
    assert beta(W(3, -2), cs).letters == (-4, -3, -5, -4)
    with pytest.raises(ValueError):
        beta(W(2, 1), CableStructure((1, 2)))
    with pytest.raises(ValueError):
        iota(1, W(3, 1), cs)


def test_beta_of_triple_cables():
    cs = CableStructure((3, 3))
    b = beta(W(2, 1), cs)
    assert len(b) == 9 and cs.block_permutation(b) == (2, 1)
    assert all(len(interior_part(b, j, cs)) == 0 for j in (1, 2))


def test_embed_and_decompose_round_trip():
    cs = CableStructure.pairs(3)
    e = SemidirectElement(W(3, 1, -2), (W(2, 1, 1), W(2), W(2, -1)))
    w = embed_F(e, cs)
    back = decompose(w, cs)
    assert words_equal(back.exterior, e.exterior)
    assert all(words_equal(a, b) for a, b in zip(back.interiors, e.interiors))
    with pytest.raises(ValueError):
        SemidirectElement(W(3, 1), (W(2),))


def test_multiplication_law_with_a_swap():
    # (iota(f) beta(e)) (iota(f') beta(e')) has interiors f_j f'_{perm_e(j)}
    cs = CableStructure.pairs(3)
    f, e = (W(2, 1), W(2, 1, 1, 1), W(2)), W(3, 1)
    g, d = (W(2, -1, -1), W(2, 1), W(2, 1, 1)), W(3, 2)
    prod = embed_F(SemidirectElement(e, f), cs) * embed_F(SemidirectElement(d, g), cs)
    got = decompose(prod, cs)
    perm = e.permutation()
    assert words_equal(got.exterior, e * d)
    for j in range(3):
        assert words_equal(got.interiors[j], f[j] * g[perm(j + 1) - 1])


exteriors = braid_words(n=4, max_len=8)
interiors = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


@settings(max_examples=40)
@given(exteriors, interiors)
def test_embedding_round_trip(e, twists):
    cs = CableStructure.pairs(4)
    elem = SemidirectElement(e, tuple(W(2, 1) ** t for t in twists))
    back = decompose(embed_F(elem, cs), cs)
    assert words_equal(back.exterior, e)
    assert [x.exponent_sum() for x in back.interiors] == twists


@settings(max_examples=40)
@given(exteriors, exteriors)
def test_beta_is_a_homomorphism(u, v):
    cs = CableStructure.pairs(4)
    assert words_equal(beta(u * v, cs), beta(u, cs) * beta(v, cs))


@settings(max_examples=30)
@given(exteriors, st.integers(1, 4))
def test_beta_commutes_with_moved_interiors(e, j):
    cs = CableStructure.pairs(4)
    f = W(2, 1)
    target = e.permutation()(j)
    assert words_equal(beta(e, cs) * iota(target, f, cs), iota(j, f, cs) * beta(e, cs))


@settings(max_examples=30)
@given(braid_words(n=4, max_len=8), interiors)
def test_exterior_part_is_idempotent(e, twists):
    cs = CableStructure.pairs(4)
    w = embed_F(SemidirectElement(e, tuple(W(2, 1) ** t for t in twists)), cs)
    ext = exterior_part(w, cs)
    assert words_equal(exterior_part(beta(ext, cs), cs), ext)


# -- writhe ------------------------------------------------------------------------

def test_interior_writhe_examples():
    cs = CableStructure.pairs(3)
    assert interior_writhe(W(6, 1, 1, 3), 1, cs) == 2
    assert interior_writhe(W(6, 1, 1, 3), 2, cs) == 1
    assert interior_writhe(beta(W(3, 1, 2), cs), 3, cs) == 0
    with pytest.raises(CablingError):
        interior_writhe(W(6, 2), 1, cs)
    with pytest.raises(CablingError):
        interior_writhe(W(5, 1), 2, CableStructure((2, 3)))


@settings(max_examples=40)
@given(exteriors, interiors, st.integers(1, 4))
def test_writhe_matches_crossing_count(e, twists, j):
    cs = CableStructure.pairs(4)
    w = embed_F(SemidirectElement(e, tuple(W(2, 1) ** t for t in twists)), cs)
    a = 2 * j - 1
    assert interior_writhe(w, j, cs) == crossings_between(8, w.letters, a, a + 1) == twists[j - 1]


# -- crossed vectors ---------------------------------------------------------------

def test_crossed_vector_examples():
    assert crossed_vector(cabling(0, 5), W(5, 1)).entries == (0,) * 5
    assert crossed_vector(cabling(3, 4), W(4, 2)).entries == (0, 3, 0, 0)
    t = transvect(cabling(0, 5), cable_twist(10))
    assert crossed_vector(t, W(5, 1, 2)).entries == (2,) * 5
    with pytest.raises(CablingError):
        crossed_vector(standard_hom("inclusion", 5), W(5, 1))


def test_crossed_vector_action():
    v = CrossedVector((1, 2, 3))
    assert v.acted_on_by(W(3, 1)).entries == (2, 1, 3)
    assert len(v) == 3
    with pytest.raises(ValueError):
        v.acted_on_by(W(4, 1))


@settings(max_examples=30)
@given(braid_words(n=4, max_len=8), braid_words(n=4, max_len=8), st.integers(-2, 2))
def test_crossed_homomorphism_identity(g, h, k):
    # d(gh) = d(g) + g . d(h), where (g . v)[j] = v[perm_g(j)]
    rho = cabling(k, 4)
    dg, dh, dgh = crossed_vector(rho, g), crossed_vector(rho, h), crossed_vector(rho, g * h)
    moved = dh.acted_on_by(g).entries
    assert dgh.entries == tuple(a + b for a, b in zip(dg.entries, moved))


# -- classification ------------------------------------------------------------------

@pytest.mark.parametrize("k", [-3, -1, 0, 2])
@pytest.mark.parametrize("n", [3, 5])
def test_classify_standard(n, k):
    c = classify_cabling(cabling(k, n))
    assert (c.k_canonical, c.x, c.y) == (k, 0, k)
    assert c.conjugator_exponents == [0] * n and c.certified and c.check_invariants()


def test_classify_transvected_and_central():
    c = classify_cabling(transvect(cabling(1, 5), cable_twist(10) ** 2))
    assert (c.k_canonical, c.x, c.y, c.transvection_exponent) == (1, 4, 5, -2)
    assert c.certified
    c = classify_cabling(transvect(cabling(-2, 4), named("z", 8) ** -1))
    assert c.center_exponent == -1 and c.k_canonical == -2 and c.certified


def test_classify_inner_conjugate_by_cable_twists():
    inner = standard_hom(StandardKind.of("inner", conjugator=W(10, 1)), 10)
    c = classify_cabling(compose_hom(inner, cabling(1, 5)))
    assert c.k_canonical == 1 and c.certified
    assert any(c.conjugator_exponents)
    assert c.check_invariants()


@settings(max_examples=15)
@given(st.integers(-2, 2), st.integers(-2, 2), st.randoms(use_true_random=False))
def test_classify_recovers_k(k, s, rng):
    n = 4
    odd = random_word(8, 6, rng)
    odd = BraidWord(8, tuple(x if abs(x) % 2 else x - 1 if x > 0 else x + 1 for x in odd.letters))
    h = transvect(cabling(k, n), cable_twist(8) ** s)
    h = compose_hom(standard_hom(StandardKind.of("inner", conjugator=odd), 8), h)
    c = classify_cabling(h)
    assert c.k_canonical == k and c.certified and c.check_invariants()


def test_classify_rejects():
    with pytest.raises(CablingError):
        classify_cabling(standard_hom("diagonal", 5))
    with pytest.raises(CablingError):
        classify_cabling(Homomorphism(3, 6, (W(6, 1), W(6, 2))))
    with pytest.raises(CablingError):
        classify_cabling(standard_hom("inclusion", 3, target=6))


def test_classify_n2_notes_free_x():
    c = classify_cabling(cabling(2, 2))
    assert c.k_canonical == 2 and c.certified and c.notes


def test_classification_json():
    c = classify_cabling(cabling(2, 3))
    data = json.loads(classification_json(c))
    assert data["k_canonical"] == 2 and data["interior_matrix"] == [[2, 0, 0], [0, 2, 0]]
    assert list(data) == sorted(data)
    assert "certified: true" in c.to_text()


def test_random_twist_words_stay_in_cabling_position():
    rng = random.Random(11)
    cs = CableStructure.pairs(5)
    h = cabling(1, 5)
    for _ in range(20):
        g = random_word(5, 12, rng)
        assert cs.block_permutation(apply_hom(h, g)) == cs.block_permutation(beta(g, cs))
