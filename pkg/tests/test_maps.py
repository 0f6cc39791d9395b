import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfbracket.maps import (
    MapError,
    Verdict,
    apply_chain,
    apply_class,
    apply_word,
    commutes_on,
    compose,
    generates_everything,
    homomorphism,
    identity,
    is_isomorphism,
    nielsen_invert,
    nielsen_multiply,
    nielsen_swap,
    parse_map,
    random_automorphism,
)
from surfbracket.bracket import Chain
from surfbracket.words import CyclicWord, Word, enumerate_classes, parse_word, primitive_root

TAU = homomorphism(["a", "ba"])
SWAP = homomorphism(["b", "a"])


def C(text):
    return CyclicWord.parse(text)


def nielsen_library(rank):
    moves = [nielsen_invert(rank, i) for i in range(rank)]
    for i in range(rank):
        for j in range(rank):
            if i != j:
                moves += [nielsen_swap(rank, i, j), nielsen_multiply(rank, i, j),
                          nielsen_multiply(rank, i, j, left=True)]
    return moves


# -- applying maps --------------------------------------------------------------

@pytest.mark.parametrize("images, u, expected", [
    (["ab", "b"], "aB", "a"),
    (["a", "b"], "abAAB", "abAAB"),
    (["a", "ba"], "abAB", "abAB"),
])
def test_apply_word(images, u, expected):
    assert str(apply_word(homomorphism(images), parse_word(u, 2))) == expected


def test_apply_class_examples():
    assert apply_class(SWAP, C("ab")) == C("ab")
    assert apply_class(TAU, C("abAB")) == C("abAB")
    assert apply_class(TAU, CyclicWord()) == CyclicWord()


def test_apply_word_rejects_foreign_letters():
    with pytest.raises(MapError):
        apply_word(TAU, parse_word("c", 3))


def test_apply_chain_is_linear():
    u = Chain({C("b"): 2, C("a"): -1})
    assert apply_chain(SWAP, u) == Chain({C("a"): 2, C("b"): -1})
    # images can collide and cancel
    collapse = homomorphism(["a", "a"])
    assert apply_chain(collapse, Chain({C("a"): 1, C("b"): -1})) == 0


@settings(max_examples=100)
@given(st.lists(st.integers(0, 3), max_size=10), st.lists(st.integers(0, 3), max_size=6))
def test_apply_class_conjugation_invariant(u, w):
    f = homomorphism(["ab", "bba"])
    u, w = Word(u), Word(w)
    assert apply_class(f, CyclicWord((w * u * ~w).letters)) == apply_class(f, CyclicWord(u.letters))


# -- composition ---------------------------------------------------------------

def test_compose_examples():
    assert compose(identity(2), TAU) == TAU
    assert compose(TAU, TAU) == homomorphism(["a", "baa"])
    assert compose(SWAP, SWAP) == identity(2)


def test_compose_order():
    f, g = homomorphism(["ab", "b"]), SWAP
    u = parse_word("aBBa", 2)
    assert apply_word(compose(g, f), u) == apply_word(g, apply_word(f, u))


def test_compose_rank_mismatch():
    with pytest.raises(MapError):
        compose(identity(3), TAU)


# -- folding -------------------------------------------------------------------

@pytest.mark.parametrize("images, expected", [
    (["ab", "b"], True),
    (["aa", "b"], False),
    (["a", "a"], False),
    (["a", "ba"], True),
    (["b", "a"], True),
    (["ab", "ba"], False),
    (["abAB", "b"], False),
])
def test_is_isomorphism(images, expected):
    assert is_isomorphism(homomorphism(images, 2)) is expected


def test_rank_mismatch_is_not_isomorphism():
    assert not is_isomorphism(homomorphism(["a", "b", "ab"], 2))
    assert not is_isomorphism(homomorphism(["a"], 2))


def test_generates_everything_with_redundant_images():
    # <aab, ab> contains a = aab * (ab)^-1 ... then b
    words = [parse_word(t, 2) for t in ("aab", "ab")]
    assert generates_everything(words, 2)
    assert not generates_everything([parse_word("aab", 2), parse_word("abb", 2)], 2)


def test_seeded_nielsen_products_are_isomorphisms():
    rng = random.Random(20)
    for _ in range(20):
        rank = rng.choice((2, 3))
        assert is_isomorphism(random_automorphism(rng, rank, rng.randint(1, 12)))


@pytest.mark.parametrize("images", [["ab", "b"], ["aa", "b"], ["a", "a"], ["ab", "ba"]])
def test_isomorphism_invariant_under_nielsen_moves(images):
    f = homomorphism(images, 2)
    expected = is_isomorphism(f)
    for m in nielsen_library(2):
        assert is_isomorphism(compose(m, f)) is expected
        assert is_isomorphism(compose(f, m)) is expected


def test_nielsen_multiply_needs_distinct_generators():
    with pytest.raises(MapError):
        nielsen_multiply(2, 1, 1)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_automorphisms_preserve_primitive_classes(rng):
    f = random_automorphism(rng, 2, rng.randint(1, 8))
    for x in enumerate_classes(2, 5):
        if primitive_root(x)[1] == 1:
            assert primitive_root(apply_class(f, x))[1] == 1


# -- bracket equivariance ------------------------------------------------------------

def test_commutes_on_examples(torus, pants):
    a, b = C("a"), C("b")
    assert commutes_on(torus, torus, identity(2), a, b) is Verdict.COMMUTES
    assert commutes_on(torus, torus, SWAP, a, b) is Verdict.ANTICOMMUTES
    assert commutes_on(pants, torus, identity(2), a, b) is Verdict.NEITHER
    assert commutes_on(torus, torus, identity(2), a, C("aa")) is Verdict.DEGENERATE


def test_commutes_on_rank_check(torus, torus2):
    with pytest.raises(MapError):
        commutes_on(torus2, torus, TAU, C("a"), C("b"))


def test_twist_commutes_everywhere(torus):
    classes = enumerate_classes(2, 5)
    for x in classes:
        for y in classes:
            assert commutes_on(torus, torus, TAU, x, y) in (Verdict.COMMUTES, Verdict.DEGENERATE)


# -- parsing -----------------------------------------------------------------------

def test_parse_map():
    assert parse_map("a->ab,b->b") == homomorphism(["ab", "b"])
    assert parse_map(" a -> a , b -> ba ", 2, 2) == TAU
    assert str(parse_map("a->b,b->a")) == "a->b,b->a"


@pytest.mark.parametrize("text", ["a->b", "a->a,a->b", "b->a,c->b", "a=b,b->a", "a->x1,b->b", "ab->a,b->b"])
def test_parse_map_errors(text):
    with pytest.raises(MapError):
        parse_map(text, 2, 2)
