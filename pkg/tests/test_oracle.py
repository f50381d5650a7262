import random

import pytest

from corpus import CORPUS, SQUARE
from raagkit import (
    GraphMismatch,
    SearchSpaceTooLarge,
    a_on_hom,
    enumerate_homs,
    equals,
    identity_hom,
    parse_word,
    word_from_pairs,
)
from raagkit.oracle import bf_equals, bf_is_a_phi


def test_defining_relation_on_k2():
    k2 = CORPUS["k2"]
    assert bf_equals(k2, parse_word(k2, "a b"), parse_word(k2, "b a"))


def test_free_generators_do_not_commute():
    d2 = CORPUS["delta2"]
    assert not bf_equals(d2, parse_word(d2, "a b"), parse_word(d2, "b a"))


def test_swap_then_cancel_on_square():
    assert bf_equals(SQUARE, parse_word(SQUARE, "a b a^-1"), parse_word(SQUARE, "b"))


def test_empty_words_are_equal():
    assert bf_equals(SQUARE, parse_word(SQUARE, ""), parse_word(SQUARE, ""))


def test_length_guard():
    w1 = parse_word(SQUARE, "a^8")
    w2 = parse_word(SQUARE, "b^7")
    with pytest.raises(SearchSpaceTooLarge):
        bf_equals(SQUARE, w1, w2)


def test_graph_mismatch():
    with pytest.raises(GraphMismatch):
        bf_equals(SQUARE, parse_word(CORPUS["k2"], "a"), parse_word(SQUARE, "a"))


def test_random_agreement_with_solver():
    rng = random.Random(99)
    for g in (SQUARE, CORPUS["p3"], CORPUS["k3"], CORPUS["delta2"]):
        for _ in range(150):
            n1, n2 = rng.randint(0, 5), rng.randint(0, 5)
            w1 = word_from_pairs(
                g, [(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(n1)])
            w2 = word_from_pairs(
                g, [(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(n2)])
            assert bf_equals(g, w1, w2) == equals(w1, w2)


def test_phi_recovered_between_one_vertex_graphs():
    from raagkit import group_hom, raag_of_graph, validate_graph

    one_v = validate_graph(["v"], [])
    one_w = validate_graph(["w"], [])
    f = group_hom(raag_of_graph(one_v), raag_of_graph(one_w),
                  {"v": parse_word(one_w, "w")})
    phi = bf_is_a_phi(f, one_v, one_w)
    assert phi is not None
    assert phi("v") == "w"


def test_squaring_map_is_not_induced():
    from raagkit import group_hom, raag_of_graph, validate_graph

    one_v = validate_graph(["v"], [])
    one_w = validate_graph(["w"], [])
    f = group_hom(raag_of_graph(one_v), raag_of_graph(one_w),
                  {"v": parse_word(one_w, "w^2")})
    assert bf_is_a_phi(f, one_v, one_w) is None


def test_every_induced_hom_is_recovered_exactly():
    d2, k2 = CORPUS["delta2"], CORPUS["k2"]
    for phi in enumerate_homs(d2, k2):
        got = bf_is_a_phi(a_on_hom(phi), d2, k2)
        assert got is not None
        assert got.pairs == phi.pairs


def test_identity_recovers_identity():
    ident = identity_hom(SQUARE)
    got = bf_is_a_phi(a_on_hom(ident), SQUARE, SQUARE)
    assert got is not None
    assert got.pairs == ident.pairs
