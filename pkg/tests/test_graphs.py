import itertools

import pytest

from corpus import CORPUS, SQUARE, graph
from raagkit import (
    DuplicateVertex,
    ExplicitSelfLoop,
    InvalidVertexName,
    MismatchedEnds,
    NotAHom,
    SearchSpaceTooLarge,
    UnknownEndpoint,
    UnknownVertex,
    adjacent,
    compose_homs,
    enumerate_homs,
    equalizer,
    full_subgraph,
    graphs_isomorphic,
    identity_hom,
    is_coreflexive_pair,
    validate_graph,
    validate_hom,
)


def test_square_normalization():
    g = validate_graph(["d", "c", "b", "a"], [("b", "a"), ("b", "c"), ("d", "c"), ("a", "d")])
    assert g.vertices == ("a", "b", "c", "d")
    assert g == SQUARE


def test_one_vertex_graph():
    g = validate_graph(["v"], [])
    assert g.vertices == ("v",)
    assert g.edges == frozenset()


def test_empty_graph_is_allowed():
    g = validate_graph([], [])
    assert g.vertices == ()


def test_explicit_self_loop_rejected():
    with pytest.raises(ExplicitSelfLoop):
        validate_graph(["a"], [("a", "a")])


def test_bad_vertex_names_rejected():
    with pytest.raises(InvalidVertexName):
        validate_graph(["a b"], [])
    with pytest.raises(InvalidVertexName):
        validate_graph([""], [])
    with pytest.raises(InvalidVertexName):
        validate_graph(["a^2"], [])


def test_duplicate_vertex_rejected():
    with pytest.raises(DuplicateVertex):
        validate_graph(["a", "b", "a"], [])


def test_unknown_endpoint_rejected():
    with pytest.raises(UnknownEndpoint):
        validate_graph(["a", "b"], [("a", "c")])


def test_adjacency_reflexive_and_symmetric():
    for g in CORPUS.values():
        for u in g.vertices:
            assert adjacent(g, u, u)
            for v in g.vertices:
                assert adjacent(g, u, v) == adjacent(g, v, u)


def test_adjacent_unknown_vertex():
    with pytest.raises(UnknownVertex):
        adjacent(SQUARE, "a", "x")


def test_degree():
    assert SQUARE.degree("a") == 2
    assert CORPUS["star"].degree("z") == 3
    assert CORPUS["star"].degree("a") == 1


def test_validate_hom_collapse_is_legal():
    k2 = CORPUS["k2"]
    d2 = CORPUS["delta2"]
    f = validate_hom(k2, d2, {"a": "a", "b": "a"})
    assert f("b") == "a"


def test_validate_hom_edge_violation_has_witness():
    k2 = CORPUS["k2"]
    d2 = CORPUS["delta2"]
    with pytest.raises(NotAHom) as info:
        validate_hom(k2, d2, {"a": "a", "b": "b"})
    assert info.value.witness == ("a", "b")


def test_validate_hom_totality():
    d2 = CORPUS["delta2"]
    with pytest.raises(UnknownVertex):
        validate_hom(d2, d2, {"a": "a"})
    with pytest.raises(UnknownVertex):
        validate_hom(d2, d2, {"a": "a", "b": "b", "c": "a"})
    with pytest.raises(UnknownVertex):
        validate_hom(d2, d2, {"a": "a", "b": "x"})


def test_identity_and_composition_laws():
    p3 = CORPUS["p3"]
    ident = identity_hom(p3)
    for f in enumerate_homs(p3, p3):
        assert compose_homs(ident, f).pairs == f.pairs
        assert compose_homs(f, ident).pairs == f.pairs


def test_composition_mismatched_ends():
    f = identity_hom(CORPUS["k2"])
    g = identity_hom(CORPUS["p3"])
    with pytest.raises(MismatchedEnds):
        compose_homs(f, g)


def test_composition_associative_exhaustive():
    p3 = CORPUS["p3"]
    homs = enumerate_homs(p3, p3)
    for f, g, h in itertools.product(homs, repeat=3):
        lhs = compose_homs(compose_homs(f, g), h)
        rhs = compose_homs(f, compose_homs(g, h))
        assert lhs.pairs == rhs.pairs


def test_full_subgraph():
    sub = full_subgraph(SQUARE, ["a", "b", "c"])
    assert sub.vertices == ("a", "b", "c")
    assert sub.edges == frozenset({("a", "b"), ("b", "c")})


def test_equalizer_of_identity_and_swap_is_empty():
    d2 = CORPUS["delta2"]
    alpha = identity_hom(d2)
    beta = validate_hom(d2, d2, {"a": "b", "b": "a"})
    theta, _ = equalizer(alpha, beta)
    assert theta.vertices == ()


def test_equalizer_of_equal_maps_is_everything():
    g = CORPUS["p4"]
    ident = identity_hom(g)
    theta, inc = equalizer(ident, ident)
    assert theta == g
    assert inc.pairs == ident.pairs


def test_coreflexive_pair_identity():
    g = CORPUS["k3"]
    ident = identity_hom(g)
    assert is_coreflexive_pair(ident, ident, ident)


def test_coreflexive_pair_one_into_delta2():
    one = CORPUS["one"]
    d2 = CORPUS["delta2"]
    alpha = validate_hom(one, d2, {"v": "a"})
    beta = validate_hom(one, d2, {"v": "b"})
    rho = validate_hom(d2, one, {"a": "v", "b": "v"})
    assert is_coreflexive_pair(alpha, beta, rho)


def test_not_coreflexive_without_retraction():
    d2 = CORPUS["delta2"]
    alpha = identity_hom(d2)
    beta = validate_hom(d2, d2, {"a": "b", "b": "a"})
    rho = validate_hom(d2, d2, {"a": "a", "b": "a"})
    assert not is_coreflexive_pair(alpha, beta, rho)


def test_enumerate_homs_counts_and_order():
    d2 = CORPUS["delta2"]
    k2 = CORPUS["k2"]
    free_maps = enumerate_homs(d2, k2)
    assert len(free_maps) == 4
    tables = [tuple(dict(f.pairs)[v] for v in ("a", "b")) for f in free_maps]
    assert tables == [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]
    collapses = enumerate_homs(k2, d2)
    assert sorted(sorted(f.pairs) for f in collapses) == [
        [("a", "a"), ("b", "a")],
        [("a", "b"), ("b", "b")],
    ]


def test_enumerate_homs_guard():
    big = validate_graph([f"v{i}" for i in range(10)], [])
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_homs(big, CORPUS["k4"])


def test_isomorphism_found_for_relabeled_square():
    other = graph("p q r s", "pq qr rs sp")
    iso = graphs_isomorphic(SQUARE, other)
    assert iso is not None
    mapping = dict(iso.pairs)
    for u, v in SQUARE.sorted_edges():
        x, y = mapping[u], mapping[v]
        assert ((x, y) if x < y else (y, x)) in other.edges


def test_isomorphism_negative_cases():
    assert graphs_isomorphic(SQUARE, CORPUS["p4"]) is None
    assert graphs_isomorphic(CORPUS["k3"], CORPUS["delta3"]) is None
    assert graphs_isomorphic(CORPUS["k3"], CORPUS["k4"]) is None


def test_isomorphism_size_guard():
    big1 = validate_graph([f"v{i}" for i in range(11)], [])
    big2 = validate_graph([f"w{i}" for i in range(11)], [])
    with pytest.raises(SearchSpaceTooLarge):
        graphs_isomorphic(big1, big2)
