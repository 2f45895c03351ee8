import itertools
from math import comb

import pytest

from cubicat.dsl import parse
from cubicat.engine import State, Variant, color_sum, evaluate, identity_table
from cubicat.errors import BoundExceeded, LeafMismatch
from cubicat.oracle import diagram_graph, oracle_table
from cubicat.term import adjoint, compose, is_planar
from cubicat.trees import (
    Direction,
    Node,
    associahedron,
    decode,
    ek_check,
    encode,
    from_label,
    label,
    leaf_vector,
    lift_path,
    moves,
    nodes,
    pairing,
    shape,
    signed_associahedron,
    signed_components,
    signed_moves,
    signed_trees,
    signings,
    tree_term,
    trees,
    with_signs,
)

LEFT2, RIGHT2 = decode("(())"), decode("()()")


def catalan(n):
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


def test_encoding_round_trip():
    for n in range(6):
        for t in trees(n):
            assert decode(encode(t)) == t and nodes(t) == n
    assert encode(Node(None, None)) == "()"
    with pytest.raises(ValueError):
        decode("(()")
    with pytest.raises(ValueError):
        decode("())(")


@pytest.mark.parametrize("n", range(9))
def test_tree_counts_are_catalan(n):
    ts = trees(n)
    assert len(ts) == catalan(n)
    assert [encode(t) for t in ts] == sorted(encode(t) for t in ts)


def test_tree_count_examples():
    assert len(trees(2)) == 2 and len(trees(3)) == 5 and len(trees(6)) == 132


def test_bound():
    with pytest.raises(BoundExceeded):
        trees(11)
    with pytest.raises(BoundExceeded):
        signed_associahedron(7)
    with pytest.raises(BoundExceeded):
        ek_check(7)
    assert len(trees(11, bound=11)) == catalan(11)


def test_signings():
    assert len(signings(decode("(()())"))) == 8
    assert len(signed_trees(3)) == 5 * 8
    st = with_signs(RIGHT2, "+-")
    assert label(st) == "()()|+-" and from_label("()()|+-") == st
    with pytest.raises(ValueError):
        with_signs(RIGHT2, "+")


def test_tree_terms():
    assert tree_term(decode("()")) == parse("lam ; (id # id)")
    assert tree_term(LEFT2) == parse("lam ; ((lam ; (id # id)) # id)")
    assert evaluate(tree_term(LEFT2)) == evaluate(parse("lam ; (lam # id)"))
    for n in range(6):
        for t in trees(n):
            d = tree_term(t)
            assert (d.dom, d.cod) == (1, n + 1) and is_planar(d)
            assert adjoint(d) == tree_term(t, Direction.ASCENDANT)


def test_leaf_vector_examples():
    assert leaf_vector(decode("()")).coeffs == {"23": 1, "32": 1}
    assert leaf_vector(LEFT2).coeffs == {"313": 1, "133": 1, "122": 1, "212": 1}
    assert leaf_vector(with_signs(decode("()"), "+")).coeffs == {"23": 1}


def test_leaf_vector_left_comb_by_oracle():
    table = oracle_table(diagram_graph(tree_term(LEFT2)))
    assert {o: v for (i, o), v in table.items() if i == "1"} == leaf_vector(LEFT2).coeffs


@pytest.mark.parametrize("n", range(6))
def test_leaf_vectors_expand_over_signings(n):
    for t in trees(n):
        vec = leaf_vector(t)
        assert set(vec.coeffs.values()) <= {1} and len(vec.coeffs) == 2 ** n
        total = State(n + 1)
        for st in signings(t):
            sv = leaf_vector(st)
            assert list(sv.coeffs.values()) == [1]
            total = total + sv
        assert total == vec
        assert all(color_sum(k) == 1 for k in vec.coeffs)


def test_moves_examples():
    ((target, move),) = moves(LEFT2)
    assert target == RIGHT2 and str(move) == "right@0"
    for t in trees(4):
        assert len(moves(t)) == 3


def test_move_symmetry():
    for n in range(1, 6):
        for t in trees(n):
            for s, _ in moves(t):
                assert t in [u for u, _ in moves(s)]


def test_signed_moves_examples():
    assert signed_moves(with_signs(RIGHT2, "++")) == [with_signs(LEFT2, "--")]
    assert signed_moves(with_signs(RIGHT2, "--")) == [with_signs(LEFT2, "++")]
    assert signed_moves(with_signs(RIGHT2, "+-")) == []
    assert signed_moves(with_signs(RIGHT2, "-+")) == []


def test_mixed_signs_admit_no_f_preserving_rotation():
    # no signing of the rotated shape reproduces the leaf vector
    for signs in ("+-", "-+"):
        st = with_signs(RIGHT2, signs)
        assert all(leaf_vector(o) != leaf_vector(st) for o in signings(LEFT2))


@pytest.mark.parametrize("n", range(1, 6))
def test_signed_moves_preserve_leaf_vector(n):
    for st in signed_trees(n):
        for other in signed_moves(st):
            assert leaf_vector(other) == leaf_vector(st)
            assert shape(other) in [s for s, _ in moves(shape(st))]


def test_associahedron_examples():
    g = associahedron(3)
    assert len(g.vertices) == 5 and len(g.edges) == 5
    assert all(len(nbrs) == 2 for nbrs in g.adjacency())
    g = associahedron(4)
    assert len(g.vertices) == 14 and len(g.edges) == 21


@pytest.mark.parametrize("n", range(9))
def test_associahedron_connected(n):
    g = associahedron(n)
    assert len(g.vertices) == catalan(n)
    assert len(g.edges) == catalan(n) * max(n - 1, 0) // 2
    assert g.is_connected()


def test_signed_associahedron_two_nodes():
    g = signed_associahedron(2)
    assert len(g.vertices) == 8 and len(g.edges) == 2
    comps = [sorted(label(t) for t in c) for c in signed_components(2)]
    assert len(comps) == 6
    assert ["(())|--", "()()|++"] in comps
    assert ["(())|++", "()()|--"] in comps
    assert sum(len(c) == 1 for c in comps) == 4


@pytest.mark.parametrize("n", range(1, 6))
def test_components_share_leaf_vector(n):
    comps = signed_components(n)
    vectors = set()
    for comp in comps:
        vs = {tuple(leaf_vector(t).coeffs) for t in comp}
        assert len(vs) == 1
        vectors |= vs
    # connected implies equal leaf vector, so components refine the vectors
    assert len(comps) >= len(vectors)


def test_component_vs_vector_counts_observed():
    observed = {}
    for n in range(1, 6):
        vectors = {tuple(leaf_vector(t).coeffs) for t in signed_trees(n)}
        observed[n] = (len(signed_components(n)), len(vectors))
    assert observed == {1: (2, 2), 2: (6, 6), 3: (20, 20), 4: (68, 60), 5: (224, 182)}


@pytest.mark.parametrize("n", range(0, 6))
def test_ek_small(n):
    report = ek_check(n)
    assert report.passed
    assert report.pairs == comb(catalan(n), 2) == report.liftable


def test_ek_report_json():
    data = ek_check(4).to_json()
    assert data["n"] == 4 and data["pairs"] == 91 and data["liftable"] == 91
    assert data["failures"] == []


def test_lift_path_is_a_signed_path():
    a, b = decode("((()))"), decode("()()()")
    path = lift_path(a, b)
    assert shape(path[0]) == a and shape(path[-1]) == b
    for u, v in zip(path, path[1:]):
        assert v in signed_moves(u)
    assert path == lift_path(a, b)


def test_pairing_examples():
    assert pairing(LEFT2, RIGHT2) == 2
    for n in range(5):
        for t in trees(n):
            assert pairing(t, t) == 2 ** n
    with pytest.raises(LeafMismatch):
        pairing(LEFT2, decode("()"))


def test_pairing_symmetric_and_scalar():
    for f, g in itertools.product(trees(3), repeat=2):
        p = pairing(f, g)
        assert p == pairing(g, f) > 0
        composite = evaluate(compose(tree_term(g), tree_term(f, Direction.ASCENDANT)))
        assert composite == identity_table(1, p)
        assert evaluate(tree_term(g), Variant.SIGNED) == evaluate(tree_term(g))
