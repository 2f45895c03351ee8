"""Exit criteria, one test per criterion, each with its time budget.

Every test appends a PASS/FAIL line that is printed in the terminal summary.
"""

import itertools
import time
from contextlib import contextmanager

from cubicat import graphs
from cubicat.compare import compare_term
from cubicat.corpus import random_corpus
from cubicat.dsl import parse
from cubicat.engine import (
    State,
    Variant,
    apply,
    color_strings,
    color_sum,
    count,
    evaluate,
    identity_table,
)
from cubicat.oracle import diagram_graph, oracle_chi
from cubicat.relations import catalog, verify
from cubicat.slices import to_slices
from cubicat.term import GeneratorKind, adjoint, compose, generator, generators, identity, tensor
from cubicat.trees import (
    Direction,
    associahedron,
    ek_check,
    leaf_vector,
    signed_associahedron,
    signed_components,
    signings,
    label,
    tree_term,
    trees,
)

from .conftest import ACCEPTANCE_LINES

F, FT = Variant.PLAIN, Variant.SIGNED
H = "((lam # id) ; (id # y))"
SIGNED_SPLITS = (GeneratorKind.LAMBDA_PLUS, GeneratorKind.LAMBDA_MINUS)


@contextmanager
def criterion(number, title, budget, timing=None):
    """Record a PASS/FAIL line; ``timing`` (a one-item list) overrides the wall clock."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = timing[0] if timing else time.perf_counter() - start
        within = elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        ACCEPTANCE_LINES.append(
            f"[{status}] {number:>2}. {title} ({elapsed:.3f}s, budget {budget}s)")
    assert within, f"criterion {number} took {elapsed:.3f}s, budget {budget}s"


def catalan(n):
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


def test_01_h_squared_on_e11():
    slices = to_slices(parse(f"{H} ; {H}"))
    apply(slices, State.basis("11"))  # warm caches
    best = [float("inf")]
    with criterion(1, "F(H;H)(e1e1) = 2 e1e1 + e2e2 + e3e3, best of 20", 0.001, best):
        for _ in range(20):
            start = time.perf_counter()
            out = apply(slices, State.basis("11"), F)
            best[0] = min(best[0], time.perf_counter() - start)
            assert out.coeffs == {"11": 2, "22": 1, "33": 1}


def test_02_relation_suite():
    with criterion(2, "relations R1-R8, interchange, PEN, IHX, TWIST, DECOMP, SIGNREASSOC", 1.0):
        rels = catalog()
        names = {r.name for r in rels}
        for required in ["R1a", "R1b", "R2", "R3", "R4", "R5", "R6", "R7a", "R7b", "R8",
                         "PEN", "IHX", "TWIST", "DECOMP", "SIGNREASSOC1", "SIGNREASSOC2"]:
            assert required in names
        for r in rels:
            if r.name.startswith(("R", "INT")) and not r.name.startswith("REASSOC"):
                assert r.variants == {F, FT}
            for variant in r.variants:
                result = verify(r, variant)
                assert result.passed, (r.name, variant, result.mismatch)


def test_03_oracle_equivalence():
    with criterion(3, "500 random terms: engine == backtracking oracle (F and F~)", 60):
        corpus = random_corpus(500, seed=1, max_width=6, max_gens=12)
        for i, t in enumerate(corpus):
            assert to_slices(t).max_width <= 6
            assert sum(1 for k in generators(t) if k is not GeneratorKind.ID) <= 12
            assert compare_term(t, i) == []


def test_04_closed_graph_counts():
    with criterion(4, "closed counts: circle 3, theta 6, K4 6, Petersen 0", 10):
        assert count(graphs.circle()) == 3
        assert count(graphs.theta()) == 6
        assert count(graphs.k4()) == 6
        pet = graphs.petersen()
        assert count(pet) == 0
        g = diagram_graph(pet)
        assert g.num_edges == 15 and g.crossings
        assert evaluate(pet, FT)["", ""] == oracle_chi(g, "", "", signed=True)


def test_05_tree_pairings():
    with criterion(5, "F(g*g) = 2^n id and F(f*g) = <.,.> id > 0 for all n <= 6", 30):
        for n in range(7):
            shapes = trees(n)
            desc = [tree_term(s) for s in shapes]
            asc = [tree_term(s, Direction.ASCENDANT) for s in shapes]
            vectors = [leaf_vector(s) for s in shapes]
            for (i, g), (j, f) in itertools.product(enumerate(shapes), repeat=2):
                table = evaluate(compose(desc[i], asc[j]))
                value = vectors[i].dot(vectors[j])
                assert value > 0
                assert table == identity_table(1, value)
                if i == j:
                    assert value == 2 ** n


def test_06_signed_expansion():
    with criterion(6, "leaf vectors are 0/1 with 2^n ones = sum over 2^n signings", 30):
        for n in range(7):
            for s in trees(n):
                vec = leaf_vector(s)
                assert set(vec.coeffs.values()) == {1} and len(vec.coeffs) == 2 ** n
                total = State(n + 1)
                for st in signings(s):
                    total = total + leaf_vector(st)
                assert total == vec


def test_07_associahedron_facts():
    with criterion(7, "Catalan counts, pentagon, connectivity, signed n=2 components", 10):
        for n in range(9):
            g = associahedron(n)
            assert len(g.vertices) == catalan(n)
            assert g.is_connected()
        pent = associahedron(3)
        assert (len(pent.vertices), len(pent.edges)) == (5, 5)
        assert len(signed_associahedron(2).vertices) == 8
        comps = [sorted(label(t) for t in c) for c in signed_components(2)]
        assert len(comps) == 6
        assert ["(())|--", "()()|++"] in comps  # R++ with L--
        assert ["(())|++", "()()|--"] in comps  # R-- with L++


def test_08_ek_check():
    with criterion(8, "signed liftability (EK) of every pair, n <= 6", 300):
        for n in range(7):
            report = ek_check(n)
            assert report.passed, report.failures
            assert report.liftable == report.pairs == catalan(n) * (catalan(n) - 1) // 2


def test_09_invariant_battery():
    perms = ["".join(p) for p in itertools.permutations("123")]
    with criterion(9, "color-sum, S3, parity, |F~| <= F, adjoint = transpose", 60):
        for t in random_corpus(500, seed=2):
            signed_splits = any(k in SIGNED_SPLITS for k in generators(t))
            plain, signed = evaluate(t, F), evaluate(t, FT)
            for key in set(plain.entries) | set(signed.entries):
                i, o = key
                assert color_sum(i) == color_sum(o)
                assert abs(signed[key]) <= plain[key]
                assert (plain[key] - signed[key]) % 2 == 0
            for table in (plain, signed):
                for p in perms[:1] + perms[3:5] if signed_splits else perms:
                    sigma = str.maketrans("123", p)
                    assert {(i.translate(sigma), o.translate(sigma)): v
                            for (i, o), v in table.entries.items()} == table.entries
            if not signed_splits:
                assert evaluate(adjoint(t), F) == plain.transpose()
                assert evaluate(adjoint(t), FT) == signed.transpose()


def _row(width, g, k):
    parts = ([identity(k)] if k else []) + [g] + (
        [identity(width - k - g.dom)] if width - k - g.dom else [])
    return parts[0] if len(parts) == 1 else tensor(*parts)


def _wide_planar_term():
    """2 -> 2, 40 generators, widening to 12 strands and back."""
    lam, y = generator("lam"), generator("y")
    steps, w = [], 2
    for i in range(10):
        steps.append(_row(w, lam, i % w))
        w += 1
    for i in range(10):
        k = (3 * i) % (w - 1)
        steps += [_row(w, y, k), _row(w - 1, lam, k)]
    for i in range(10):
        steps.append(_row(w, y, (5 * i) % (w - 1)))
        w -= 1
    return steps


def test_10_performance():
    steps = _wide_planar_term()
    t = compose(*steps)
    s = to_slices(t)
    assert s.max_width == 12 and sum(len(layer) for layer in s.layers) == 40
    with criterion(10, "width-12, 40-generator planar term, all columns, exact", 10):
        table = evaluate(t, F)
    # exactness: per-column sweeps, the mirror image, and the sign-free variant agree
    for colors in color_strings(2):
        assert apply(s, State.basis(colors), F) == table.column(colors)
    assert evaluate(adjoint(t), F) == table.transpose()
    assert evaluate(s, FT) == table
    assert table.dom == 2 and table.cod == 2 and not table.is_zero()
