"""Binary trees as splitting diagrams, their signed versions, and rotations.

A tree shape is a full binary tree; ``None`` is a leaf and a :class:`Node`
an internal node.  Its canonical string is the Dyck word obtained from
``leaf -> ""`` and ``node(l, r) -> "(" + l + ")" + r``, so the one-node tree
is ``"()"``, the left comb on two nodes is ``"(())"`` and the right comb is
``"()()"``.  Signed trees carry a ``+`` or ``-`` on every internal node; a
descendant signed tree uses ``lam+``/``lam-`` in place of ``lam``.

Rotations (reassociation moves) act at an internal edge.  The signed version
only rotates an edge whose two nodes carry the same sign and then flips both
signs, which is exactly the pair of identities

    lam+ ; (id # lam+)  ==  lam- ; (lam- # id)
    lam- ; (id # lam-)  ==  lam+ ; (lam+ # id)

read in both directions.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .engine import State, Variant, apply, evaluate, identity_table
from .errors import BoundExceeded, LeafMismatch
from .slices import to_slices
from .term import GeneratorKind, Term, adjoint, compose, generator, tensor

DEFAULT_TREE_BOUND = 10
DEFAULT_ASSOC_BOUND = 8
DEFAULT_SIGNED_BOUND = 6


@dataclass(frozen=True)
class Node:
    left: Optional["Node"]
    right: Optional["Node"]
    sign: str | None = None


Tree = Optional[Node]


class Direction(enum.Enum):
    DESCENDANT = "descendant"
    ASCENDANT = "ascendant"


def _check_bound(n: int, bound: int):
    if n < 0:
        raise ValueError("number of nodes must be non-negative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the configured bound {bound}")


def encode(t: Tree) -> str:
    if t is None:
        return ""
    return "(" + encode(t.left) + ")" + encode(t.right)


def decode(word: str) -> Tree:
    """Inverse of :func:`encode`; raises ``ValueError`` on a non-Dyck word."""

    def parse(i: int) -> tuple[Tree, int]:
        if i == len(word) or word[i] == ")":
            return None, i
        if word[i] != "(":
            raise ValueError(f"unexpected {word[i]!r} in tree word {word!r}")
        left, j = parse(i + 1)
        if j == len(word) or word[j] != ")":
            raise ValueError(f"unbalanced tree word {word!r}")
        right, k = parse(j + 1)
        return Node(left, right), k

    t, end = parse(0)
    if end != len(word):
        raise ValueError(f"unbalanced tree word {word!r}")
    return t


def nodes(t: Tree) -> int:
    return 0 if t is None else 1 + nodes(t.left) + nodes(t.right)


def leaves(t: Tree) -> int:
    return nodes(t) + 1


def signs(t: Tree) -> str:
    """Node signs in preorder."""
    if t is None:
        return ""
    return (t.sign or "?") + signs(t.left) + signs(t.right)


def shape(t: Tree) -> Tree:
    return None if t is None else Node(shape(t.left), shape(t.right))


def with_signs(t: Tree, word: str) -> Tree:
    """Label the nodes of ``t`` in preorder with the characters of ``word``."""
    if len(word) != nodes(t):
        raise ValueError(f"{len(word)} signs for {nodes(t)} nodes")
    it = iter(word)

    def go(s: Tree) -> Tree:
        if s is None:
            return None
        sign = next(it)
        if sign not in "+-":
            raise ValueError(f"sign must be '+' or '-', got {sign!r}")
        return Node(go(s.left), go(s.right), sign)

    return go(t)


def label(t: Tree) -> str:
    """``"(())"`` for shapes, ``"(())|+-"`` for signed trees."""
    if t is not None and t.sign is not None:
        return f"{encode(t)}|{signs(t)}"
    return encode(t)


def from_label(text: str) -> Tree:
    word, _, sign_word = text.partition("|")
    t = decode(word)
    return with_signs(t, sign_word) if sign_word else t


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple[Tree, ...]:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _shapes(k):
            for right in _shapes(n - 1 - k):
                out.append(Node(left, right))
    return tuple(sorted(out, key=encode))


def trees(n: int, bound: int = DEFAULT_TREE_BOUND) -> list[Tree]:
    """All shapes with ``n`` internal nodes, sorted by canonical string."""
    _check_bound(n, bound)
    return list(_shapes(n))


def signings(t: Tree) -> list[Tree]:
    """The ``2**n`` signed trees over a shape, in sign-word order (``+`` first)."""
    return [with_signs(t, "".join(w)) for w in itertools.product("+-", repeat=nodes(t))]


def signed_trees(n: int, bound: int = DEFAULT_SIGNED_BOUND) -> list[Tree]:
    _check_bound(n, bound)
    return [st for s in _shapes(n) for st in signings(s)]


_SPLIT = {
    None: GeneratorKind.LAMBDA,
    "+": GeneratorKind.LAMBDA_PLUS,
    "-": GeneratorKind.LAMBDA_MINUS,
}


def tree_term(t: Tree, direction: Direction | str = Direction.DESCENDANT) -> Term:
    """Descendant tree ``1 -> leaves`` from splittings, or its reflection."""
    direction = Direction(direction)
    if direction is Direction.ASCENDANT:
        return adjoint(tree_term(t, Direction.DESCENDANT))
    if t is None:
        return generator(GeneratorKind.ID)
    return compose(generator(_SPLIT[t.sign]),
                   tensor(tree_term(t.left), tree_term(t.right)))


def leaf_vector(t: Tree) -> State:
    """Image of ``e1`` under the descendant tree."""
    return apply(to_slices(tree_term(t)), State.basis("1"), Variant.PLAIN)


# --- rotations -------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    """Rotation at the node with preorder index ``at``.

    ``"right"`` turns ``((a b) c)`` into ``(a (b c))``, ``"left"`` the reverse.
    """

    direction: str
    at: int

    def __str__(self):
        return f"{self.direction}@{self.at}"


def _rotations(t: Tree, base: int = 0) -> Iterator[tuple[Tree, Move, tuple[str, str] | None]]:
    """Every single rotation of ``t``: (result, move, signs of the pair)."""
    if t is None:
        return
    flip = {"+": "-", "-": "+"}
    if t.left is not None:
        a, b, c = t.left.left, t.left.right, t.right
        p, q = t.sign, t.left.sign
        if p is None:
            yield Node(a, Node(b, c)), Move("right", base), None
        elif p == q:
            yield Node(a, Node(b, c, flip[p]), flip[q]), Move("right", base), (p, q)
    if t.right is not None:
        a, b, c = t.left, t.right.left, t.right.right
        p, q = t.sign, t.right.sign
        if p is None:
            yield Node(Node(a, b), c), Move("left", base), None
        elif p == q:
            yield Node(Node(a, b, flip[p]), c, flip[q]), Move("left", base), (p, q)
    left_base = base + 1
    for sub, mv, pair in _rotations(t.left, left_base):
        yield Node(sub, t.right, t.sign), mv, pair
    right_base = base + 1 + nodes(t.left)
    for sub, mv, pair in _rotations(t.right, right_base):
        yield Node(t.left, sub, t.sign), mv, pair


def moves(t: Tree) -> list[tuple[Tree, Move]]:
    """Unsigned rotations of a shape; there is one per internal edge."""
    if t is not None and t.sign is not None:
        raise ValueError("moves() takes a shape; use signed_moves() for signed trees")
    return [(s, mv) for s, mv, _ in _rotations(t)]


def signed_moves(t: Tree) -> list[Tree]:
    """Signed rotations: equal signs on both nodes, both flipped."""
    if t is not None and t.sign is None:
        raise ValueError("signed_moves() takes a signed tree")
    return [s for s, _, _ in _rotations(t)]


@dataclass
class AssocGraph:
    vertices: list[Tree]
    edges: list[tuple[int, int]]
    signed: bool = False
    index: dict[Tree, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.vertices)}

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def components(self) -> list[list[int]]:
        """Connected components (BFS), each sorted, listed by smallest member."""
        adj = self.adjacency()
        seen = [False] * len(self.vertices)
        out = []
        for start in range(len(self.vertices)):
            if seen[start]:
                continue
            seen[start] = True
            comp, queue = [start], deque([start])
            while queue:
                for w in adj[queue.popleft()]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def shortest_path(self, a: int, b: int) -> list[int] | None:
        """BFS path; neighbours are scanned in index order so ties are stable."""
        adj = self.adjacency()
        prev = {a: a}
        queue = deque([a])
        while queue:
            u = queue.popleft()
            if u == b:
                path = [b]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            for w in adj[u]:
                if w not in prev:
                    prev[w] = u
                    queue.append(w)
        return None

    def to_json(self) -> dict:
        return {
            "signed": self.signed,
            "vertices": [label(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        name = "signed_associahedron" if self.signed else "associahedron"
        lines = [f"graph {name} {{"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  {i} [label="{label(v)}"];')
        for a, b in self.edges:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines)


def _graph(vertices: list[Tree], step, signed: bool) -> AssocGraph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = set()
    for i, v in enumerate(vertices):
        for w in step(v):
            j = index[w]
            edges.add((min(i, j), max(i, j)))
    return AssocGraph(vertices, sorted(edges), signed)


def associahedron(n: int, bound: int = DEFAULT_ASSOC_BOUND) -> AssocGraph:
    """Rotation graph on shapes with ``n`` internal nodes."""
    _check_bound(n, bound)
    return _graph(trees(n, bound), lambda t: [s for s, _ in moves(t)], signed=False)


def signed_associahedron(n: int, bound: int = DEFAULT_SIGNED_BOUND) -> AssocGraph:
    """Signed rotation graph on all ``2**n`` signings of every shape."""
    _check_bound(n, bound)
    return _graph(signed_trees(n, bound), signed_moves, signed=True)


def signed_components(n: int, bound: int = DEFAULT_SIGNED_BOUND) -> list[list[Tree]]:
    g = signed_associahedron(n, bound)
    return [[g.vertices[i] for i in comp] for comp in g.components()]


@dataclass
class EKReport:
    n: int
    pairs: int
    liftable: int
    failures: list[tuple[str, str]]
    components: int

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"n": self.n, "pairs": self.pairs, "liftable": self.liftable,
                "failures": [list(f) for f in self.failures],
                "components": self.components, "pass": self.passed}


def ek_check(n: int, bound: int = DEFAULT_SIGNED_BOUND) -> EKReport:
    """For every pair of shapes, look for a signed component covering both.

    A signed path between signings of two shapes projects to a rotation path
    between the shapes, so sharing a component is exactly liftability.
    """
    _check_bound(n, bound)
    comps = signed_components(n, bound)
    shapes = trees(n, bound)
    covering: dict[Tree, set[int]] = {s: set() for s in shapes}
    for ci, comp in enumerate(comps):
        for st in comp:
            covering[shape(st)].add(ci)
    failures = []
    pairs = 0
    for a, b in itertools.combinations(shapes, 2):
        pairs += 1
        if not covering[a] & covering[b]:
            failures.append((encode(a), encode(b)))
    return EKReport(n, pairs, pairs - len(failures), failures, len(comps))


def lift_path(a: Tree, b: Tree, bound: int = DEFAULT_SIGNED_BOUND) -> list[Tree] | None:
    """A shortest signed rotation path from some signing of ``a`` to some of ``b``.

    Multi-source BFS from all signings of ``a``; neighbours are scanned in
    index order, so the witness is deterministic.
    """
    n = nodes(a)
    if nodes(b) != n:
        raise LeafMismatch(f"{nodes(a)} vs {nodes(b)} nodes")
    g = signed_associahedron(n, bound)
    adj = g.adjacency()
    targets = {g.index[t] for t in signings(b)}
    sources = [g.index[t] for t in signings(a)]
    prev = {s: s for s in sources}
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        if u in targets:
            path = [u]
            while prev[path[-1]] != path[-1]:
                path.append(prev[path[-1]])
            return [g.vertices[i] for i in reversed(path)]
        for w in adj[u]:
            if w not in prev:
                prev[w] = u
                queue.append(w)
    return None


def pairing(f: Tree, g: Tree, check: bool = True) -> int:
    """Inner product of leaf vectors of ``g`` and ``f``.

    With ``check`` the composite diagram ``g`` over the reflection of ``f`` is
    also evaluated and must be that multiple of the identity on one strand.
    """
    if leaves(f) != leaves(g):
        raise LeafMismatch(f"{leaves(f)} vs {leaves(g)} leaves")
    value = leaf_vector(g).dot(leaf_vector(f))
    if check:
        table = evaluate(compose(tree_term(g), tree_term(f, Direction.ASCENDANT)))
        if table != identity_table(1, value):
            raise AssertionError(f"composite of {encode(g)} and {encode(f)} is not {value} * id")
    return value
