"""Independent ground truth by brute-force edge coloring.

The slice form is read as a drawing: strands are followed through crossings,
caps and cups join strands into single edges, and the splitting/merging
generators become trivalent vertices.  The resulting abstract graph keeps the
crossing list (needed for signs) and the ordered free ends.  Colorings are
then enumerated by plain backtracking, with no algebra at all, so the result
can be compared against the tensor engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .slices import SliceForm, to_slices
from .term import GeneratorKind, Term

Coloring = tuple[int, ...]

# ordered (input, left output, right output) triples allowed at a signed splitting
ORIENTED = {
    GeneratorKind.LAMBDA_PLUS: frozenset({(1, 2, 3), (2, 3, 1), (3, 1, 2)}),
    GeneratorKind.LAMBDA_MINUS: frozenset({(2, 1, 3), (1, 3, 2), (3, 2, 1)}),
}


@dataclass(frozen=True)
class Vertex:
    """A trivalent node.

    ``edges`` is ordered (input, left output, right output) for splittings
    and (left input, right input, output) for merges.
    """

    id: int
    kind: GeneratorKind
    edges: tuple[int, int, int]


@dataclass
class DiagramGraph:
    num_edges: int
    vertices: list[Vertex] = field(default_factory=list)
    crossings: list[tuple[int, int]] = field(default_factory=list)
    top: list[int] = field(default_factory=list)
    bottom: list[int] = field(default_factory=list)

    @property
    def edges(self) -> list[int]:
        return list(range(self.num_edges))

    def free_loops(self) -> list[int]:
        """Closed edges that meet no vertex and no boundary."""
        used = set(self.top) | set(self.bottom)
        for v in self.vertices:
            used.update(v.edges)
        return [e for e in self.edges if e not in used]

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v.id, "kind": v.kind.value, "edges": list(v.edges)}
                         for v in self.vertices],
            "edges": self.edges,
            "crossings": [list(c) for c in self.crossings],
            "top": list(self.top),
            "bottom": list(self.bottom),
        }

    def to_dot(self) -> str:
        lines = ["graph diagram {"]
        for i in range(len(self.top)):
            lines.append(f'  t{i} [shape=point, xlabel="top {i + 1}"];')
        for i in range(len(self.bottom)):
            lines.append(f'  b{i} [shape=point, xlabel="bottom {i + 1}"];')
        for v in self.vertices:
            lines.append(f'  v{v.id} [label="{v.kind.value}"];')
        ends: dict[int, list[str]] = {e: [] for e in self.edges}
        for i, e in enumerate(self.top):
            ends[e].append(f"t{i}")
        for i, e in enumerate(self.bottom):
            ends[e].append(f"b{i}")
        for v in self.vertices:
            for e in v.edges:
                ends[e].append(f"v{v.id}")
        for e, nodes in ends.items():
            if not nodes:
                lines.append(f'  loop{e} [shape=circle, label="e{e}"];')
            elif len(nodes) == 2:
                lines.append(f'  {nodes[0]} -- {nodes[1]} [label="e{e}"];')
            else:
                # an identity strand whose two ends are both on one side
                lines.append(f'  {nodes[0]} -- {nodes[0]} [label="e{e}"];')
        for k, (a, b) in enumerate(self.crossings):
            lines.append(f'  c{k} [shape=box, style=dashed, label="e{a} x e{b}"];')
        lines.append("}")
        return "\n".join(lines)


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def new(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def diagram_graph(slices: SliceForm | Term) -> DiagramGraph:
    """Abstract cubic graph drawn by a slice form."""
    if not isinstance(slices, SliceForm):
        slices = to_slices(slices)
    uf = _UnionFind()
    strands = [uf.new() for _ in range(slices.dom)]
    top = list(strands)
    raw_vertices: list[tuple[GeneratorKind, tuple[int, int, int]]] = []
    raw_crossings: list[tuple[int, int]] = []
    for layer in slices.layers:
        for kind, offset in reversed(layer):
            k = offset
            if kind is GeneratorKind.CAP:
                s = uf.new()
                strands[k:k] = [s, s]
            elif kind is GeneratorKind.CUP:
                uf.union(strands[k], strands[k + 1])
                del strands[k:k + 2]
            elif kind is GeneratorKind.Y:
                out = uf.new()
                raw_vertices.append((kind, (strands[k], strands[k + 1], out)))
                strands[k:k + 2] = [out]
            elif kind is GeneratorKind.X:
                raw_crossings.append((strands[k], strands[k + 1]))
                strands[k], strands[k + 1] = strands[k + 1], strands[k]
            elif kind.is_vertex:
                a, b = uf.new(), uf.new()
                raw_vertices.append((kind, (strands[k], a, b)))
                strands[k:k + 1] = [a, b]
    roots = sorted({uf.find(s) for s in range(len(uf.parent))})
    number = {r: i for i, r in enumerate(roots)}

    def edge(s: int) -> int:
        return number[uf.find(s)]

    return DiagramGraph(
        num_edges=len(roots),
        vertices=[Vertex(i, kind, tuple(edge(s) for s in slots))
                  for i, (kind, slots) in enumerate(raw_vertices)],
        crossings=[(edge(a), edge(b)) for a, b in raw_crossings],
        top=[edge(s) for s in top],
        bottom=[edge(s) for s in strands],
    )


def _edge_order(g: DiagramGraph, fixed: set[int]) -> list[int]:
    """Most-constrained-first ordering; ties go to the lowest edge index."""
    neighbours: dict[int, set[int]] = {e: set() for e in g.edges}
    for v in g.vertices:
        for a in v.edges:
            neighbours[a].update(b for b in v.edges if b != a)
    placed = set(fixed)
    order = []
    remaining = [e for e in g.edges if e not in fixed]
    while remaining:
        best = max(remaining, key=lambda e: (len(neighbours[e] & placed), -e))
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def _boundary(g: DiagramGraph, top: str | None, bottom: str | None) -> dict[int, int] | None:
    fixed: dict[int, int] = {}
    for ends, colors in ((g.top, top), (g.bottom, bottom)):
        if colors is None:
            continue
        if len(colors) != len(ends):
            raise ValueError(f"{len(colors)} boundary colors for {len(ends)} free ends")
        for e, c in zip(ends, colors):
            c = int(c)
            if c not in (1, 2, 3):
                raise ValueError(f"invalid color {c}")
            if fixed.setdefault(e, c) != c:
                return None
    return fixed


def _vertex_ok(v: Vertex, colors: list[int]) -> bool:
    """Partial check: colored slots distinct, orientation once all are set."""
    seen = [colors[e] for e in v.edges if colors[e]]
    if len(seen) != len(set(seen)):
        return False
    if len(seen) == 3 and v.kind in ORIENTED:
        return tuple(seen) in ORIENTED[v.kind]
    return True


def iter_colorings(g: DiagramGraph, top: str | None = None,
                   bottom: str | None = None) -> Iterator[Coloring]:
    """Yield proper colorings (as tuples indexed by edge) in search order."""
    fixed = _boundary(g, top, bottom)
    if fixed is None:
        return
    if any(len(set(v.edges)) < 3 for v in g.vertices):
        return
    incident: dict[int, list[Vertex]] = {e: [] for e in g.edges}
    for v in g.vertices:
        for e in v.edges:
            incident[e].append(v)
    colors = [0] * g.num_edges
    for e, c in fixed.items():
        colors[e] = c
    if not all(_vertex_ok(v, colors) for v in g.vertices):
        return
    order = _edge_order(g, set(fixed))

    def extend(pos: int) -> Iterator[Coloring]:
        if pos == len(order):
            yield tuple(colors)
            return
        e = order[pos]
        for c in (1, 2, 3):
            colors[e] = c
            if all(_vertex_ok(v, colors) for v in incident[e]):
                yield from extend(pos + 1)
        colors[e] = 0

    yield from extend(0)


def colorings(g: DiagramGraph, top: str | None = None,
              bottom: str | None = None) -> list[Coloring]:
    """All proper colorings matching the boundary, sorted lexicographically."""
    return sorted(iter_colorings(g, top, bottom))


def colorings_exhaustive(g: DiagramGraph, top: str | None = None,
                         bottom: str | None = None) -> list[Coloring]:
    """Check every one of the 3**E assignments; only for tiny graphs."""
    out = []
    for colors in itertools.product((1, 2, 3), repeat=g.num_edges):
        if top is not None and any(colors[e] != int(c) for e, c in zip(g.top, top)):
            continue
        if bottom is not None and any(colors[e] != int(c) for e, c in zip(g.bottom, bottom)):
            continue
        if all(len(set(v.edges)) == 3 and _vertex_ok(v, list(colors)) for v in g.vertices):
            out.append(colors)
    return out


def coloring_sign(g: DiagramGraph, c: Coloring) -> int:
    """(-1) to the number of crossings between differently colored edges."""
    odd = sum(1 for a, b in g.crossings if c[a] != c[b]) % 2
    return -1 if odd else 1


def oracle_chi(g: DiagramGraph, top: str, bottom: str, signed: bool = False) -> int:
    if signed:
        return sum(coloring_sign(g, c) for c in iter_colorings(g, top, bottom))
    return sum(1 for _ in iter_colorings(g, top, bottom))


def oracle_table(g: DiagramGraph, signed: bool = False) -> dict[tuple[str, str], int]:
    """All non-zero boundary coefficients from one unconstrained enumeration."""
    out: dict[tuple[str, str], int] = {}
    for c in iter_colorings(g):
        key = ("".join(str(c[e]) for e in g.top), "".join(str(c[e]) for e in g.bottom))
        out[key] = out.get(key, 0) + (coloring_sign(g, c) if signed else 1)
    return {k: v for k, v in sorted(out.items()) if v}
