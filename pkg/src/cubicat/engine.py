"""Exact evaluation of the coloring functors F and F~.

Both functors send ``n`` strands to the ``n``-fold tensor power of a
3-dimensional space with basis ``e1, e2, e3``.  A basis vector of the power
is written as a color string such as ``"112"`` (leftmost strand first).
Operator entries are plain Python integers, so nothing overflows; the inner
sweep runs on numpy arrays and switches from ``int64`` to ``object`` dtype
as soon as a coefficient bound could leave the machine range.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .errors import ArityMismatch, NotClosed, WidthLimitExceeded, WidthMismatch
from .slices import SliceForm, to_slices
from .term import GeneratorKind, Term

COLORS = (1, 2, 3)
DEFAULT_WIDTH_LIMIT = 14

# largest batch * 3**width the sweep holds in memory at once
_CHUNK_ENTRIES = 1 << 22
_INT64_SAFE = 1 << 62


class Variant(enum.Enum):
    PLAIN = "F"
    SIGNED = "Ftilde"


def _variant(v: Variant | str) -> Variant:
    return v if isinstance(v, Variant) else Variant(v)


@lru_cache(maxsize=None)
def color_strings(width: int) -> tuple[str, ...]:
    """All color strings of a given length in basis-index order."""
    return tuple("".join(p) for p in itertools.product("123", repeat=width))


def color_index(colors: str) -> int:
    idx = 0
    for c in colors:
        if c not in "123":
            raise ValueError(f"invalid color string {colors!r}")
        idx = 3 * idx + int(c) - 1
    return idx


def color_sum(colors: str | Iterable[int]) -> int:
    """Sum of colors in the Klein four-group, colors read as elements of F4.

    With 1, 2, 3 as the non-zero elements, addition is bitwise xor.

    >>> color_sum("313")
    1
    """
    total = 0
    for c in colors:
        total ^= int(c)
    return total


@dataclass
class State:
    """Sparse vector in the ``width``-fold tensor power."""

    width: int
    coeffs: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: int(v) for k, v in sorted(self.coeffs.items()) if v}
        for k in self.coeffs:
            if len(k) != self.width:
                raise WidthMismatch(f"color string {k!r} on a state of width {self.width}")

    @classmethod
    def basis(cls, colors: str) -> "State":
        return cls(len(colors), {colors: 1})

    def __getitem__(self, colors: str) -> int:
        return self.coeffs.get(colors, 0)

    def dot(self, other: "State") -> int:
        if self.width != other.width:
            raise WidthMismatch(f"{self.width} != {other.width}")
        return sum(v * other[k] for k, v in self.coeffs.items())

    def __add__(self, other: "State") -> "State":
        if self.width != other.width:
            raise WidthMismatch(f"{self.width} != {other.width}")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return State(self.width, out)


@dataclass
class OperatorTable:
    """Sparse integer matrix ``(in colors, out colors) -> value``."""

    dom: int
    cod: int
    entries: dict[tuple[str, str], int] = field(default_factory=dict)
    variant: Variant | None = None

    def __post_init__(self):
        self.entries = {k: int(v) for k, v in sorted(self.entries.items()) if v}

    def __getitem__(self, key: tuple[str, str]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, OperatorTable):
            return NotImplemented
        return operator_equal(self, other)

    def column(self, colors: str) -> State:
        return State(self.cod, {o: v for (i, o), v in self.entries.items() if i == colors})

    def transpose(self) -> "OperatorTable":
        return OperatorTable(self.cod, self.dom,
                             {(o, i): v for (i, o), v in self.entries.items()}, self.variant)

    def scaled(self, c: int) -> "OperatorTable":
        return OperatorTable(self.dom, self.cod,
                             {k: c * v for k, v in self.entries.items()}, self.variant)

    def is_zero(self) -> bool:
        return not self.entries

    def to_json(self) -> dict:
        return {
            "domain": self.dom,
            "codomain": self.cod,
            "variant": self.variant.value if self.variant else None,
            "entries": [{"in": i, "out": o, "value": str(v)}
                        for (i, o), v in self.entries.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "OperatorTable":
        variant = Variant(data["variant"]) if data.get("variant") else None
        entries = {(e["in"], e["out"]): int(e["value"]) for e in data["entries"]}
        return cls(int(data["domain"]), int(data["codomain"]), entries, variant)


def operator_equal(a: OperatorTable, b: OperatorTable) -> bool:
    return a.dom == b.dom and a.cod == b.cod and a.entries == b.entries


def identity_table(width: int, scale: int = 1) -> OperatorTable:
    return OperatorTable(width, width, {(c, c): scale for c in color_strings(width)})


def compose_tables(first: OperatorTable, then: OperatorTable) -> OperatorTable:
    """Table of ``then`` after ``first`` (sparse matrix product)."""
    if first.cod != then.dom:
        raise ArityMismatch(f"cannot compose {first.dom}->{first.cod} with {then.dom}->{then.cod}")
    rows: dict[str, list[tuple[str, int]]] = {}
    for (i, o), v in then.entries.items():
        rows.setdefault(i, []).append((o, v))
    out: dict[tuple[str, str], int] = {}
    for (i, mid), v in first.entries.items():
        for o, w in rows.get(mid, ()):
            out[i, o] = out.get((i, o), 0) + v * w
    return OperatorTable(first.dom, then.cod, out)


def kron_tables(left: OperatorTable, right: OperatorTable) -> OperatorTable:
    out = {}
    for (i1, o1), v1 in left.entries.items():
        for (i2, o2), v2 in right.entries.items():
            out[i1 + i2, o1 + o2] = v1 * v2
    return OperatorTable(left.dom + right.dom, left.cod + right.cod, out)


def _local_entries(kind: GeneratorKind, variant: Variant) -> dict[tuple[str, str], int]:
    perms = list(itertools.permutations("123"))
    if kind is GeneratorKind.ID:
        return {(c, c): 1 for c in "123"}
    if kind is GeneratorKind.CAP:
        return {("", c + c): 1 for c in "123"}
    if kind is GeneratorKind.CUP:
        return {(c + c, ""): 1 for c in "123"}
    if kind is GeneratorKind.LAMBDA:
        return {(i, j + k): 1 for i, j, k in perms}
    if kind is GeneratorKind.LAMBDA_PLUS:
        return {("1", "23"): 1, ("2", "31"): 1, ("3", "12"): 1}
    if kind is GeneratorKind.LAMBDA_MINUS:
        return {("2", "13"): 1, ("1", "32"): 1, ("3", "21"): 1}
    if kind is GeneratorKind.Y:
        return {(i + j, k): 1 for i, j, k in perms}
    if kind is GeneratorKind.X:
        if variant is Variant.PLAIN:
            return {(i + j, j + i): 1 for i in "123" for j in "123"}
        return {(i + j, j + i): (1 if i == j else -1) for i in "123" for j in "123"}
    raise ValueError(kind)


def local_map(kind: GeneratorKind | str, variant: Variant | str = Variant.PLAIN) -> OperatorTable:
    """The table a single generator is sent to."""
    kind, variant = GeneratorKind(kind), _variant(variant)
    m, n = kind.arity
    return OperatorTable(m, n, _local_entries(kind, variant), variant)


@lru_cache(maxsize=None)
def _local_matrix(kind: GeneratorKind, variant: Variant) -> tuple[np.ndarray, int]:
    """Transposed dense matrix (out index, in index) and its column L1 bound."""
    m, n = kind.arity
    mat = np.zeros((3 ** n, 3 ** m), dtype=np.int64)
    for (i, o), v in _local_entries(kind, variant).items():
        mat[color_index(o), color_index(i)] = v
    bound = int(np.abs(mat).sum(axis=0).max())
    mat.setflags(write=False)
    return mat, bound


def _sweep(slices: SliceForm, data: np.ndarray, variant: Variant, bound: int) -> np.ndarray:
    """Push a batch of column vectors (rows of ``data``) through all layers."""
    batch = data.shape[0]
    for before, layer in zip(slices.widths, slices.layers):
        width = before
        for kind, offset in reversed(layer):
            mat, factor = _local_matrix(kind, variant)
            bound *= factor
            if data.dtype != object and bound >= _INT64_SAFE:
                data = data.astype(object)
            m, n = kind.arity
            left, right = 3 ** offset, 3 ** (width - offset - m)
            op = mat if data.dtype != object else mat.astype(object)
            data = np.matmul(op, data.reshape(batch * left, 3 ** m, right))
            width += n - m
            data = data.reshape(batch, 3 ** width)
    return data


def _check_width(slices: SliceForm, width_limit: int):
    if slices.max_width > width_limit:
        raise WidthLimitExceeded(
            f"intermediate width {slices.max_width} exceeds limit {width_limit}")


def _as_slices(t: Term | SliceForm) -> SliceForm:
    return t if isinstance(t, SliceForm) else to_slices(t)


def apply(slices: SliceForm, state: State, variant: Variant | str = Variant.PLAIN,
          width_limit: int = DEFAULT_WIDTH_LIMIT) -> State:
    """Apply the layers of ``slices`` to a sparse state, top to bottom."""
    variant = _variant(variant)
    if state.width != slices.dom:
        raise WidthMismatch(f"state has {state.width} strands, diagram expects {slices.dom}")
    _check_width(slices, width_limit)
    big = any(abs(v) >= _INT64_SAFE for v in state.coeffs.values())
    data = np.zeros((1, 3 ** state.width), dtype=object if big else np.int64)
    for k, v in state.coeffs.items():
        data[0, color_index(k)] = v
    bound = sum(abs(v) for v in state.coeffs.values())
    out = _sweep(slices, data, variant, bound)[0]
    names = color_strings(slices.cod)
    return State(slices.cod, {names[i]: int(out[i]) for i in np.flatnonzero(out)})


def evaluate(t: Term | SliceForm, variant: Variant | str = Variant.PLAIN,
             width_limit: int = DEFAULT_WIDTH_LIMIT) -> OperatorTable:
    """Full operator table of a term: every domain basis vector swept at once.

    >>> from cubicat.dsl import parse
    >>> evaluate(parse("lam ; y")).entries
    {('1', '1'): 2, ('2', '2'): 2, ('3', '3'): 2}
    """
    variant = _variant(variant)
    slices = _as_slices(t)
    _check_width(slices, width_limit)
    m, n = slices.dom, slices.cod
    ins, outs = color_strings(m), color_strings(n)
    chunk = max(1, _CHUNK_ENTRIES // 3 ** slices.max_width)
    entries = {}
    for start in range(0, 3 ** m, chunk):
        stop = min(3 ** m, start + chunk)
        data = np.zeros((stop - start, 3 ** m), dtype=np.int64)
        data[np.arange(stop - start), np.arange(start, stop)] = 1
        out = _sweep(slices, data, variant, 1)
        for r, c in zip(*np.nonzero(out)):
            entries[ins[start + r], outs[c]] = int(out[r, c])
    return OperatorTable(m, n, entries, variant)


def chi(t: Term | SliceForm, top: str, bottom: str, variant: Variant | str = Variant.PLAIN,
        width_limit: int = DEFAULT_WIDTH_LIMIT) -> int:
    """Single coefficient: (signed) number of colorings with the given ends."""
    slices = _as_slices(t)
    if len(top) != slices.dom or len(bottom) != slices.cod:
        raise WidthMismatch(
            f"boundary {top!r}/{bottom!r} does not fit arity {slices.dom}->{slices.cod}")
    color_index(bottom)
    return apply(slices, State.basis(top), variant, width_limit)[bottom]


def count(t: Term | SliceForm, width_limit: int = DEFAULT_WIDTH_LIMIT) -> int:
    """Number of edge 3-colorings of a closed diagram."""
    slices = _as_slices(t)
    if (slices.dom, slices.cod) != (0, 0):
        raise NotClosed(f"diagram has arity {slices.dom}->{slices.cod}, expected 0->0")
    return evaluate(slices, Variant.PLAIN, width_limit)["", ""]


def linear_combination(terms: Iterable[tuple[int, Term]], variant: Variant | str = Variant.PLAIN,
                       width_limit: int = DEFAULT_WIDTH_LIMIT) -> OperatorTable:
    """Integer-weighted sum of evaluations of terms of one arity."""
    variant = _variant(variant)
    terms = list(terms)
    if not terms:
        raise ValueError("empty combination has no arity")
    dom, cod = terms[0][1].dom, terms[0][1].cod
    out: dict[tuple[str, str], int] = {}
    for coeff, t in terms:
        if (t.dom, t.cod) != (dom, cod):
            raise ArityMismatch(f"term of arity {t.dom}->{t.cod} in a {dom}->{cod} combination")
        for k, v in evaluate(t, variant, width_limit).entries.items():
            out[k] = out.get(k, 0) + coeff * v
    return OperatorTable(dom, cod, out, variant)
