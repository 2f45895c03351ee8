"""Morphisms of the category of cubic graphs with free ends, as terms.

A term is built from six generators (plus the two signed splittings
``lam+``/``lam-``) with two binary operations: vertical composition and
side-by-side tensor.  Composition is written top-to-bottom: in
``compose(a, b)`` the diagram ``a`` sits above ``b``.

>>> t = compose(generator(GeneratorKind.CAP), generator(GeneratorKind.CUP))
>>> t.dom, t.cod
(0, 0)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterator, Union

from .errors import ArityMismatch, UnsupportedAdjoint


class GeneratorKind(enum.Enum):
    CAP = "cap"
    CUP = "cup"
    LAMBDA = "lam"
    LAMBDA_PLUS = "lam+"
    LAMBDA_MINUS = "lam-"
    Y = "y"
    X = "x"
    ID = "id"

    @property
    def arity(self) -> tuple[int, int]:
        return _ARITY[self]

    @property
    def is_vertex(self) -> bool:
        return self in _VERTEX_KINDS


_ARITY = {
    GeneratorKind.CAP: (0, 2),
    GeneratorKind.CUP: (2, 0),
    GeneratorKind.LAMBDA: (1, 2),
    GeneratorKind.LAMBDA_PLUS: (1, 2),
    GeneratorKind.LAMBDA_MINUS: (1, 2),
    GeneratorKind.Y: (2, 1),
    GeneratorKind.X: (2, 2),
    GeneratorKind.ID: (1, 1),
}

_VERTEX_KINDS = frozenset({
    GeneratorKind.LAMBDA,
    GeneratorKind.LAMBDA_PLUS,
    GeneratorKind.LAMBDA_MINUS,
    GeneratorKind.Y,
})

_ADJOINT_KIND = {
    GeneratorKind.CAP: GeneratorKind.CUP,
    GeneratorKind.CUP: GeneratorKind.CAP,
    GeneratorKind.LAMBDA: GeneratorKind.Y,
    GeneratorKind.Y: GeneratorKind.LAMBDA,
    GeneratorKind.X: GeneratorKind.X,
    GeneratorKind.ID: GeneratorKind.ID,
}


@dataclass(frozen=True)
class Gen:
    kind: GeneratorKind
    dom: int = field(init=False, compare=False, repr=False)
    cod: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        dom, cod = self.kind.arity
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)


@dataclass(frozen=True)
class Empty:
    """The monoidal unit: the empty diagram ``0 -> 0``."""

    dom: int = field(default=0, init=False, compare=False, repr=False)
    cod: int = field(default=0, init=False, compare=False, repr=False)


@dataclass(frozen=True)
class Compose:
    first: "Term"
    then: "Term"
    dom: int = field(init=False, compare=False, repr=False)
    cod: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.first.cod != self.then.dom:
            raise ArityMismatch(
                f"cannot compose {self.first.dom}->{self.first.cod} "
                f"with {self.then.dom}->{self.then.cod}")
        object.__setattr__(self, "dom", self.first.dom)
        object.__setattr__(self, "cod", self.then.cod)


@dataclass(frozen=True)
class Tensor:
    left: "Term"
    right: "Term"
    dom: int = field(init=False, compare=False, repr=False)
    cod: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "dom", self.left.dom + self.right.dom)
        object.__setattr__(self, "cod", self.left.cod + self.right.cod)


Term = Union[Gen, Empty, Compose, Tensor]

EMPTY = Empty()


def generator(kind: GeneratorKind | str) -> Gen:
    return Gen(GeneratorKind(kind))


def compose(first: Term, then: Term, *rest: Term) -> Term:
    """Stack ``first`` above ``then`` (and any further terms below)."""
    return reduce(Compose, rest, Compose(first, then))


def tensor(left: Term, right: Term, *rest: Term) -> Term:
    return reduce(Tensor, rest, Tensor(left, right))


def identity(width: int) -> Term:
    """``width`` parallel strands; ``identity(0)`` is the empty diagram."""
    if width < 0:
        raise ValueError("width must be non-negative")
    if width == 0:
        return EMPTY
    strands = [generator(GeneratorKind.ID)] * width
    return reduce(Tensor, strands)


def arity(t: Term) -> tuple[int, int]:
    return t.dom, t.cod


def recompute_arity(t: Term) -> tuple[int, int]:
    """Arity recomputed bottom-up, ignoring the cached fields."""
    if isinstance(t, Gen):
        return t.kind.arity
    if isinstance(t, Empty):
        return 0, 0
    if isinstance(t, Compose):
        (m, k), (k2, n) = recompute_arity(t.first), recompute_arity(t.then)
        if k != k2:
            raise ArityMismatch(f"inner arity {k} != {k2}")
        return m, n
    (m1, n1), (m2, n2) = recompute_arity(t.left), recompute_arity(t.right)
    return m1 + m2, n1 + n2


def generators(t: Term) -> Iterator[GeneratorKind]:
    """Generator kinds of ``t`` in left-to-right, top-to-bottom tree order."""
    if isinstance(t, Gen):
        yield t.kind
    elif isinstance(t, Compose):
        yield from generators(t.first)
        yield from generators(t.then)
    elif isinstance(t, Tensor):
        yield from generators(t.left)
        yield from generators(t.right)


def size(t: Term) -> int:
    """Number of non-identity generators."""
    return sum(1 for k in generators(t) if k is not GeneratorKind.ID)


def is_planar(t: Term) -> bool:
    return all(k is not GeneratorKind.X for k in generators(t))


def adjoint(t: Term) -> Term:
    """Reflect ``t`` in a horizontal line.

    Swaps cap/cup and lam/y, reverses composition order and keeps tensor
    order.  Signed splittings have no reflected generator and are rejected.
    """
    if isinstance(t, Gen):
        if t.kind not in _ADJOINT_KIND:
            raise UnsupportedAdjoint(f"no adjoint generator for {t.kind.value}")
        return Gen(_ADJOINT_KIND[t.kind])
    if isinstance(t, Empty):
        return t
    if isinstance(t, Compose):
        return Compose(adjoint(t.then), adjoint(t.first))
    return Tensor(adjoint(t.left), adjoint(t.right))


def to_json(t: Term) -> dict:
    if isinstance(t, Gen):
        return {"op": "gen", "kind": t.kind.value}
    if isinstance(t, Empty):
        return {"op": "empty"}
    if isinstance(t, Compose):
        return {"op": "compose", "first": to_json(t.first), "then": to_json(t.then)}
    return {"op": "tensor", "left": to_json(t.left), "right": to_json(t.right)}


def from_json(data: dict) -> Term:
    op = data.get("op")
    if op == "gen":
        return Gen(GeneratorKind(data["kind"]))
    if op == "empty":
        return EMPTY
    if op == "compose":
        return Compose(from_json(data["first"]), from_json(data["then"]))
    if op == "tensor":
        return Tensor(from_json(data["left"]), from_json(data["right"]))
    raise ValueError(f"unknown term op {op!r}")
