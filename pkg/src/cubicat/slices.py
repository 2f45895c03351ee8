"""Layered normal form of a term.

Each layer is a set of generators acting side by side on disjoint strand
intervals; between layers every strand passes straight through.  Identity
generators carry no information and are dropped, so a pure identity term has
no layers at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .term import Compose, Empty, Gen, GeneratorKind, Tensor, Term

Placement = tuple[GeneratorKind, int]
Layer = tuple[Placement, ...]


@dataclass(frozen=True)
class SliceForm:
    widths: tuple[int, ...]
    layers: tuple[Layer, ...]

    def __post_init__(self):
        if len(self.widths) != len(self.layers) + 1:
            raise ValueError("need exactly one more width than layers")
        for before, after, layer in zip(self.widths, self.widths[1:], self.layers):
            end = 0
            width = before
            for kind, offset in layer:
                m, n = kind.arity
                if offset < end or offset + m > before:
                    raise ValueError(f"generator {kind.value} at {offset} overlaps or overflows")
                end = offset + m
                width += n - m
            if width != after:
                raise ValueError(f"layer changes width {before}->{width}, recorded {after}")

    @property
    def dom(self) -> int:
        return self.widths[0]

    @property
    def cod(self) -> int:
        return self.widths[-1]

    @property
    def max_width(self) -> int:
        return max(self.widths)


def _compile(t: Term) -> tuple[list[int], list[list[Placement]]]:
    if isinstance(t, Gen):
        m, n = t.kind.arity
        if t.kind is GeneratorKind.ID:
            return [1], []
        return [m, n], [[(t.kind, 0)]]
    if isinstance(t, Empty):
        return [0], []
    if isinstance(t, Compose):
        w1, l1 = _compile(t.first)
        w2, l2 = _compile(t.then)
        return w1 + w2[1:], l1 + l2
    # Tensor: run both sides in parallel from the top, the shorter side idles
    # at its codomain once its layers are exhausted.
    wl, ll = _compile(t.left)
    wr, lr = _compile(t.right)
    depth = max(len(ll), len(lr))
    wl = wl + [wl[-1]] * (depth + 1 - len(wl))
    wr = wr + [wr[-1]] * (depth + 1 - len(wr))
    layers = []
    for i in range(depth):
        layer = list(ll[i]) if i < len(ll) else []
        shift = wl[i]
        if i < len(lr):
            layer.extend((kind, off + shift) for kind, off in lr[i])
        layers.append(layer)
    return [a + b for a, b in zip(wl, wr)], layers


def to_slices(t: Term) -> SliceForm:
    """Compile ``t`` into layers, packing independent generators side by side.

    >>> from cubicat.dsl import parse
    >>> to_slices(parse("cap ; cup"))
    SliceForm(widths=(0, 2, 0), layers=(((<GeneratorKind.CAP: 'cap'>, 0),), ((<GeneratorKind.CUP: 'cup'>, 0),)))
    """
    widths, layers = _compile(t)
    return SliceForm(tuple(widths), tuple(tuple(layer) for layer in layers))
