"""Seeded random terms for cross-checking the engine against the oracle."""

from __future__ import annotations

import random

from .term import Compose, GeneratorKind, Tensor, Term, generator, identity

# relative weights of generator kinds in random terms
WEIGHTS = {
    GeneratorKind.CAP: 3,
    GeneratorKind.CUP: 3,
    GeneratorKind.LAMBDA: 4,
    GeneratorKind.LAMBDA_PLUS: 1,
    GeneratorKind.LAMBDA_MINUS: 1,
    GeneratorKind.Y: 4,
    GeneratorKind.X: 4,
}


def _bracket(rng: random.Random, parts: list[Term], op) -> Term:
    """Combine parts with a random binary bracketing."""
    if len(parts) == 1:
        return parts[0]
    cut = rng.randint(1, len(parts) - 1)
    return op(_bracket(rng, parts[:cut], op), _bracket(rng, parts[cut:], op))


def _row(rng: random.Random, width: int, placed: list[tuple[GeneratorKind, int]]) -> Term:
    """``placed`` generators (sorted, disjoint) padded with identities to ``width``."""
    parts: list[Term] = []
    pos = 0
    for kind, offset in placed:
        if offset > pos:
            parts.extend(_split_identity(rng, offset - pos))
        parts.append(generator(kind))
        pos = offset + kind.arity[0]
    if width > pos:
        parts.extend(_split_identity(rng, width - pos))
    if not parts:
        return identity(0)
    return _bracket(rng, parts, Tensor)


def _split_identity(rng: random.Random, k: int) -> list[Term]:
    if k > 1 and rng.random() < 0.5:
        cut = rng.randint(1, k - 1)
        return [identity(cut), identity(k - cut)]
    return [identity(k)]


def _choices(width: int, max_width: int) -> list[tuple[GeneratorKind, int]]:
    out = []
    for kind in WEIGHTS:
        m, n = kind.arity
        if width - m + n > max_width:
            continue
        out.extend((kind, off) for off in range(width - m + 1))
    return out


def random_term(rng: random.Random, max_width: int = 6, max_gens: int = 12,
                max_dom: int = 3) -> Term:
    """A well-typed random term with every intermediate width <= ``max_width``.

    Generators are inserted one row at a time at a uniformly chosen
    type-compatible position; some rows carry two generators side by side.
    The rows are then composed with a random bracketing.
    """
    width = rng.randint(0, min(max_dom, max_width))
    budget = rng.randint(1, max_gens)
    rows: list[Term] = []
    while budget > 0:
        options = _choices(width, max_width)
        if not options:
            break
        weights = [WEIGHTS[k] for k, _ in options]
        kind, off = rng.choices(options, weights)[0]
        placed = [(kind, off)]
        new_width = width - kind.arity[0] + kind.arity[1]
        if budget > 1 and rng.random() < 0.3:
            # a second generator strictly to the right of the first
            start = off + kind.arity[0]
            extra = [(k, o) for k, o in _choices(width, max_width)
                     if o >= start and new_width - k.arity[0] + k.arity[1] <= max_width]
            if extra:
                k2, o2 = rng.choices(extra, [WEIGHTS[k] for k, _ in extra])[0]
                placed.append((k2, o2))
                new_width += k2.arity[1] - k2.arity[0]
        rows.append(_row(rng, width, placed))
        width = new_width
        budget -= len(placed)
    if not rows:
        return identity(width) if width else generator(GeneratorKind.CAP)
    return _bracket(rng, rows, Compose)


def random_corpus(count: int, seed: int, max_width: int = 6, max_gens: int = 12) -> list[Term]:
    rng = random.Random(seed)
    return [random_term(rng, max_width, max_gens) for _ in range(count)]
