"""Closed diagrams for named cubic graphs.

``closed_term`` draws any cubic multigraph as a closed term: vertices are
visited in order, pending edges run as strands, and crossings are inserted
wherever two strands have to be brought next to each other.
"""

from __future__ import annotations

from collections import defaultdict

from .term import GeneratorKind, Term, compose, generator, identity, tensor

CAP = generator(GeneratorKind.CAP)
CUP = generator(GeneratorKind.CUP)
LAM = generator(GeneratorKind.LAMBDA)
Y = generator(GeneratorKind.Y)
X = generator(GeneratorKind.X)


def _padded(before: int, g: Term, after: int) -> Term:
    parts = [p for p in (identity(before) if before else None, g,
                         identity(after) if after else None) if p is not None]
    return parts[0] if len(parts) == 1 else tensor(*parts)


def closed_term(edges: list[tuple[int, int]], order: list[int] | None = None) -> Term:
    """Closed term (0 -> 0) whose diagram graph is the given cubic multigraph.

    ``edges`` lists vertex pairs; parallel edges are allowed, loops are not.
    """
    incident: dict[int, list[int]] = defaultdict(list)
    for i, (u, v) in enumerate(edges):
        if u == v:
            raise ValueError("loops are not supported")
        incident[u].append(i)
        incident[v].append(i)
    if any(len(es) != 3 for es in incident.values()):
        raise ValueError("graph is not cubic")
    order = list(order) if order is not None else sorted(incident)
    strands: list[int] = []
    steps: list[Term] = []

    def bring_next_to(i: int, j: int) -> int:
        """Swap strand j leftwards until it sits right of strand i."""
        while j > i + 1:
            steps.append(_padded(j - 1, X, len(strands) - j - 1))
            strands[j - 1], strands[j] = strands[j], strands[j - 1]
            j -= 1
        return j

    for v in order:
        pending = [e for e in incident[v] if e in strands]
        new = [e for e in incident[v] if e not in strands]
        if not pending:
            w = len(strands)
            steps.append(_padded(w, CAP, 0))
            steps.append(_padded(w, LAM, 1))
            strands.extend(new)
        elif len(pending) == 1:
            k = strands.index(pending[0])
            steps.append(_padded(k, LAM, len(strands) - k - 1))
            strands[k:k + 1] = new
        else:
            i, j = sorted(strands.index(e) for e in pending[:2])
            bring_next_to(i, j)
            w = len(strands)
            steps.append(_padded(i, Y, w - i - 2))
            merged = new[0] if new else -1 - v
            strands[i:i + 2] = [merged]
            if len(pending) == 3:
                i, j = sorted((strands.index(merged), strands.index(pending[2])))
                bring_next_to(i, j)
                steps.append(_padded(i, CUP, len(strands) - i - 2))
                del strands[i:i + 2]
    assert not strands
    return steps[0] if len(steps) == 1 else compose(*steps)


THETA_EDGES = [(0, 1), (0, 1), (0, 1)]
K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
PETERSEN_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)
PRISM_EDGES = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]


def circle() -> Term:
    return compose(CAP, CUP)


def theta() -> Term:
    """Two vertices joined by three edges, drawn without crossings."""
    return compose(CAP, tensor(LAM, generator(GeneratorKind.ID)),
                   tensor(generator(GeneratorKind.ID), Y), CUP)


def k4() -> Term:
    return closed_term(K4_EDGES)


def petersen() -> Term:
    return closed_term(PETERSEN_EDGES)


def prism() -> Term:
    return closed_term(PRISM_EDGES)
