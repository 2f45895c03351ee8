"""Engine versus oracle comparison."""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import format
from .engine import DEFAULT_WIDTH_LIMIT, Variant, evaluate
from .oracle import diagram_graph, oracle_table
from .slices import to_slices
from .term import Term


@dataclass
class Mismatch:
    index: int
    term: str
    variant: Variant
    key: tuple[str, str]
    engine: int
    oracle: int

    def to_json(self) -> dict:
        return {"index": self.index, "term": self.term, "variant": self.variant.value,
                "in": self.key[0], "out": self.key[1],
                "engine": str(self.engine), "oracle": str(self.oracle)}


def compare_term(t: Term, index: int = 0, variants=(Variant.PLAIN, Variant.SIGNED),
                 width_limit: int = DEFAULT_WIDTH_LIMIT) -> list[Mismatch]:
    """First differing entry per variant, if any."""
    slices = to_slices(t)
    graph = diagram_graph(slices)
    out = []
    for variant in variants:
        table = evaluate(slices, variant, width_limit).entries
        truth = oracle_table(graph, signed=variant is Variant.SIGNED)
        if table != truth:
            key = min(k for k in set(table) | set(truth) if table.get(k, 0) != truth.get(k, 0))
            out.append(Mismatch(index, format(t), variant, key,
                                table.get(key, 0), truth.get(key, 0)))
    return out


def compare_corpus(terms: list[Term], width_limit: int = DEFAULT_WIDTH_LIMIT) -> dict:
    mismatches = []
    for i, t in enumerate(terms):
        mismatches.extend(compare_term(t, i, width_limit=width_limit))
    return {"terms": len(terms),
            "mismatches": [m.to_json() for m in mismatches],
            "pass": not mismatches}
