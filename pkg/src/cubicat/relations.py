"""Identities between diagrams, stored as data and checked exactly.

Every relation is a pair of integer combinations of terms written in the
DSL.  ``verify`` evaluates both sides and compares every table entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dsl import parse
from .engine import DEFAULT_WIDTH_LIMIT, OperatorTable, Variant, linear_combination
from .errors import ArityMismatch, VariantNotDeclared
from .term import Term, identity, tensor, compose

BOTH = frozenset({Variant.PLAIN, Variant.SIGNED})
SIGNED = frozenset({Variant.SIGNED})
PLAIN = frozenset({Variant.PLAIN})

Side = list[tuple[int, Term]]

H = "((lam # id) ; (id # y))"


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: tuple[tuple[int, Term], ...]
    rhs: tuple[tuple[int, Term], ...]
    variants: frozenset[Variant]
    note: str = ""

    def __post_init__(self):
        arities = {(t.dom, t.cod) for _, t in self.lhs + self.rhs}
        if len(arities) != 1:
            raise ArityMismatch(f"relation {self.name} mixes arities {sorted(arities)}")

    @property
    def arity(self) -> tuple[int, int]:
        t = self.lhs[0][1]
        return t.dom, t.cod


def relation(name: str, lhs, rhs, variants=BOTH, note: str = "") -> Relation:
    """Build a relation; each side is DSL text, a term, or a list of (coeff, term)."""

    def side(s) -> tuple[tuple[int, Term], ...]:
        if isinstance(s, str):
            return ((1, parse(s)),)
        if isinstance(s, (list, tuple)):
            return tuple((c, parse(t) if isinstance(t, str) else t) for c, t in s)
        return ((1, s),)

    return Relation(name, side(lhs), side(rhs), frozenset(variants), note)


def interchange(name: str, f: Term, g: Term) -> list[Relation]:
    """``f # g`` against both sliding orders of ``f`` and ``g``."""
    k, l_ = f.dom, f.cod
    m, n = g.dom, g.cod
    slide_g_first = compose(tensor(identity(k), g) if k else g, tensor(f, identity(n)) if n else f)
    slide_f_first = compose(tensor(f, identity(m)) if m else f, tensor(identity(l_), g) if l_ else g)
    return [
        relation(f"{name}a", tensor(f, g), slide_g_first),
        relation(f"{name}b", tensor(f, g), slide_f_first),
    ]


def catalog() -> list[Relation]:
    rels = [
        relation("R1a", "(id # cap) ; (cup # id)", "id", note="zig-zag"),
        relation("R1b", "(cap # id) ; (id # cup)", "id", note="zig-zag"),
        relation("R2", "(id # cap) ; (x # id)", "(cap # id) ; (id # x)", note="crossing slides over a cap"),
        relation("R3", "x ; cup", "cup"),
        relation("R4", "x ; x", "id # id"),
        relation("R5", "(id # x) ; (x # id) ; (id # x)", "(x # id) ; (id # x) ; (x # id)", note="braid"),
        relation("R6", "cap ; (lam # id)", "cap ; (id # lam)", note="vertex turned around a cap"),
        relation("R7a", "(id # cap) ; (y # id)", "lam", note="y bent by a cap is lam"),
        relation("R7b", "(cap # id) ; (id # y)", "lam", note="y bent by a cap is lam"),
        relation("R8", "x ; (id # lam) ; (x # id)", "(lam # id) ; (id # x)", note="vertex slides under a strand"),
    ]
    for name, f, g in [
        ("INT1", "lam", "y"),
        ("INT2", "cap", "x"),
        ("INT3", "cup", "lam"),
        ("INT4", "x", "y"),
        ("INT5", "lam+", "cup"),
    ]:
        rels.extend(interchange(name, parse(f), parse(g)))
    rels += [
        relation("PEN", "y ; lam", [(1, "id # id"), (-1, "x")], SIGNED,
                 note="Penrose: double vertex = identity - crossing"),
        relation("IHX", "y ; lam", [(1, H), (-1, f"x ; {H}")], SIGNED,
                 note="vertical = horizontal - crossed horizontal"),
        relation("TWIST", "lam ; x", [(-1, "lam")], SIGNED,
                 note="crossing the two legs of a vertex negates it"),
        relation("SIGNREASSOC1", "lam+ ; (id # lam+)", "lam- ; (lam- # id)", PLAIN),
        relation("SIGNREASSOC2", "lam- ; (id # lam-)", "lam+ ; (lam+ # id)", PLAIN),
        relation("DECOMP", "lam", [(1, "lam+"), (1, "lam-")], PLAIN),
    ]
    return rels


def lookup(name: str, rels: list[Relation] | None = None) -> Relation:
    for r in rels if rels is not None else catalog():
        if r.name == name:
            return r
    raise KeyError(name)


@dataclass
class VerificationResult:
    name: str
    variant: Variant
    passed: bool
    # first differing entry: (in, out, lhs value, rhs value)
    mismatch: tuple[str, str, int, int] | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.mismatch:
            i, o, a, b = self.mismatch
            out["mismatch"] = {"in": i, "out": o, "lhs": str(a), "rhs": str(b)}
        return out


def _first_difference(a: OperatorTable, b: OperatorTable):
    for key in sorted(set(a.entries) | set(b.entries)):
        if a[key] != b[key]:
            return (*key, a[key], b[key])
    return None


def verify(r: Relation, variant: Variant | str, strict: bool = True,
           width_limit: int = DEFAULT_WIDTH_LIMIT) -> VerificationResult:
    """Check ``r`` entrywise under one functor.

    With ``strict`` (the default) a variant the relation was not declared for
    raises ``VariantNotDeclared``; otherwise the comparison is just run.
    """
    variant = Variant(variant)
    if strict and variant not in r.variants:
        raise VariantNotDeclared(f"{r.name} is not declared for {variant.value}")
    lhs = linear_combination(r.lhs, variant, width_limit)
    rhs = linear_combination(r.rhs, variant, width_limit)
    diff = _first_difference(lhs, rhs)
    return VerificationResult(r.name, variant, diff is None, diff)


@dataclass
class Report:
    variant: Variant
    results: list[VerificationResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def warning(self) -> bool:
        """Set when nothing was checked, so a vacuous pass is visible."""
        return not self.results

    def to_json(self) -> dict:
        out = {"variant": self.variant.value,
               "results": [r.to_json() for r in self.results],
               "pass": self.passed}
        if self.warning:
            out["warning"] = "no relations declared for this variant"
        return out


def verify_all(variant: Variant | str, rels: list[Relation] | None = None,
               width_limit: int = DEFAULT_WIDTH_LIMIT) -> Report:
    variant = Variant(variant)
    rels = catalog() if rels is None else rels
    return Report(variant, [verify(r, variant, width_limit=width_limit)
                            for r in rels if variant in r.variants])
