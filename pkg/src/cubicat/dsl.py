"""Text syntax for terms.

Grammar (whitespace-insensitive)::

    term := seq
    seq  := par (";" par)*
    par  := atom ("#" atom)*
    atom := "cap" | "cup" | "lam" | "lam+" | "lam-" | "y" | "x" | "id"
          | "id^" INT | "empty" | "(" term ")"

``#`` (tensor) binds tighter than ``;`` (top-to-bottom composition).  Both
operators associate to the left.
"""

from __future__ import annotations

import re

from .errors import ArityMismatch, DslSyntaxError
from .term import EMPTY, Compose, Empty, Gen, GeneratorKind, Tensor, Term, identity

_TOKEN = re.compile(r"\s*(?:(lam[+-]?|cap|cup|empty|id\^\d+|id|y|x)|([;#()]))")

_KEYWORDS = {k.value: k for k in GeneratorKind}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise DslSyntaxError(f"unexpected character {text[start]!r}", start)
        word = m.group(1) or m.group(2)
        start = m.start(1) if m.group(1) else m.start(2)
        end = m.end()
        # reject identifiers glued to a keyword, e.g. "capx"
        if m.group(1) and end < len(text) and (text[end].isalnum() or text[end] == "_"):
            raise DslSyntaxError(f"unknown word starting {text[start:end + 1]!r}", start)
        tokens.append((word, start))
        pos = end
    tokens.append(("", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def pos(self) -> int:
        return self.tokens[self.i][1]

    def advance(self) -> tuple[str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Term:
        t = self.seq()
        if self.peek() != "":
            raise DslSyntaxError(f"unexpected {self.peek()!r}", self.pos())
        return t

    def seq(self) -> Term:
        start = self.pos()
        t = self.par()
        while self.peek() == ";":
            self.advance()
            rhs = self.par()
            if t.cod != rhs.dom:
                snippet = self.text[start:self.pos()].strip()
                raise ArityMismatch(
                    f"cannot compose {t.dom}->{t.cod} with {rhs.dom}->{rhs.cod} in {snippet!r}",
                    snippet)
            t = Compose(t, rhs)
        return t

    def par(self) -> Term:
        t = self.atom()
        while self.peek() == "#":
            self.advance()
            t = Tensor(t, self.atom())
        return t

    def atom(self) -> Term:
        word, pos = self.advance()
        if word == "(":
            t = self.seq()
            if self.peek() != ")":
                raise DslSyntaxError("expected ')'", self.pos())
            self.advance()
            return t
        if word in _KEYWORDS:
            return Gen(_KEYWORDS[word])
        if word == "empty":
            return EMPTY
        if word.startswith("id^"):
            return identity(int(word[3:]))
        if word == "":
            raise DslSyntaxError("unexpected end of input", pos)
        raise DslSyntaxError(f"unexpected {word!r}", pos)


def parse(text: str) -> Term:
    """Parse DSL text into a term.

    >>> format(parse("cap ; cup"))
    '(cap ; cup)'
    """
    return _Parser(text).parse()


def format(t: Term) -> str:  # noqa: A001 - mirrors parse
    """Canonical, fully parenthesized text for ``t``."""
    if isinstance(t, Gen):
        return t.kind.value
    if isinstance(t, Empty):
        return "empty"
    if isinstance(t, Compose):
        return f"({format(t.first)} ; {format(t.then)})"
    return f"({format(t.left)} # {format(t.right)})"
