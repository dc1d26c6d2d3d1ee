"""Bracket-notation parser and printer.

Grammar (whitespace between tokens is ignored):

    params   := "{" int ";" "(" eps "," nat "," "(" nat "," nat ")" ")"
                ";" "(" natlist "|" natlist ")" ";" pairlist? "}"
    eps      := "o" | "o1" | "o2" | "n" | "n1" | "n2" | "n3" | "n4"
    natlist  := <empty> | nat ("," nat)*
    pairlist := "(" pair ("," pair)* ")"
    pair     := "(" int "," int ")"

``format_params`` emits the canonical spelling (no whitespace), so
``parse_params(format_params(x)) == x`` for every valid x.
"""
from __future__ import annotations

from .core import Epsilon, SeifertParams

_DIGITS = "0123456789"
_EPS_CHARS = "on1234"


class ParseError(ValueError):
    """Syntax error, carrying the 0-based offset of the offending input."""

    def __init__(self, pos: int, message: str):
        super().__init__(f"parse error at position {pos}: {message}")
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        got = self.peek()
        if got != ch:
            shown = repr(got) if got else "end of input"
            raise ParseError(self.pos, f"expected {ch!r}, found {shown}")
        self.pos += 1

    def integer(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        first_digit = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if self.pos == first_digit:
            raise ParseError(start, "expected an integer")
        return int(self.text[start:self.pos])

    def natural(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if self.pos == start:
            raise ParseError(start, "expected a non-negative integer")
        return int(self.text[start:self.pos])

    def epsilon(self) -> Epsilon:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _EPS_CHARS:
            self.pos += 1
        word = self.text[start:self.pos]
        try:
            return Epsilon(word)
        except ValueError:
            raise ParseError(
                start,
                f"unknown symbol {word!r}; expected one of "
                "o, o1, o2, n, n1, n2, n3, n4") from None

    def natural_list(self, terminator: str) -> tuple[int, ...]:
        if self.peek() == terminator:
            return ()
        values = [self.natural()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.natural())
        return tuple(values)

    def pair(self) -> tuple[int, int]:
        self.expect("(")
        p = self.integer()
        self.expect(",")
        q = self.integer()
        self.expect(")")
        return (p, q)

    def pair_list(self) -> tuple[tuple[int, int], ...]:
        self.expect("(")
        pairs = [self.pair()]
        while self.peek() == ",":
            self.pos += 1
            pairs.append(self.pair())
        self.expect(")")
        return tuple(pairs)

    def finish(self) -> None:
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError(self.pos, "unexpected trailing input")


def parse_params(text: str) -> SeifertParams:
    """Parse bracket notation into a (structurally faithful, unvalidated)
    parameter set."""
    s = _Scanner(text)
    s.expect("{")
    b = s.integer()
    s.expect(";")
    s.expect("(")
    eps = s.epsilon()
    s.expect(",")
    g = s.natural()
    s.expect(",")
    s.expect("(")
    t = s.natural()
    s.expect(",")
    k = s.natural()
    s.expect(")")
    s.expect(")")
    s.expect(";")
    s.expect("(")
    hplus = s.natural_list("|")
    s.expect("|")
    kminus = s.natural_list(")")
    s.expect(")")
    s.expect(";")
    pairs: tuple[tuple[int, int], ...] = ()
    if s.peek() == "(":
        pairs = s.pair_list()
    s.expect("}")
    s.finish()
    return SeifertParams(b, eps, g, t, k, hplus, kminus, pairs)


def format_params(params: SeifertParams) -> str:
    """Canonical bracket spelling: no whitespace, empty pair list omitted."""
    hplus = ",".join(str(h) for h in params.hplus)
    kminus = ",".join(str(kj) for kj in params.kminus)
    pairs = ""
    if params.pairs:
        pairs = "(" + ",".join(f"({p},{q})" for p, q in params.pairs) + ")"
    return (f"{{{params.b};({params.epsilon.value},{params.g},"
            f"({params.t},{params.k}));({hplus}|{kminus});{pairs}}}")
