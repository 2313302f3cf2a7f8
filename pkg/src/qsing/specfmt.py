"""Plain-text group-spec files.

Layout (``#`` starts a comment, blank lines are ignored)::

    cyclotomic_order 4
    dimension 2
    generator
    z, 0
    0, z^3
    end

Entries use ``z`` for zeta_m and the grammar::

    expr  := term { ("+" | "-") term }
    term  := coeff [ "*" power ] | power
    coeff := ["-"] int [ "/" int ]
    power := "z" [ "^" int ]

A leading ``-`` directly before ``z`` is also accepted on input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cyclotomic import Cyclotomic, format_expression, reduce
from .linalg import CycMatrix

__all__ = ["GroupSpec", "SpecError", "parse_spec", "emit_spec", "format_entry", "parse_entry"]

_DIGITS = frozenset("0123456789")
_INT_RE = re.compile(r"-?[0-9]+")


class SpecError(ValueError):
    """Malformed spec text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class GroupSpec:
    cyclotomic_order: int
    dimension: int
    generators: tuple[CycMatrix, ...]

    def __post_init__(self):
        if self.cyclotomic_order < 1:
            raise ValueError("cyclotomic_order must be >= 1")
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if not self.generators:
            raise ValueError("at least one generator is required")
        for g in self.generators:
            if g.dim != self.dimension or g.ambient_order != self.cyclotomic_order:
                raise ValueError("generator shape or order does not match the header")

    @classmethod
    def from_group(cls, group) -> "GroupSpec":
        return cls(group.ambient_order, group.dim, tuple(group.generator_matrices))


# -- entry expressions ------------------------------------------------------


class _Lexer:
    def __init__(self, text: str, line: int, col0: int):
        self.text = text
        self.pos = 0
        self.line = line
        self.col0 = col0

    def column(self, pos=None) -> int:
        return self.col0 + (self.pos if pos is None else pos)

    def error(self, message: str, pos=None) -> SpecError:
        return SpecError(message, self.line, self.column(pos))

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of entry"
            raise self.error(f"expected {what}, found {found!r}", start)
        return int(self.text[start : self.pos])


def _parse_power(lx: _Lexer) -> int:
    if not lx.take("z"):
        raise lx.error(f"expected 'z', found {lx.peek() or 'end of entry'!r}")
    if lx.take("^"):
        return lx.integer("exponent")
    return 1


def _parse_term(lx: _Lexer) -> tuple[Fraction, int]:
    ch = lx.peek()
    if ch == "z":
        return Fraction(1), _parse_power(lx)
    neg = lx.take("-")
    if neg and lx.peek() == "z":
        return Fraction(-1), _parse_power(lx)
    num = lx.integer("integer coefficient")
    den = 1
    if lx.take("/"):
        pos = lx.pos
        den = lx.integer("denominator")
        if den == 0:
            raise lx.error("zero denominator", pos)
    coeff = Fraction(-num if neg else num, den)
    if lx.take("*"):
        return coeff, _parse_power(lx)
    return coeff, 0


def parse_entry(text: str, m: int, line: int = 1, column: int = 1) -> Cyclotomic:
    """Parse one entry expression into Q(zeta_m)."""
    lx = _Lexer(text, line, column)
    if not lx.peek():
        raise lx.error("empty entry")
    raw: dict[int, Fraction] = {}
    sign = 1
    while True:
        c, k = _parse_term(lx)
        raw[k % m] = raw.get(k % m, Fraction(0)) + sign * c
        ch = lx.peek()
        if not ch:
            break
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            raise lx.error(f"unexpected character {ch!r}")
        lx.pos += 1
        if not lx.peek():
            raise lx.error("expression ends after an operator")
    return reduce(raw, m)


format_entry = format_expression


# -- whole files ------------------------------------------------------------


def _strip(raw: str) -> str:
    i = raw.find("#")
    return (raw if i < 0 else raw[:i]).rstrip()


def _keyword_int(text: str, keyword: str, lineno: int) -> int:
    body = text.strip()
    col = len(text) - len(text.lstrip()) + 1
    parts = body.split()
    if not parts or parts[0] != keyword:
        found = parts[0] if parts else ""
        raise SpecError(f"expected '{keyword} <integer>', found {found!r}", lineno, col)
    if len(parts) != 2:
        raise SpecError(f"'{keyword}' takes exactly one integer", lineno, col)
    value = parts[1]
    vcol = col + body.index(value, len(keyword))
    if not _INT_RE.fullmatch(value):
        raise SpecError(f"'{keyword}' value {value!r} is not an integer", lineno, vcol)
    n = int(value)
    if n < 1:
        raise SpecError(f"{keyword} must be >= 1, got {n}", lineno, vcol)
    return n


def parse_spec(text: Union[str, bytes]) -> GroupSpec:
    """Parse group-spec text; raises :class:`SpecError` with a position."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecError(f"input is not valid UTF-8 ({exc.reason})", 1) from None
    lines = [
        (i, _strip(raw.rstrip("\r")))
        for i, raw in enumerate(text.split("\n"), start=1)
    ]
    lines = [(i, s) for i, s in lines if s.strip()]
    last = len(text.split("\n"))
    if not lines:
        raise SpecError("empty spec: expected 'cyclotomic_order <integer>'", 1)
    m = _keyword_int(lines[0][1], "cyclotomic_order", lines[0][0])
    if len(lines) < 2:
        raise SpecError("missing 'dimension <integer>' line", last)
    n = _keyword_int(lines[1][1], "dimension", lines[1][0])
    gens = []
    pos = 2
    while pos < len(lines):
        lineno, s = lines[pos]
        if s.strip() != "generator":
            col = len(s) - len(s.lstrip()) + 1
            raise SpecError(f"expected 'generator', found {s.strip()!r}", lineno, col)
        start = lineno
        pos += 1
        rows = []
        while True:
            if pos >= len(lines):
                raise SpecError(f"generator opened at line {start} has no 'end'", last)
            lineno, s = lines[pos]
            pos += 1
            if s.strip() == "end":
                break
            if s.strip() == "generator":
                raise SpecError(f"generator opened at line {start} has no 'end'", lineno)
            if len(rows) == n:
                raise SpecError(
                    f"generator opened at line {start} has more than {n} rows", lineno
                )
            rows.append(_parse_row(s, n, m, lineno))
        if len(rows) != n:
            raise SpecError(
                f"generator opened at line {start} has {len(rows)} rows, expected {n}",
                lineno,
            )
        gens.append(CycMatrix(rows, m))
    if not gens:
        raise SpecError("no generator blocks", last)
    return GroupSpec(m, n, tuple(gens))


def _parse_row(s: str, n: int, m: int, lineno: int) -> list[Cyclotomic]:
    cells = s.split(",")
    if len(cells) != n:
        raise SpecError(f"row length mismatch at line {lineno}: {len(cells)} entries, expected {n}", lineno)
    out = []
    col = 1
    for cell in cells:
        out.append(parse_entry(cell, m, lineno, col))
        col += len(cell) + 1
    return out


def emit_spec(spec: GroupSpec) -> str:
    lines = [f"cyclotomic_order {spec.cyclotomic_order}", f"dimension {spec.dimension}"]
    for g in spec.generators:
        lines.append("generator")
        for row in g.rows:
            lines.append(", ".join(format_entry(x) for x in row))
        lines.append("end")
    return "\n".join(lines) + "\n"
