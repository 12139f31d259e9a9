"""Named graph families and the ``kind:params`` text grammar used by the CLI.

Grammar::

    path:N | cycle:N | complete:N | star:N | sun:N | empty:N
    kpartite:M1,M2,...
    join:<spec>+<spec>

The join operator splits on the first top-level ``+``; wrap an operand in
parentheses to nest joins on the left, e.g. ``join:(join:path:2+path:2)+path:3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import graph as G
from .errors import GraphParseError


@dataclass(frozen=True)
class Path:
    n: int

    def build(self):
        return G.make_path(self.n)

    def __str__(self):
        return f"path:{self.n}"


@dataclass(frozen=True)
class Cycle:
    n: int

    def build(self):
        return G.make_cycle(self.n)

    def __str__(self):
        return f"cycle:{self.n}"


@dataclass(frozen=True)
class Complete:
    n: int

    def build(self):
        return G.make_complete(self.n)

    def __str__(self):
        return f"complete:{self.n}"


@dataclass(frozen=True)
class Star:
    leaves: int

    def build(self):
        return G.make_star(self.leaves)

    def __str__(self):
        return f"star:{self.leaves}"


@dataclass(frozen=True)
class Sun:
    """Sun on ``2n`` vertices."""

    n: int

    def build(self):
        return G.make_sun(self.n)

    def __str__(self):
        return f"sun:{self.n}"


@dataclass(frozen=True)
class Empty:
    n: int

    def build(self):
        return G.make_empty(self.n)

    def __str__(self):
        return f"empty:{self.n}"


@dataclass(frozen=True)
class CompleteMultipartite:
    parts: tuple[int, ...]

    def build(self):
        return G.make_complete_multipartite(self.parts)

    def __str__(self):
        return "kpartite:" + ",".join(map(str, self.parts))


@dataclass(frozen=True)
class Join:
    left: "FamilySpec | G.Graph"
    right: "FamilySpec | G.Graph"

    def build(self):
        return G.join(_build(self.left), _build(self.right))

    def __str__(self):
        left = str(self.left)
        if isinstance(self.left, Join):
            left = f"({left})"
        return f"join:{left}+{self.right}"


FamilySpec = Union[Path, Cycle, Complete, Star, Sun, Empty, CompleteMultipartite, Join]

_SIMPLE = {
    "path": Path,
    "cycle": Cycle,
    "complete": Complete,
    "star": Star,
    "sun": Sun,
    "empty": Empty,
}


def _build(x):
    return x if isinstance(x, G.Graph) else x.build()


def _int(token: str, spec: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"bad integer {token!r} in family spec {spec!r}") from None


def _strip_parens(s: str) -> str:
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                return s
        s = s[1:-1].strip()
    return s


def parse_family(text: str) -> FamilySpec:
    spec = _strip_parens(text.strip())
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise GraphParseError(f"family spec {text!r} must look like kind:params")
    kind = kind.strip().lower()
    if kind in _SIMPLE:
        return _SIMPLE[kind](_int(rest.strip(), text))
    if kind == "kpartite":
        parts = tuple(_int(tok.strip(), text) for tok in rest.split(","))
        return CompleteMultipartite(parts)
    if kind == "join":
        depth = 0
        for i, ch in enumerate(rest):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "+" and depth == 0:
                return Join(parse_family(rest[:i]), parse_family(rest[i + 1:]))
        raise GraphParseError(f"join spec {text!r} needs two operands separated by '+'")
    raise GraphParseError(f"unknown family kind {kind!r}")


def build_family(spec: "FamilySpec | str") -> G.Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    return spec.build()
