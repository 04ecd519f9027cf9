"""Text formats: Cayley tables, theta tables, solutions and construction data.

Cayley table::

    3 0          # n, optional identity index
    0 1 2
    1 1 1
    2 1 0

A theta table has the same layout without the identity. A solution file is
a keyed block::

    n 3
    identity 0
    mul
    0 1 2
    ...
    theta
    ...
    flags idempotent=1 involutive=0 nondegenerate=0 commutative=1 cocommutative=0

Lines starting with ``#`` and trailing ``# ...`` comments are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass

from .semigroup import FiniteSemigroup, MalformedTable, NotAssociative
from .solution import (FLAG_NAMES, NotASolution, PentagonSolution, classify)

__all__ = [
    "ParseError", "parse_cayley", "format_cayley", "parse_theta", "format_theta",
    "parse_solution", "format_solution", "ConstructionSpec", "parse_construction",
    "read_text",
]


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None, source="<input>"):
        where = source
        if line is not None:
            where += f":{line}"
            if col is not None:
                where += f":{col}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.col = col


def read_text(path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read file ({exc.strerror})", source=str(path)) from None


def _lines(text):
    """``(line_number, tokens)`` for every non-blank line, comments stripped."""
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield i, body.split()


def _int(tok, line, col, source):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col, source) from None


def _rows(lines, n, source, what="table"):
    rows = []
    for _ in range(n):
        try:
            ln, toks = next(lines)
        except StopIteration:
            raise ParseError(f"{what} ends after {len(rows)} of {n} rows", source=source) from None
        if len(toks) != n:
            raise ParseError(f"{what} row has {len(toks)} entries, expected {n}", ln, None, source)
        row = []
        for c, tok in enumerate(toks, start=1):
            v = _int(tok, ln, c, source)
            if not 0 <= v < n:
                raise ParseError(f"{what} entry {v} out of range 0..{n - 1}", ln, c, source)
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


def _header(lines, source, allow_identity=True):
    try:
        ln, toks = next(lines)
    except StopIteration:
        raise ParseError("empty input", source=source) from None
    if not 1 <= len(toks) <= (2 if allow_identity else 1):
        raise ParseError("header must be `n [identity]`" if allow_identity else "header must be `n`",
                         ln, None, source)
    n = _int(toks[0], ln, 1, source)
    if n < 1:
        raise ParseError("order must be positive", ln, 1, source)
    ident = None
    if len(toks) == 2:
        ident = _int(toks[1], ln, 2, source)
        if not 0 <= ident < n:
            raise ParseError(f"identity {ident} out of range", ln, 2, source)
    return n, ident


def _no_trailing(lines, source):
    for ln, _ in lines:
        raise ParseError("unexpected trailing content", ln, None, source)


def parse_cayley(text: str, source="<input>") -> FiniteSemigroup:
    """Parse a Cayley table; raises :class:`ParseError` or :class:`NotAssociative`."""
    lines = _lines(text)
    n, ident = _header(lines, source)
    rows = _rows(lines, n, source)
    _no_trailing(lines, source)
    try:
        return FiniteSemigroup(rows, ident)
    except NotAssociative:
        raise
    except (MalformedTable, ValueError) as exc:
        raise ParseError(str(exc), source=source) from None


def format_cayley(S: FiniteSemigroup) -> str:
    head = f"{S.n}" if S.identity is None else f"{S.n} {S.identity}"
    return head + "\n" + "".join(" ".join(map(str, r)) + "\n" for r in S.mul)


def parse_theta(text: str, n: int | None = None, source="<input>"):
    lines = _lines(text)
    m, _ = _header(lines, source, allow_identity=False)
    if n is not None and m != n:
        raise ParseError(f"theta is {m}x{m} but the semigroup has {n} elements", 1, 1, source)
    rows = _rows(lines, m, source, "theta")
    _no_trailing(lines, source)
    return rows


def format_theta(theta) -> str:
    return f"{len(theta)}\n" + "".join(" ".join(map(str, r)) + "\n" for r in theta)


def format_solution(sol: PentagonSolution) -> str:
    S = sol.semigroup
    flags = classify(sol)
    out = [f"n {S.n}"]
    if S.identity is not None:
        out.append(f"identity {S.identity}")
    out.append("mul")
    out += [" ".join(map(str, r)) for r in S.mul]
    out.append("theta")
    out += [" ".join(map(str, r)) for r in sol.theta]
    out.append("flags " + " ".join(f"{k}={int(v)}" for k, v in flags.as_dict().items()))
    return "\n".join(out) + "\n"


def parse_solution(text: str, source="<input>") -> PentagonSolution:
    """Parse a solution block; declared flags must match the recomputed ones."""
    lines = _lines(text)
    n = ident = None
    mul = theta = None
    declared = None
    for ln, toks in lines:
        key = toks[0]
        if key == "n" and len(toks) == 2:
            n = _int(toks[1], ln, 2, source)
            if n < 1:
                raise ParseError("order must be positive", ln, 2, source)
        elif key == "identity" and len(toks) == 2:
            ident = _int(toks[1], ln, 2, source)
        elif key in ("mul", "theta") and len(toks) == 1:
            if n is None:
                raise ParseError(f"`{key}` before `n`", ln, None, source)
            rows = _rows(lines, n, source, key)
            if key == "mul":
                mul = rows
            else:
                theta = rows
        elif key == "flags":
            declared = {}
            for c, tok in enumerate(toks[1:], start=2):
                name, _, val = tok.partition("=")
                if name not in FLAG_NAMES or val not in ("0", "1"):
                    raise ParseError(f"bad flag {tok!r}", ln, c, source)
                declared[name] = val == "1"
        else:
            raise ParseError(f"unexpected line starting with {key!r}", ln, None, source)
    if mul is None or theta is None:
        raise ParseError("solution needs both `mul` and `theta` blocks", source=source)
    if ident is not None and not 0 <= ident < n:
        raise ParseError(f"identity {ident} out of range", source=source)
    S = FiniteSemigroup(mul, ident)
    sol = PentagonSolution(S, theta)
    if declared is not None:
        actual = classify(sol).as_dict()
        for k, v in declared.items():
            if actual[k] != v:
                raise ParseError(f"declared flag {k}={int(v)} but recomputed {int(actual[k])}",
                                 source=source)
    return sol


@dataclass
class ConstructionSpec:
    """Parsed construction data; interpretation depends on ``kind``."""

    kind: str
    subsets: dict[str, tuple[int, ...]]
    maps: dict[str, dict[int, int]]
    n: int | None = None


CONSTRUCTION_KINDS = ("endomorphism", "constant", "variety", "clifford", "militaru",
                      "group", "monoid")


def parse_construction(text: str, source="<input>") -> ConstructionSpec:
    """Parse construction data.

    ::

        kind group
        K: 0 2
        R: 0 1
        mu:
        0 -> 0
        1 -> 1

    Subset lines are ``NAME: i j ...``; a line ``NAME:`` alone opens a map
    section of ``x -> y`` lines. Map sections are named ``gamma``, ``mu``,
    ``f``, ``g`` or ``theta e`` for the map attached to idempotent ``e``.
    """
    kind = None
    n = None
    subsets: dict[str, tuple[int, ...]] = {}
    maps: dict[str, dict[int, int]] = {}
    current = None
    for ln, toks in _lines(text):
        if "->" in toks:
            if current is None:
                raise ParseError("map line outside a map section", ln, None, source)
            if len(toks) != 3 or toks[1] != "->":
                raise ParseError("map lines look like `x -> y`", ln, None, source)
            x, y = _int(toks[0], ln, 1, source), _int(toks[2], ln, 3, source)
            if x in maps[current]:
                raise ParseError(f"{x} mapped twice in {current}", ln, 1, source)
            maps[current][x] = y
            continue
        head = " ".join(toks)
        if toks[0] == "kind":
            if len(toks) != 2 or toks[1] not in CONSTRUCTION_KINDS:
                raise ParseError(f"kind must be one of {', '.join(CONSTRUCTION_KINDS)}",
                                 ln, None, source)
            kind = toks[1]
            current = None
        elif toks[0] == "n" and len(toks) == 2:
            n = _int(toks[1], ln, 2, source)
        elif head.endswith(":") and ":" not in head[:-1]:
            current = head[:-1].strip()
            if current in maps:
                raise ParseError(f"map {current} defined twice", ln, None, source)
            maps[current] = {}
        elif ":" in toks[0]:
            name, _, rest = head.partition(":")
            subsets[name.strip()] = tuple(_int(t, ln, c, source)
                                          for c, t in enumerate(rest.split(), start=2))
            current = None
        else:
            raise ParseError(f"unexpected line {head!r}", ln, None, source)
    if kind is None:
        raise ParseError("missing `kind` line", source=source)
    return ConstructionSpec(kind, subsets, maps, n)


# re-exported for callers catching input errors in one place
InputErrors = (ParseError, NotAssociative, NotASolution, MalformedTable)
