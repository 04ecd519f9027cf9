"""Finite semigroups and monoids given by Cayley tables.

Elements are the indices ``0..n-1``. A :class:`FiniteSemigroup` is immutable
and validated on construction (closure and associativity), so every value of
the type that exists is a genuine semigroup.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MalformedTable", "NotAssociative", "DomainError", "NotACongruence",
    "FiniteSemigroup", "ElementMap", "Congruence",
    "check_associativity", "find_identity", "idempotents", "idempotent_leq",
    "principal_structures", "local_group", "has_central_idempotents", "center",
    "is_clifford", "is_cancellative", "is_group", "right_units", "left_units",
    "isomorphisms", "automorphisms", "is_homomorphism", "kernel_congruence",
    "quotient", "canonical_table", "enumerate_semigroups", "in_variety_S",
    "is_commutative", "DEFAULT_ORDER_CAP",
]

DEFAULT_ORDER_CAP = 4

Table = tuple[tuple[int, ...], ...]


class MalformedTable(ValueError):
    """A table is not square or has entries outside ``0..n-1``."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class NotAssociative(ValueError):
    def __init__(self, triple):
        x, y, z = triple
        super().__init__(f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})")
        self.triple = triple


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class NotACongruence(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _as_table(table: Sequence[Sequence[int]]) -> Table:
    rows = tuple(tuple(int(v) for v in row) for row in table)
    n = len(rows)
    if n == 0:
        raise MalformedTable("empty table")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}", row=i)
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTable(f"entry ({i},{j}) = {v} out of range 0..{n - 1}",
                                     row=i, col=j)
    return rows


def check_associativity(table: Sequence[Sequence[int]]):
    """Return ``(True, None)`` or ``(False, (x, y, z))`` for the first failing triple.

    Triples are scanned in lexicographic order.
    """
    m = _as_table(table)
    r = range(len(m))
    for x in r:
        mx = m[x]
        for y in r:
            mxy = m[mx[y]]
            my = m[y]
            for z in r:
                if mxy[z] != mx[my[z]]:
                    return False, (x, y, z)
    return True, None


def find_identity(table) -> int | None:
    """The two-sided identity of a table, or ``None``."""
    if isinstance(table, FiniteSemigroup):
        if table.identity is not None:
            return table.identity
        table = table.mul
    r = range(len(table))
    for e in r:
        if all(table[e][x] == x and table[x][e] == x for x in r):
            return e
    return None


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup on ``0..n-1``; ``identity`` marks monoid mode."""

    mul: Table
    identity: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "mul", _as_table(self.mul))
        ok, triple = check_associativity(self.mul)
        if not ok:
            raise NotAssociative(triple)
        e = self.identity
        if e is not None:
            if not 0 <= e < self.n:
                raise DomainError(f"identity {e} out of range")
            if any(self.mul[e][x] != x or self.mul[x][e] != x for x in range(self.n)):
                raise DomainError(f"{e} is not a two-sided identity")

    @classmethod
    def monoid(cls, table) -> FiniteSemigroup:
        """Build a monoid, detecting its identity; raise if there is none."""
        e = find_identity(_as_table(table))
        if e is None:
            raise DomainError("table has no identity element")
        return cls(table, e)

    def with_identity(self) -> FiniteSemigroup:
        """Same semigroup with the identity recorded when one exists."""
        if self.identity is not None:
            return self
        e = find_identity(self.mul)
        return self if e is None else FiniteSemigroup(self.mul, e)

    @property
    def n(self) -> int:
        return len(self.mul)

    @property
    def elements(self) -> range:
        return range(len(self.mul))

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.mul))

    def __call__(self, *xs: int) -> int:
        """Product of one or more elements, left to right."""
        acc = xs[0]
        for x in xs[1:]:
            acc = self.mul[acc][x]
        return acc

    @cached_property
    def idempotents(self) -> frozenset[int]:
        return frozenset(e for e in self.elements if self.mul[e][e] == e)

    def __repr__(self):
        rows = "/".join("".join(map(str, r)) for r in self.mul)
        tail = "" if self.identity is None else f", identity={self.identity}"
        return f"FiniteSemigroup({rows}{tail})"


def _monoid_identity(S: FiniteSemigroup) -> int:
    e = S.identity
    if e is None:
        raise DomainError("operation requires a monoid with a recorded identity")
    return e


def idempotents(S: FiniteSemigroup) -> frozenset[int]:
    return S.idempotents


def _require_idempotent(S, *es):
    for e in es:
        if e not in S.idempotents:
            raise DomainError(f"{e} is not an idempotent")


def idempotent_leq(S: FiniteSemigroup, e: int, f: int) -> bool:
    """Natural partial order on idempotents: ``e <= f`` iff ``ef = fe = e``."""
    _require_idempotent(S, e, f)
    return S.mul[e][f] == e and S.mul[f][e] == e


def principal_structures(S: FiniteSemigroup, e: int):
    """The fixed sets ``eX = {x : ex = x}``, ``Xe = {x : xe = x}`` and their meet."""
    _require_idempotent(S, e)
    ex = frozenset(x for x in S.elements if S.mul[e][x] == x)
    xe = frozenset(x for x in S.elements if S.mul[x][e] == x)
    return ex, xe, ex & xe


def local_group(S: FiniteSemigroup, e: int):
    """The maximal subgroup ``H_e`` and its inverse table ``{x: x^-}``."""
    _require_idempotent(S, e)
    m = S.mul
    xe = [x for x in S.elements if m[x][e] == x]
    inverse = {}
    for x in xe:
        for y in xe:
            if m[x][y] == e and m[y][x] == e:
                inverse[x] = y
                break
    h = frozenset(inverse)
    # group sanity: closed, e is the identity, inverses stay inside
    assert e in h
    for x in h:
        assert m[e][x] == x == m[x][e]
        assert inverse[x] in h
        for y in h:
            assert m[x][y] in h
    return h, inverse


def center(S: FiniteSemigroup) -> frozenset[int]:
    r = S.elements
    return frozenset(z for z in r if all(S.mul[z][x] == S.mul[x][z] for x in r))


def has_central_idempotents(S: FiniteSemigroup) -> bool:
    return S.idempotents <= center(S)


def is_commutative(S: FiniteSemigroup) -> bool:
    m = S.mul
    return all(m[x][y] == m[y][x] for x in S.elements for y in S.elements)


def is_clifford(S: FiniteSemigroup):
    """Return ``(True, inverse_table)`` when ``S`` is a union of groups with central idempotents.

    The inverse of ``x`` is then the unique ``y`` with ``xyx = x``,
    ``yxy = y`` and ``xy = yx``.
    """
    if not has_central_idempotents(S):
        return False, None
    m = S.mul
    inv = []
    for x in S.elements:
        cands = [y for y in S.elements
                 if m[m[x][y]][x] == x and m[m[y][x]][y] == y and m[x][y] == m[y][x]]
        if not cands:
            return False, None
        assert len(cands) == 1
        inv.append(cands[0])
    return True, tuple(inv)


def is_cancellative(S: FiniteSemigroup) -> bool:
    m = S.mul
    for a in S.elements:
        if len(set(m[a])) != S.n:
            return False
        if len({m[x][a] for x in S.elements}) != S.n:
            return False
    return True


def right_units(M: FiniteSemigroup) -> frozenset[int]:
    """Elements ``r`` with some ``r'`` such that ``rr' = 1``."""
    one = _monoid_identity(M)
    return frozenset(r for r in M.elements if one in M.mul[r])


def left_units(M: FiniteSemigroup) -> frozenset[int]:
    one = _monoid_identity(M)
    return frozenset(l for l in M.elements if any(M.mul[x][l] == one for x in M.elements))


def is_group(S: FiniteSemigroup) -> bool:
    e = find_identity(S)
    if e is None:
        return False
    return all(e in S.mul[x] for x in S.elements)


def is_homomorphism(S: FiniteSemigroup, T: FiniteSemigroup, f: Sequence[int]) -> bool:
    ms, mt = S.mul, T.mul
    return all(f[ms[x][y]] == mt[f[x]][f[y]] for x in S.elements for y in S.elements)


def _inverse_perm(p):
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return q


def isomorphisms(S: FiniteSemigroup, T: FiniteSemigroup) -> list[tuple[int, ...]]:
    """Every multiplication-preserving bijection ``S -> T``, in lexicographic order."""
    if S.n != T.n:
        return []
    return [p for p in itertools.permutations(range(S.n)) if is_homomorphism(S, T, p)]


def automorphisms(S: FiniteSemigroup) -> list[tuple[int, ...]]:
    return isomorphisms(S, S)


def relabel(table: Table, p: Sequence[int]) -> Table:
    """Transport a table along the bijection ``p``: ``p(x) * p(y) = p(x * y)``."""
    q = _inverse_perm(p)
    n = len(table)
    return tuple(tuple(p[table[q[a]][q[b]]] for b in range(n)) for a in range(n))


def canonical_table(S: FiniteSemigroup | Table) -> tuple[int, ...]:
    """The lexicographically least flattened table isomorphic to ``S``."""
    mul = S.mul if isinstance(S, FiniteSemigroup) else S
    n = len(mul)
    best = None
    for p in itertools.permutations(range(n)):
        q = _inverse_perm(p)
        flat = tuple(p[mul[q[a]][q[b]]] for a in range(n) for b in range(n))
        if best is None or flat < best:
            best = flat
    return best


@dataclass(frozen=True)
class ElementMap:
    """A total map between the element sets of two semigroups."""

    source: FiniteSemigroup
    target: FiniteSemigroup
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.source.n:
            raise DomainError(f"map has {len(table)} images, source has {self.source.n} elements")
        bad = [x for x, v in enumerate(table) if not 0 <= v < self.target.n]
        if bad:
            raise DomainError(f"image of {bad[0]} out of range")

    @classmethod
    def endo(cls, S: FiniteSemigroup, table) -> ElementMap:
        return cls(S, S, tuple(table))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def is_homomorphism(self) -> bool:
        return is_homomorphism(self.source, self.target, self.table)

    def is_monoid_homomorphism(self) -> bool:
        e, f = self.source.identity, self.target.identity
        if e is None or f is None:
            raise DomainError("monoid homomorphism needs identities on both sides")
        return self.is_homomorphism() and self.table[e] == f

    def is_idempotent(self) -> bool:
        t = self.table
        return self.source == self.target and all(t[t[x]] == t[x] for x in range(len(t)))

    def image(self) -> frozenset[int]:
        return frozenset(self.table)


@dataclass(frozen=True)
class Congruence:
    """A partition of the elements compatible with multiplication.

    ``class_of`` is normalized so that block ids appear in first-occurrence
    order; two congruences with the same blocks compare equal.
    """

    semigroup: FiniteSemigroup
    class_of: tuple[int, ...] = field()

    def __post_init__(self):
        S = self.semigroup
        if len(self.class_of) != S.n:
            raise DomainError("class assignment length differs from semigroup order")
        relabel_ids: dict[int, int] = {}
        norm = tuple(relabel_ids.setdefault(c, len(relabel_ids)) for c in self.class_of)
        object.__setattr__(self, "class_of", norm)
        c, m = norm, S.mul
        for a, a2 in itertools.product(S.elements, repeat=2):
            if c[a] != c[a2]:
                continue
            for b in S.elements:
                if c[m[a][b]] != c[m[a2][b]]:
                    raise NotACongruence("blocks not compatible with multiplication",
                                         witness=(a, a2, b, "right"))
                if c[m[b][a]] != c[m[b][a2]]:
                    raise NotACongruence("blocks not compatible with multiplication",
                                         witness=(a, a2, b, "left"))

    @property
    def blocks(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(max(self.class_of) + 1)]
        for x, c in enumerate(self.class_of):
            out[c].add(x)
        return tuple(frozenset(b) for b in out)

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def is_system_of_representatives(self, subset: Iterable[int]) -> bool:
        hits = sorted(self.class_of[x] for x in set(subset))
        return hits == list(range(len(self.blocks)))


def kernel_congruence(m: ElementMap) -> Congruence:
    """The fibers of an endomorphism as a congruence.

    Raises :class:`NotACongruence` when the fibers are not compatible, which
    means ``m`` was not a homomorphism.
    """
    if m.source != m.target:
        raise DomainError("kernel congruence needs a self-map")
    return Congruence(m.source, m.table)


def quotient(S: FiniteSemigroup, c: Congruence):
    """Cayley table on the blocks of ``c`` and the projection onto it."""
    if c.semigroup != S:
        raise DomainError("congruence belongs to another semigroup")
    reps = [min(b) for b in c.blocks]
    k = len(reps)
    table = tuple(tuple(c.class_of[S.mul[reps[i]][reps[j]]] for j in range(k)) for i in range(k))
    ident = None if S.identity is None else c.class_of[S.identity]
    Q = FiniteSemigroup(table, ident)
    return Q, ElementMap(S, Q, c.class_of)


def in_variety_S(S: FiniteSemigroup) -> bool:
    """Whether ``abc = bc`` holds identically."""
    m = S.mul
    return all(m[m[a][b]][c] == m[b][c] for a in S.elements for b in S.elements for c in S.elements)


def _labeled_tables(n: int) -> Iterator[Table]:
    """All associative tables on ``n`` labeled elements, in lexicographic order.

    Cells are filled row by row; every triple is checked as soon as the last
    of the four cells it reads is known.
    """
    N = n * n
    cells = [-1] * N

    def get(a, b):
        return -1 if a < 0 or b < 0 else cells[a * n + b]

    def agree(left, right):
        return left < 0 or right < 0 or left == right

    def consistent(p, q):
        # (xy)z = x(yz) for the triples in which cell (p, q) plays each role
        v = cells[p * n + q]
        r = range(n)
        for z in r:  # (x, y) = (p, q)
            if not agree(get(v, z), get(p, get(q, z))):
                return False
        for x in r:  # (y, z) = (p, q)
            if not agree(get(get(x, p), q), get(x, v)):
                return False
        for x in r:
            for y in r:
                w = cells[x * n + y]
                if w == p and not agree(v, get(x, get(y, q))):  # (xy, z) = (p, q)
                    return False
                if w == q and not agree(get(get(p, x), y), v):  # (x, yz) = (p, q)
                    return False
        return True

    def rec(k):
        if k == N:
            yield tuple(tuple(cells[i * n:(i + 1) * n]) for i in range(n))
            return
        p, q = divmod(k, n)
        for v in range(n):
            cells[k] = v
            if consistent(p, q):
                yield from rec(k + 1)
        cells[k] = -1

    yield from rec(0)


def enumerate_semigroups(n: int, monoid_only: bool = False, up_to_iso: bool = True,
                         cap: int = DEFAULT_ORDER_CAP) -> list[FiniteSemigroup]:
    """All semigroups of order ``n``.

    With ``up_to_iso`` each isomorphism class is represented once, by its
    lexicographically least table. The identity is recorded whenever the
    table has one.
    """
    if n < 1:
        raise DomainError("order must be positive")
    if n > cap:
        raise DomainError(f"order {n} exceeds the enumeration cap {cap}; "
                          "raise the cap explicitly to proceed")
    out = []
    for t in _labeled_tables(n):
        flat = tuple(itertools.chain.from_iterable(t))
        if up_to_iso and canonical_table(t) != flat:
            continue
        e = find_identity(t)
        if monoid_only and e is None:
            continue
        out.append(FiniteSemigroup(t, e))
    return out
