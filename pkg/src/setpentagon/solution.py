"""Set-theoretical solutions ``s(x, y) = (xy, theta_x(y))`` of the pentagon equation.

A solution is a semigroup together with a dense ``theta`` table,
``theta[x][y]`` being the image of ``y`` under the map indexed by ``x``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, fields
from typing import NamedTuple, Sequence

from .semigroup import DomainError, FiniteSemigroup, MalformedTable, isomorphisms

__all__ = [
    "NotASolution", "Violation", "VerifyResult", "PentagonSolution",
    "ClassificationFlags", "FLAG_NAMES", "verify_solution",
    "verify_pentagon_direct", "classify", "classify_table",
    "solutions_isomorphic", "transport_theta", "canonical_theta",
    "MAX_REPORTED_VIOLATIONS",
]

MAX_REPORTED_VIOLATIONS = 16

Theta = tuple[tuple[int, ...], ...]


class NotASolution(ValueError):
    def __init__(self, result: VerifyResult):
        first = result.violations[0]
        super().__init__(f"{result.total} violation(s); first: {first.condition} at {first.triple}")
        self.result = result


class Violation(NamedTuple):
    condition: str  # "P1" or "P2"
    triple: tuple[int, int, int]


class VerifyResult(NamedTuple):
    ok: bool
    violations: list[Violation]
    total: int

    def __bool__(self):
        return self.ok


def _as_theta(S: FiniteSemigroup, theta: Sequence[Sequence[int]]) -> Theta:
    rows = tuple(tuple(int(v) for v in row) for row in theta)
    n = S.n
    if len(rows) != n:
        raise MalformedTable(f"theta has {len(rows)} rows, semigroup has {n} elements")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"theta row {i} has {len(row)} entries, expected {n}", row=i)
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTable(f"theta entry ({i},{j}) = {v} out of range", row=i, col=j)
    return rows


def verify_solution(S: FiniteSemigroup, theta, cap: int = MAX_REPORTED_VIOLATIONS) -> VerifyResult:
    """Check (P1) ``theta_x(y) theta_xy(z) = theta_x(yz)`` and
    (P2) ``theta_{theta_x(y)} theta_xy = theta_y`` on every triple.

    Violations are listed in lexicographic triple order, P1 before P2 for the
    same triple, and capped at ``cap`` entries; ``total`` counts all of them.
    """
    t = _as_theta(S, theta)
    m = S.mul
    found: list[Violation] = []
    total = 0
    r = S.elements
    for x in r:
        tx, mx = t[x], m[x]
        for y in r:
            a, xy = tx[y], mx[y]
            txy, ma, ta, ty, my = t[xy], m[a], t[a], t[y], m[y]
            for z in r:
                b = txy[z]
                if ma[b] != tx[my[z]]:
                    total += 1
                    if len(found) < cap:
                        found.append(Violation("P1", (x, y, z)))
                if ta[b] != ty[z]:
                    total += 1
                    if len(found) < cap:
                        found.append(Violation("P2", (x, y, z)))
    return VerifyResult(total == 0, found, total)


def _s_map(S: FiniteSemigroup, theta) -> dict:
    m = S.mul
    return {(x, y): (m[x][y], theta[x][y]) for x in S.elements for y in S.elements}


def _leg(s, i, j):
    """The map on triples acting by ``s`` on coordinates ``i < j``."""
    def act(p):
        q = list(p)
        q[i], q[j] = s[(p[i], p[j])]
        return tuple(q)
    return act


def _legs(S, theta):
    s = _s_map(S, theta)
    s12, s23 = _leg(s, 0, 1), _leg(s, 1, 2)

    def flip23(p):
        return (p[0], p[2], p[1])

    def s13(p):
        return flip23(s12(flip23(p)))

    return s, s12, s13, s23


def verify_pentagon_direct(S: FiniteSemigroup, theta) -> bool:
    """Check ``s23 s13 s12 = s12 s23`` on every triple of ``X^3``.

    ``s13`` is built by conjugating ``s12`` with the flip of the last two
    coordinates, independently of the condition-based check.
    """
    t = _as_theta(S, theta)
    _, s12, s13, s23 = _legs(S, t)
    for p in itertools.product(S.elements, repeat=3):
        if s23(s13(s12(p))) != s12(s23(p)):
            return False
    return True


@dataclass(frozen=True)
class ClassificationFlags:
    idempotent: bool
    involutive: bool
    nondegenerate: bool
    commutative: bool
    cocommutative: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def names(self) -> tuple[str, ...]:
        return tuple(k for k, v in self.as_dict().items() if v)

    def label(self) -> str:
        return ",".join(self.names()) or "-"


FLAG_NAMES = tuple(f.name for f in fields(ClassificationFlags))


def _elementwise_flags(S: FiniteSemigroup, t: Theta) -> dict[str, bool]:
    m = S.mul
    r = S.elements
    pairs = list(itertools.product(r, repeat=2))
    idem = all(m[m[x][y]][t[x][y]] == m[x][y] for x, y in pairs) and \
        all(t[m[x][y]][t[x][y]] == t[x][y] for x, y in pairs)
    invol = all(m[m[x][y]][t[x][y]] == x and t[m[x][y]][t[x][y]] == y for x, y in pairs)
    nondeg = all(len(set(row)) == S.n for row in t)
    c1 = all(m[m[x][z]][y] == m[m[x][y]][z] for x in r for y in r for z in r)
    c2 = all(t[x] == t[m[x][y]] for x, y in pairs)
    cc1 = all(m[x][t[y][z]] == m[x][z] for x in r for y in r for z in r)
    cc2 = all(t[x][t[y][z]] == t[y][t[x][z]] for x in r for y in r for z in r)
    return dict(idempotent=idem, involutive=invol, nondegenerate=nondeg,
                commutative=c1 and c2, cocommutative=cc1 and cc2)


def _compositional_flags(S: FiniteSemigroup, t: Theta) -> dict[str, bool]:
    s, s12, s13, s23 = _legs(S, t)
    sq = {p: s[s[p]] for p in s}
    triples = list(itertools.product(S.elements, repeat=3))
    return dict(
        idempotent=all(sq[p] == s[p] for p in s),
        involutive=all(sq[p] == p for p in s),
        commutative=all(s12(s13(p)) == s13(s12(p)) for p in triples),
        cocommutative=all(s13(s23(p)) == s23(s13(p)) for p in triples),
    )


def classify_table(S: FiniteSemigroup, theta, cross_check: bool = __debug__) -> ClassificationFlags:
    """Flags of a theta table assumed to be a solution (not re-verified here)."""
    t = _as_theta(S, theta)
    flags = _elementwise_flags(S, t)
    if cross_check:
        comp = _compositional_flags(S, t)
        for k, v in comp.items():
            if flags[k] != v:
                raise AssertionError(f"{k}: elementwise={flags[k]} compositional={v} "
                                     f"for theta={t} on {S}")
    return ClassificationFlags(**flags)


@dataclass(frozen=True)
class PentagonSolution:
    """A verified solution ``s(x, y) = (xy, theta_x(y))`` on ``semigroup``."""

    semigroup: FiniteSemigroup
    theta: Theta

    def __post_init__(self):
        object.__setattr__(self, "theta", _as_theta(self.semigroup, self.theta))
        res = verify_solution(self.semigroup, self.theta)
        if not res.ok:
            raise NotASolution(res)

    @property
    def n(self) -> int:
        return self.semigroup.n

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.semigroup.mul[x][y], self.theta[x][y]

    def theta_map(self, x: int) -> tuple[int, ...]:
        return self.theta[x]

    @property
    def flags(self) -> ClassificationFlags:
        return classify(self)

    def relabeled(self, f: Sequence[int]) -> PentagonSolution:
        """Push the solution through a bijection ``f``."""
        from .semigroup import relabel
        S = self.semigroup
        ident = None if S.identity is None else f[S.identity]
        return PentagonSolution(FiniteSemigroup(relabel(S.mul, f), ident),
                                transport_theta(self.theta, f))


def classify(sol: PentagonSolution, cross_check: bool = __debug__) -> ClassificationFlags:
    if not isinstance(sol, PentagonSolution):
        raise DomainError("classify expects a verified PentagonSolution")
    return classify_table(sol.semigroup, sol.theta, cross_check)


def transport_theta(theta: Theta, f: Sequence[int]) -> Theta:
    """The table ``eta`` with ``eta[f(x)][f(y)] = f(theta[x][y])``."""
    n = len(theta)
    g = [0] * n
    for i, v in enumerate(f):
        g[v] = i
    return tuple(tuple(f[theta[g[a]][g[b]]] for b in range(n)) for a in range(n))


def canonical_theta(theta: Theta, autos: Sequence[Sequence[int]]) -> Theta:
    """Lexicographically least image of ``theta`` under a group of automorphisms."""
    return min(transport_theta(theta, f) for f in autos)


def solutions_isomorphic(sol: PentagonSolution, other: PentagonSolution):
    """First semigroup isomorphism ``f`` (lexicographic) with
    ``f(theta_x(y)) = eta_{f(x)}(f(y))``, or ``None``."""
    t, u = sol.theta, other.theta
    r = sol.semigroup.elements
    for f in isomorphisms(sol.semigroup, other.semigroup):
        if all(f[t[x][y]] == u[f[x]][f[y]] for x in r for y in r):
            return f
    return None
