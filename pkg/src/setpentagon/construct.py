"""Constructions of solutions, each validating its hypotheses before building.

Every constructor either returns a verified :class:`PentagonSolution` or raises
:class:`HypothesisError` naming the failed condition and a witness.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .semigroup import (DomainError, FiniteSemigroup, find_identity, has_central_idempotents,
                        in_variety_S, is_clifford, is_group)
from .solution import PentagonSolution

__all__ = [
    "HypothesisError", "from_endomorphism", "constant_solution", "variety_S_solution",
    "clifford_solution", "militaru_solution", "GroupConstructionData", "group_solution",
    "normal_subgroups", "representative_systems", "enumerate_group_solutions",
    "extract_group_data", "MonoidConstructionData", "monoid_idempotent_solution",
    "idempotent_monoid_homomorphisms", "enumerate_monoid_constructions",
    "extract_monoid_data",
]


class HypothesisError(ValueError):
    """A construction hypothesis fails; ``condition`` names it."""

    def __init__(self, condition: str, witness=None, detail: str = ""):
        msg = f"hypothesis {condition} fails"
        if witness is not None:
            msg += f" at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.condition = condition
        self.witness = witness


def _constant_rows(n, row):
    return tuple(tuple(row) for _ in range(n))


def _check_endomorphism(S, gamma, name="endomorphism"):
    m = S.mul
    for x in S.elements:
        for y in S.elements:
            if gamma[m[x][y]] != m[gamma[x]][gamma[y]]:
                raise HypothesisError(name, (x, y))


def from_endomorphism(S: FiniteSemigroup, gamma: Sequence[int]) -> PentagonSolution:
    """``s(x, y) = (xy, gamma(y))`` for an idempotent endomorphism ``gamma``."""
    gamma = tuple(gamma)
    if len(gamma) != S.n or any(not 0 <= v < S.n for v in gamma):
        raise HypothesisError("map", detail="gamma must map every element into the semigroup")
    _check_endomorphism(S, gamma)
    for x in S.elements:
        if gamma[gamma[x]] != gamma[x]:
            raise HypothesisError("gamma^2=gamma", x)
    return PentagonSolution(S, _constant_rows(S.n, gamma))


def constant_solution(S: FiniteSemigroup, e: int) -> PentagonSolution:
    """``s(x, y) = (xy, e)`` for an idempotent ``e``."""
    if S.mul[e][e] != e:
        raise HypothesisError("idempotent", e)
    return from_endomorphism(S, (e,) * S.n)


def variety_S_solution(S: FiniteSemigroup) -> PentagonSolution:
    """``s(x, y) = (xy, xy)`` on a semigroup satisfying ``abc = bc``."""
    if not in_variety_S(S):
        m = S.mul
        w = next((a, b, c) for a, b, c in itertools.product(S.elements, repeat=3)
                 if m[m[a][b]][c] != m[b][c])
        raise HypothesisError("abc=bc", w)
    return PentagonSolution(S, S.mul)


def clifford_solution(S: FiniteSemigroup) -> PentagonSolution:
    """``s(x, y) = (xy, y^-1 y)`` on a Clifford semigroup."""
    ok, inv = is_clifford(S)
    if not ok:
        raise HypothesisError("clifford", detail="some element lacks a unique commuting inverse")
    m = S.mul
    row = tuple(m[inv[y]][y] for y in S.elements)
    return PentagonSolution(S, _constant_rows(S.n, row))


def militaru_solution(n: int, f: Sequence[int], g: Sequence[int]):
    """``x.y = f(x)`` and ``s(x, y) = (x.y, g(y))`` for commuting idempotent maps."""
    f, g = tuple(f), tuple(g)
    for name, h in (("f", f), ("g", g)):
        if len(h) != n or any(not 0 <= v < n for v in h):
            raise HypothesisError("map", detail=f"{name} must be a map on 0..{n - 1}")
        for x in range(n):
            if h[h[x]] != h[x]:
                raise HypothesisError(f"{name}^2={name}", x)
    for x in range(n):
        if f[g[x]] != g[f[x]]:
            raise HypothesisError("fg=gf", x)
    S = FiniteSemigroup(tuple((f[x],) * n for x in range(n)))
    S = S.with_identity()
    return S, PentagonSolution(S, _constant_rows(n, g))


# -- groups ------------------------------------------------------------------

def _group_inverse(G):
    one = find_identity(G)
    return one, tuple(next(y for y in G.elements if G.mul[x][y] == one) for x in G.elements)


def _coset(G, K, x):
    """Right coset ``Kx``."""
    return frozenset(G.mul[k][x] for k in K)


def _is_normal_subgroup(G, K):
    one, inv = _group_inverse(G)
    m = G.mul
    if one not in K:
        return False
    if any(m[a][b] not in K for a in K for b in K):
        return False
    return all(m[m[g][k]][inv[g]] in K for g in G.elements for k in K)


def normal_subgroups(G: FiniteSemigroup) -> list[frozenset[int]]:
    """All normal subgroups, ordered by size then elements."""
    if not is_group(G):
        raise DomainError("not a group")
    one = find_identity(G)
    others = [x for x in G.elements if x != one]
    out = []
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            K = frozenset((one,) + extra)
            if _is_normal_subgroup(G, K):
                out.append(K)
    return out


def _cosets(G, K):
    seen, out = set(), []
    for x in G.elements:
        if x not in seen:
            c = _coset(G, K, x)
            seen |= c
            out.append(tuple(sorted(c)))
    return out


def representative_systems(G: FiniteSemigroup, K) -> list[frozenset[int]]:
    """Transversals of ``G/K`` that contain the identity."""
    one = find_identity(G)
    choices = [((one,) if one in c else c) for c in _cosets(G, frozenset(K))]
    return [frozenset(p) for p in itertools.product(*choices)]


@dataclass(frozen=True)
class GroupConstructionData:
    G: FiniteSemigroup
    K: frozenset[int]
    R: frozenset[int]
    mu: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "K", frozenset(self.K))
        object.__setattr__(self, "R", frozenset(self.R))
        G, K, R = self.G, self.K, self.R
        if not is_group(G):
            raise HypothesisError("group", detail="G is not a group")
        if not _is_normal_subgroup(G, K):
            raise HypothesisError("normality", detail=f"K={sorted(K)} is not a normal subgroup")
        one = find_identity(G)
        if one not in R:
            raise HypothesisError("1 in R")
        for c in _cosets(G, K):
            hit = R.intersection(c)
            if len(hit) != 1:
                raise HypothesisError("coset coverage", tuple(c),
                                      f"R meets this coset {len(hit)} times")
        if self.mu is None:
            mu = tuple(next(r for r in R if r in _coset(G, K, x)) for x in G.elements)
            object.__setattr__(self, "mu", mu)
        mu = tuple(self.mu)
        object.__setattr__(self, "mu", mu)
        for x in G.elements:
            if mu[x] not in R:
                raise HypothesisError("mu(x) in R", x)
            if mu[x] not in _coset(G, K, x):
                raise HypothesisError("mu(x) in Kx", x)


def group_solution(data: GroupConstructionData) -> PentagonSolution:
    """``theta_x(y) = mu(x)^-1 mu(xy)``."""
    G, mu = data.G, data.mu
    _, inv = _group_inverse(G)
    m = G.mul
    theta = tuple(tuple(m[inv[mu[x]]][mu[m[x][y]]] for y in G.elements) for x in G.elements)
    return PentagonSolution(G, theta)


def extract_group_data(sol: PentagonSolution) -> GroupConstructionData:
    """Recover ``K = {x : theta_1(x) = 1}``, ``R = im theta_1`` and ``mu = theta_1``."""
    G = sol.semigroup
    one = find_identity(G)
    t1 = sol.theta[one]
    K = frozenset(x for x in G.elements if t1[x] == one)
    return GroupConstructionData(G, K, frozenset(t1), t1)


def enumerate_group_solutions(G: FiniteSemigroup) -> list[PentagonSolution]:
    """Solutions from every normal subgroup and identity-containing transversal."""
    if G.n > 8:
        raise DomainError("group construction enumeration is limited to order 8")
    found = {}
    for K in normal_subgroups(G):
        for R in representative_systems(G, K):
            sol = group_solution(GroupConstructionData(G, K, R))
            found.setdefault(sol.theta, sol)
    return [found[t] for t in sorted(found)]


# -- monoids with central idempotents -------------------------------------------

@dataclass(frozen=True)
class MonoidConstructionData:
    """``mu`` together with maps ``theta_e`` for each ``e`` in the image of ``mu``.

    The map for the identity may be omitted; it is taken to be ``mu``.
    """

    M: FiniteSemigroup
    mu: tuple[int, ...]
    theta_e: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        M = self.M
        mu = tuple(self.mu)
        object.__setattr__(self, "mu", mu)
        one = M.identity
        if one is None:
            raise HypothesisError("monoid", detail="M needs a recorded identity")
        if not has_central_idempotents(M):
            raise HypothesisError("E(M) in Z(M)")
        fam = {int(e): tuple(t) for e, t in dict(self.theta_e).items()}
        fam.setdefault(one, mu)
        object.__setattr__(self, "theta_e", fam)
        _check_mu(M, mu)
        if fam[one] != mu:
            raise HypothesisError("theta_1=mu")
        image = set(mu)
        if set(fam) != image:
            raise HypothesisError("family domain", detail=f"maps given for {sorted(fam)}, "
                                  f"image of mu is {sorted(image)}")
        for e, t in fam.items():
            if len(t) != M.n or any(not 0 <= v < M.n for v in t):
                raise HypothesisError("map", e)
        w = _family_violation(M, mu, fam)
        if w is not None:
            raise HypothesisError(*w)


def _check_mu(M, mu):
    m, one, E = M.mul, M.identity, M.idempotents
    if len(mu) != M.n:
        raise HypothesisError("map", detail="mu needs one image per element")
    if mu[one] != one:
        raise HypothesisError("mu(1)=1")
    for x in M.elements:
        if mu[x] not in E:
            raise HypothesisError("mu(x) in E(M)", x)
        if mu[mu[x]] != mu[x]:
            raise HypothesisError("mu idempotent", x)
        if m[x][mu[x]] != x:
            raise HypothesisError("right identity", x)
        for y in M.elements:
            if mu[m[x][y]] != m[mu[x]][mu[y]]:
                raise HypothesisError("mu homomorphism", (x, y))


def _family_violation(M, mu, fam):
    """First failing instance of (ast), (astast), (astastast), or ``None``."""
    m = M.mul
    r = M.elements
    for e, te in sorted(fam.items()):
        for x in r:
            f = mu[m[e][x]]
            tf = fam[f]
            for y in r:
                if te[m[x][y]] != m[te[x]][tf[y]]:
                    return ("ast", (e, x, y))
    for e, te in sorted(fam.items()):
        for f in sorted(fam):
            tef = fam[m[e][f]]
            for x in r:
                if te[x] != te[tef[x]]:
                    return ("astast", (e, f, x))
    for e, te in sorted(fam.items()):
        for x in r:
            tef = fam[m[e][mu[x]]]
            if tef[te[x]] != te[x]:
                return ("astastast", (e, x))
    return None


def monoid_idempotent_solution(data: MonoidConstructionData) -> PentagonSolution:
    """``theta_x = theta_{mu(x)}`` from validated construction data."""
    fam, mu = data.theta_e, data.mu
    sol = PentagonSolution(data.M, tuple(fam[mu[x]] for x in data.M.elements))
    m = data.M.mul
    t = sol.theta
    for x in data.M.elements:
        for y in data.M.elements:
            if t[m[x][y]][t[x][y]] != t[x][y]:
                raise HypothesisError("I2", (x, y))
            if m[m[x][y]][t[x][y]] != m[x][y]:
                raise HypothesisError("I1", (x, y))
    return sol


def idempotent_monoid_homomorphisms(M: FiniteSemigroup) -> list[tuple[int, ...]]:
    """Maps ``mu: M -> E(M)`` valid as the identity row of an idempotent solution."""
    one = M.identity
    if one is None:
        raise DomainError("needs a monoid with a recorded identity")
    E = sorted(M.idempotents)
    choices = [[e for e in E if M.mul[x][e] == x] if x != one else [one] for x in M.elements]
    out = []
    for mu in itertools.product(*choices):
        try:
            _check_mu(M, mu)
        except HypothesisError:
            continue
        out.append(tuple(mu))
    return out


def _families(M, mu):
    """All theta_e families for ``mu`` satisfying (ast), (astast), (astastast)."""
    one = M.identity
    m = M.mul
    n = M.n
    r = M.elements
    free = sorted(set(mu) - {one})
    fam: dict[int, list[int]] = {one: list(mu)}
    for e in free:
        fam[e] = [-1] * n
    cells = [(e, x) for e in free for x in r]

    def get(e, x):
        return -1 if x < 0 else fam[e][x]

    def ok():
        for e in fam:
            te = fam[e]
            for x in r:
                f = mu[m[e][x]]
                for y in r:
                    a, b, c = te[m[x][y]], te[x], fam[f][y]
                    if a >= 0 and b >= 0 and c >= 0 and a != m[b][c]:
                        return False
            for f in fam:
                tef = fam[m[e][f]]
                for x in r:
                    a = te[x]
                    b = get(e, tef[x])
                    if a >= 0 and b >= 0 and a != b:
                        return False
            for x in r:
                a = te[x]
                b = get(m[e][mu[x]], a)
                if a >= 0 and b >= 0 and a != b:
                    return False
        return True

    def rec(i):
        if i == len(cells):
            yield {e: tuple(t) for e, t in fam.items()}
            return
        e, x = cells[i]
        for v in r:
            fam[e][x] = v
            if ok():
                yield from rec(i + 1)
        fam[e][x] = -1

    yield from rec(0)


def enumerate_monoid_constructions(M: FiniteSemigroup) -> list[PentagonSolution]:
    """Every solution produced by the central-idempotent monoid construction."""
    M = M.with_identity()
    if M.identity is None:
        raise DomainError("needs a monoid")
    if not has_central_idempotents(M):
        raise DomainError("idempotents are not central")
    if M.n > 4:
        raise DomainError("monoid construction enumeration is limited to order 4")
    found = {}
    for mu in idempotent_monoid_homomorphisms(M):
        for fam in _families(M, mu):
            sol = monoid_idempotent_solution(MonoidConstructionData(M, mu, fam))
            found.setdefault(sol.theta, sol)
    return [found[t] for t in sorted(found)]


def extract_monoid_data(sol: PentagonSolution) -> MonoidConstructionData:
    """Read ``mu = theta_1`` and ``theta_e`` for ``e`` in its image off a solution."""
    M = sol.semigroup.with_identity()
    one = M.identity
    if one is None:
        raise DomainError("needs a monoid")
    mu = sol.theta[one]
    return MonoidConstructionData(M, mu, {e: sol.theta[e] for e in set(mu)})
