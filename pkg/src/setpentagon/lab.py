"""Executable catalog of structural properties of solutions.

Each :class:`PropertyCase` pairs a scope (hypotheses on the semigroup or the
theta table) with an exhaustive check that returns ``None`` on success or a
witness tuple on failure. Instances outside a case's scope are skipped and
counted as such, never as passes.

Solution-level cases are evaluated on ``(semigroup, theta)`` instances;
semigroup-level cases on ``(semigroup, all solutions)`` instances and
concern the whole solution set (uniqueness, completeness of constructions).
"""
from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from . import catalog
from .construct import (HypothesisError, _check_mu, _family_violation,
                        enumerate_group_solutions, enumerate_monoid_constructions)
from .semigroup import (FiniteSemigroup, automorphisms, center, enumerate_semigroups,
                        find_identity, in_variety_S, is_cancellative, is_clifford, is_commutative,
                        is_group, isomorphisms, local_group)
from .search import enumerate_theta_tables
from .solution import _elementwise_flags, canonical_theta, transport_theta

__all__ = [
    "PropertyCase", "LabInstance", "CaseResult", "LabReport", "CATALOG",
    "run_catalog", "standard_instances", "mutation_sweep", "MutationOutcome",
    "check_nondegenerate_monoid", "check_involutive_implies_cc",
]

Witness = tuple


@dataclass(frozen=True)
class LabInstance:
    semigroup: FiniteSemigroup
    theta: tuple | None = None
    solutions: tuple | None = None   # every theta table on the semigroup

    @property
    def level(self) -> str:
        return "solution" if self.theta is not None else "semigroup"


class _Ctx:
    """Lazily computed facts about one instance."""

    def __init__(self, inst: LabInstance):
        self.S = inst.semigroup
        self.t = inst.theta
        self.sols = inst.solutions
        self.m = self.S.mul
        self.n = self.S.n
        self.r = range(self.n)

    @cached_property
    def one(self):
        return find_identity(self.S)

    @cached_property
    def E(self):
        return self.S.idempotents

    @cached_property
    def central(self):
        return self.E <= center(self.S)

    @cached_property
    def H(self):
        return {e: local_group(self.S, e) for e in self.E}

    @cached_property
    def flags(self):
        return _elementwise_flags(self.S, self.t)

    def flags_of(self, t):
        return _elementwise_flags(self.S, t)

    @cached_property
    def autos(self):
        return automorphisms(self.S)

    # helpers
    def leq(self, a, b):
        m = self.m
        return a in self.E and b in self.E and m[a][b] == a and m[b][a] == a

    def fixes_right(self, g, x):
        """``x`` lies in ``Xg = {x : xg = x}``."""
        return self.m[x][g] == x

    def comp(self, p, q):
        return tuple(p[q[x]] for x in self.r)

    @cached_property
    def identity_map(self):
        return tuple(self.r)

    def constant_rows(self, row):
        return tuple(tuple(row) for _ in self.r)

    @cached_property
    def idempotent_sols(self):
        return sorted(t for t in self.sols if self.flags_of(t)["idempotent"])


def _theta1_hom_into_E(c: _Ctx) -> bool:
    if c.one is None:
        return False
    mu = c.t[c.one]
    m = c.m
    return mu[c.one] == c.one and all(v in c.E for v in mu) and \
        all(mu[m[x][y]] == m[mu[x]][mu[y]] for x in c.r for y in c.r)


def _iso_to(builder):
    def pred(c):
        return bool(isomorphisms(builder(), c.S))
    return pred


SCOPES: dict[str, Callable[[_Ctx], bool]] = {
    "monoid": lambda c: c.one is not None,
    "central-idempotents": lambda c: c.central,
    "group": lambda c: is_group(c.S),
    "cancellative-monoid": lambda c: c.one is not None and is_cancellative(c.S),
    "clifford": lambda c: is_clifford(c.S)[0],
    "variety[abc=bc]": lambda c: in_variety_S(c.S),
    "idempotent": lambda c: c.flags["idempotent"],
    "involutive": lambda c: c.flags["involutive"],
    "cocommutative": lambda c: c.flags["cocommutative"],
    "nondegenerate": lambda c: c.flags["nondegenerate"],
    "theta1-hom-into-E": _theta1_hom_into_E,
    "theta1-right-identity": lambda c: all(c.m[x][c.t[c.one][x]] == x for x in c.r),
    "iso:worked-example": _iso_to(catalog.example_monoid),
    "iso:ex5": _iso_to(catalog.ex5_monoid),
    "iso:remark[b2=a]": _iso_to(catalog.remark_monoid),
}


@dataclass(frozen=True)
class PropertyCase:
    id: str
    level: str                     # "solution" or "semigroup"
    requires: tuple[str, ...]
    statement: str
    check: Callable[[_Ctx], Witness | None]

    @property
    def scope(self) -> str:
        return "+".join(self.requires) or "semigroup"

    def skip_reason(self, c: _Ctx) -> str | None:
        for name in self.requires:
            if not SCOPES[name](c):
                return f"not {name}"
        return None


CATALOG: dict[str, PropertyCase] = {}


def _case(id, statement, requires=(), level="solution"):
    def deco(fn):
        CATALOG[id] = PropertyCase(id, level, tuple(requires), statement, fn)
        return fn
    return deco


# -- basics ---------------------------------------------------------------

@_case("basics.involutive-commutative-cocommutative",
       "s^2 = id  =>  s commutative and cocommutative", ("involutive",))
def _(c):
    f = c.flags
    if not (f["commutative"] and f["cocommutative"]):
        return ("commutative", f["commutative"], "cocommutative", f["cocommutative"])


@_case("basics.monoid-commutative-form",
       "s commutative  <=>  M commutative and theta_x = gamma, gamma in End(M), gamma^2 = gamma",
       ("monoid",))
def _(c):
    t, m = c.t, c.m
    g = t[0]
    form = is_commutative(c.S) and all(row == g for row in t) and \
        all(g[m[x][y]] == m[g[x]][g[y]] for x in c.r for y in c.r) and \
        all(g[g[x]] == g[x] for x in c.r)
    if form != c.flags["commutative"]:
        return ("commutative", c.flags["commutative"], "form", form)


@_case("basics.monoid-cocommutative-identity", "s cocommutative on a monoid  =>  theta_x = id",
       ("monoid", "cocommutative"))
def _(c):
    for x in c.r:
        if c.t[x] != c.identity_map:
            return (x,)


@_case("basics.monoid-nondegenerate-identity", "s non-degenerate on a monoid  =>  theta_x = id",
       ("monoid", "nondegenerate"))
def _(c):
    for x in c.r:
        if c.t[x] != c.identity_map:
            return (x,)


# -- idempotents and the natural order --------------------------------------

def _ordered_idempotents(c):
    return [(e, f) for e in sorted(c.E) for f in sorted(c.E) if c.leq(e, f)]


@_case("order.theta-e-f-idempotent", "e <= f in E(X)  =>  theta_e(f) in E(X)")
def _(c):
    for e, f in _ordered_idempotents(c):
        if c.t[e][f] not in c.E:
            return (e, f)


@_case("order.theta-e-e-below-theta-e-f", "e <= f in E(X)  =>  theta_e(e) <= theta_e(f)")
def _(c):
    for e, f in _ordered_idempotents(c):
        if not c.leq(c.t[e][e], c.t[e][f]):
            return (e, f)


@_case("order.theta-f-factorization", "e <= f in E(X)  =>  theta_f = theta_{theta_e(f)} theta_e")
def _(c):
    t = c.t
    for e, f in _ordered_idempotents(c):
        if t[f] != c.comp(t[t[e][f]], t[e]):
            return (e, f)


@_case("ideal.right-fixed-theta-idempotent", "e in E(X), x in Xe  =>  theta_x(e) in E(X)")
def _(c):
    for e in sorted(c.E):
        for x in c.r:
            if c.fixes_right(e, x) and c.t[x][e] not in c.E:
                return (e, x)


@_case("ideal.left-fixed-theta-in-ideal", "e in E(X), x in eX  =>  theta_e(x) in theta_e(e)X")
def _(c):
    m, t = c.m, c.t
    for e in sorted(c.E):
        g = t[e][e]
        for x in c.r:
            if m[e][x] == x and m[g][t[e][x]] != t[e][x]:
                return (e, x)


# -- arbitrary solutions on monoids ------------------------------------------

@_case("monoid.theta-x-1-idempotent", "theta_x(1) in E(M)", ("monoid",))
def _(c):
    for x in c.r:
        if c.t[x][c.one] not in c.E:
            return (x,)


@_case("monoid.theta-1-factorization", "theta_1 = theta_{theta_x(1)} theta_x", ("monoid",))
def _(c):
    t, one = c.t, c.one
    for x in c.r:
        if t[one] != c.comp(t[t[x][one]], t[x]):
            return (x,)


@_case("monoid.theta-1-x-in-ideal", "theta_1(x) in theta_1(1)M", ("monoid",))
def _(c):
    t, m, one = c.t, c.m, c.one
    for x in c.r:
        if m[t[one][one]][t[one][x]] != t[one][x]:
            return (x,)


@_case("monoid.theta-x-absorbs-theta-1-x", "theta_x = theta_{theta_1(x)} theta_x", ("monoid",))
def _(c):
    t, one = c.t, c.one
    for x in c.r:
        if t[x] != c.comp(t[t[one][x]], t[x]):
            return (x,)


# -- central idempotents and local groups ------------------------------------

def _local_pairs(c):
    for e in sorted(c.E):
        h, _ = c.H[e]
        for x in sorted(h):
            yield e, x


@_case("central.theta-e-e-below-theta-x-e", "x in H_e  =>  theta_e(e) <= theta_x(e)",
       ("central-idempotents",))
def _(c):
    t = c.t
    for e, x in _local_pairs(c):
        if not c.leq(t[e][e], t[x][e]):
            return (e, x)


@_case("central.theta-e-x-in-local-group",
       "x in H_e  =>  theta_e(x) in H_{theta_e(e)} and theta_e(x)^- = theta_x(x^-)",
       ("central-idempotents",))
def _(c):
    t = c.t
    for e, x in _local_pairs(c):
        g = t[e][e]
        if g not in c.E:
            return (e, x, "theta_e(e) not idempotent")
        hg, inv_g = c.H[g]
        _, inv_e = c.H[e]
        a = t[e][x]
        if a not in hg:
            return (e, x, "not in local group")
        if inv_g[a] != t[x][inv_e[x]]:
            return (e, x, "inverse")


@_case("central.theta-x-y-formula",
       "x in H_e, f <= e, y in H_f  =>  theta_x(y) = theta_e(x)^- theta_e(xy)",
       ("central-idempotents",))
def _(c):
    t, m = c.t, c.m
    for e, x in _local_pairs(c):
        g = t[e][e]
        if g not in c.E or t[e][x] not in c.H[g][0]:
            return (e, x, "theta_e(x) not in H_{theta_e(e)}")
        inv_g = c.H[g][1]
        for f in sorted(c.E):
            if not c.leq(f, e):
                continue
            for y in sorted(c.H[f][0]):
                if t[x][y] != m[inv_g[t[e][x]]][t[e][m[x][y]]]:
                    return (e, x, f, y)


# -- idempotent solutions on semigroups -----------------------------------------

@_case("idsol.theta-of-theta", "theta_{theta_x(y)} = theta_y", ("idempotent",))
def _(c):
    t = c.t
    for x, y in itertools.product(c.r, repeat=2):
        if t[t[x][y]] != t[y]:
            return (x, y)


@_case("idsol.theta-y-absorbs-theta-xy", "theta_y = theta_y theta_{xy}", ("idempotent",))
def _(c):
    t, m = c.t, c.m
    for x, y in itertools.product(c.r, repeat=2):
        if t[y] != c.comp(t[y], t[m[x][y]]):
            return (x, y)


@_case("idsol.right-factor", "theta_x(yz) = theta_x(yz) theta_y(z)", ("idempotent",))
def _(c):
    t, m = c.t, c.m
    for x, y, z in itertools.product(c.r, repeat=3):
        a = t[x][m[y][z]]
        if a != m[a][t[y][z]]:
            return (x, y, z)


def _right_fixed(c):
    return [(e, x) for e in sorted(c.E) for x in c.r if c.m[x][e] == x]


def _left_fixed(c):
    return [(e, x) for e in sorted(c.E) for x in c.r if c.m[e][x] == x]


@_case("idsol.xe.x-in-X-theta-x-e", "x in Xe  =>  x in X theta_x(e)", ("idempotent",))
def _(c):
    for e, x in _right_fixed(c):
        if c.m[x][c.t[x][e]] != x:
            return (e, x)


@_case("idsol.xe.theta-y-x-in-X-theta-x-e", "x in Xe  =>  theta_y(x) in X theta_x(e)",
       ("idempotent",))
def _(c):
    t, m = c.t, c.m
    for e, x in _right_fixed(c):
        for y in c.r:
            if m[t[y][x]][t[x][e]] != t[y][x]:
                return (e, x, y)


@_case("idsol.xe.theta-e-absorbs-theta-x", "x in Xe  =>  theta_e = theta_e theta_x",
       ("idempotent",))
def _(c):
    t = c.t
    for e, x in _right_fixed(c):
        if t[e] != c.comp(t[e], t[x]):
            return (e, x)


@_case("idsol.ex.theta-e-x-idempotent", "x in eX  =>  theta_e(x) in E(X)", ("idempotent",))
def _(c):
    for e, x in _left_fixed(c):
        if c.t[e][x] not in c.E:
            return (e, x)


@_case("idsol.ex.x-in-X-theta-e-x", "x in eX  =>  x in X theta_e(x)", ("idempotent",))
def _(c):
    for e, x in _left_fixed(c):
        if c.m[x][c.t[e][x]] != x:
            return (e, x)


@_case("idsol.ex.theta-y-x-in-X-theta-e-x", "x in eX  =>  theta_y(x) in X theta_e(x)",
       ("idempotent",))
def _(c):
    t, m = c.t, c.m
    for e, x in _left_fixed(c):
        for y in c.r:
            if m[t[y][x]][t[e][x]] != t[y][x]:
                return (e, x, y)


@_case("idsol.ex.theta-x-idempotent-map", "x in eX  =>  theta_x theta_x = theta_x",
       ("idempotent",))
def _(c):
    t = c.t
    for e, x in _left_fixed(c):
        if c.comp(t[x], t[x]) != t[x]:
            return (e, x)


def _two_sided(c):
    return [(e, x) for e in sorted(c.E) for x in c.r if c.m[e][x] == x and c.m[x][e] == x]


@_case("idsol.exe.theta-e-x-idempotent", "x in eXe  =>  theta_e(x) in E(X)", ("idempotent",))
def _(c):
    for e, x in _two_sided(c):
        if c.t[e][x] not in c.E:
            return (e, x)


@_case("idsol.exe.x-fixed", "x in eXe  =>  x in X theta_e(x) and x in X theta_x(e)",
       ("idempotent",))
def _(c):
    t, m = c.t, c.m
    for e, x in _two_sided(c):
        if m[x][t[e][x]] != x or m[x][t[x][e]] != x:
            return (e, x)


@_case("idsol.exe.theta-e-absorbs-theta-x", "x in eXe  =>  theta_e = theta_e theta_x",
       ("idempotent",))
def _(c):
    t = c.t
    for e, x in _two_sided(c):
        if t[e] != c.comp(t[e], t[x]):
            return (e, x)


@_case("idsol.exe.theta-y-x-fixed",
       "x in eXe  =>  theta_y(x) in X theta_e(x) and theta_y(x) in X theta_x(e)",
       ("idempotent",))
def _(c):
    t, m = c.t, c.m
    for e, x in _two_sided(c):
        for y in c.r:
            a = t[y][x]
            if m[a][t[e][x]] != a or m[a][t[x][e]] != a:
                return (e, x, y)


@_case("idsol.exe.theta-x-idempotent-map", "x in eXe  =>  theta_x idempotent", ("idempotent",))
def _(c):
    t = c.t
    for e, x in _two_sided(c):
        if c.comp(t[x], t[x]) != t[x]:
            return (e, x)


# -- idempotent solutions on monoids --------------------------------------------

@_case("idmon.theta-1-1", "theta_1(1) = 1", ("monoid", "idempotent"))
def _(c):
    if c.t[c.one][c.one] != c.one:
        return (c.one,)


@_case("idmon.theta-x-via-theta-1", "theta_x = theta_{theta_1(x)}", ("monoid", "idempotent"))
def _(c):
    t, one = c.t, c.one
    for x in c.r:
        if t[x] != t[t[one][x]]:
            return (x,)


@_case("idmon.theta-1-x-below-theta-x-1", "theta_1(x) <= theta_x(1)", ("monoid", "idempotent"))
def _(c):
    t, one = c.t, c.one
    for x in c.r:
        if not c.leq(t[one][x], t[x][one]):
            return (x,)


@_case("idmon.theta-x-idempotent-map", "theta_x theta_x = theta_x", ("monoid", "idempotent"))
def _(c):
    t = c.t
    for x in c.r:
        if c.comp(t[x], t[x]) != t[x]:
            return (x,)


def _right_unit_pairs(c):
    return [(r, r2) for r in c.r for r2 in c.r if c.m[r][r2] == c.one]


@_case("idmon.right-unit.theta-r-r-prime", "r r' = 1  =>  theta_r(r') = 1", ("monoid", "idempotent"))
def _(c):
    for r, r2 in _right_unit_pairs(c):
        if c.t[r][r2] != c.one:
            return (r, r2)


@_case("idmon.right-unit.theta-1-r", "r right unit  =>  theta_1(r) = 1", ("monoid", "idempotent"))
def _(c):
    for r, _ in _right_unit_pairs(c):
        if c.t[c.one][r] != c.one:
            return (r,)


@_case("idmon.right-unit.theta-r-is-theta-1", "r right unit  =>  theta_r = theta_1",
       ("monoid", "idempotent"))
def _(c):
    for r, _ in _right_unit_pairs(c):
        if c.t[r] != c.t[c.one]:
            return (r,)


def _kernel_reps_violation(c):
    t, one = c.t, c.one
    mu = t[one]
    image = sorted(set(mu))
    if one not in image:
        return ("1 not in image",)
    for a in image:
        for b in image:
            if a != b and mu[a] == mu[b]:
                return ("two representatives", a, b)
    for x in c.r:
        if not any(mu[x] == mu[a] for a in image):
            return ("class without representative", x)
    for x, y in itertools.product(c.r, repeat=2):
        if mu[t[x][y]] != mu[y]:
            return ("(theta_x(y), y) not in ker theta_1", x, y)


@_case("idmon.kernel-representatives",
       "theta_1: M -> E(M) homomorphism  =>  theta_1(M) represents M/ker theta_1, contains 1, "
       "(theta_x(y), y) in ker theta_1",
       ("monoid", "idempotent", "theta1-hom-into-E"))
def _(c):
    return _kernel_reps_violation(c)


@_case("idmon.i1-from-i2",
       "E(M) in Z(M), theta_1 idempotent homomorphism into E(M), x = x theta_1(x)  =>  "
       "(s idempotent <=> I2)",
       ("monoid", "central-idempotents", "theta1-hom-into-E", "theta1-right-identity"))
def _(c):
    t, m = c.t, c.m
    mu = t[c.one]
    if any(mu[mu[x]] != mu[x] for x in c.r):
        return None  # hypothesis needs theta_1 idempotent; covered by the scope in practice
    i2 = all(t[m[x][y]][t[x][y]] == t[x][y] for x in c.r for y in c.r)
    if c.flags["idempotent"] != i2:
        return ("idempotent", c.flags["idempotent"], "I2", i2)


@_case("cimon.theta-1-homomorphism",
       "E(M) in Z(M)  =>  theta_1 idempotent monoid homomorphism M -> E(M)",
       ("monoid", "central-idempotents", "idempotent"))
def _(c):
    mu, m, one = c.t[c.one], c.m, c.one
    if mu[one] != one:
        return ("theta_1(1)",)
    for x in c.r:
        if mu[x] not in c.E:
            return ("image", x)
        if mu[mu[x]] != mu[x]:
            return ("idempotent", x)
        for y in c.r:
            if mu[m[x][y]] != m[mu[x]][mu[y]]:
                return ("homomorphism", x, y)


@_case("cimon.kernel-representatives",
       "E(M) in Z(M)  =>  theta_1(M) represents M/ker theta_1, contains 1, "
       "(theta_x(y), y) in ker theta_1",
       ("monoid", "central-idempotents", "idempotent"))
def _(c):
    return _kernel_reps_violation(c)


@_case("cimon.construction-data",
       "E(M) in Z(M)  =>  mu = theta_1 and theta_e (e in im mu) satisfy the construction "
       "hypotheses, theta_x = theta_{mu(x)}",
       ("monoid", "central-idempotents", "idempotent"))
def _(c):
    t = c.t
    mu = t[c.one]
    try:
        _check_mu(c.S.with_identity(), mu)
    except HypothesisError as exc:
        return (exc.condition, exc.witness)
    for x in c.r:
        if t[x] != t[mu[x]]:
            return ("theta_x = theta_mu(x)", x)
    fam = {e: t[e] for e in set(mu)}
    return _family_violation(c.S, mu, fam)


# -- groups ---------------------------------------------------------------------

@_case("group.theorem-converse",
       "K = {x : theta_1(x) = 1} normal, im theta_1 transversal of G/K with 1, theta_1(x) in Kx, "
       "theta_x(y) = theta_1(x)^-1 theta_1(xy)", ("group",))
def _(c):
    from .construct import _cosets, _is_normal_subgroup
    t, m, one = c.t, c.m, c.one
    mu = t[one]
    inv = [next(y for y in c.r if m[x][y] == one) for x in c.r]
    K = frozenset(x for x in c.r if mu[x] == one)
    if not _is_normal_subgroup(c.S, K):
        return ("normality", tuple(sorted(K)))
    image = set(mu)
    if one not in image:
        return ("1 in image",)
    for coset in _cosets(c.S, K):
        if len(image.intersection(coset)) != 1:
            return ("transversal", coset)
    for x in c.r:
        if mu[x] not in {m[k][x] for k in K}:
            return ("theta_1(x) in Kx", x)
        for y in c.r:
            if t[x][y] != m[inv[mu[x]]][mu[m[x][y]]]:
                return ("formula", x, y)


# -- semigroup-level cases: whole solution sets --------------------------------

def _maps(c):
    return itertools.product(c.r, repeat=c.n)


def _is_endo(c, g):
    m = c.m
    return all(g[m[x][y]] == m[g[x]][g[y]] for x in c.r for y in c.r)


@_case("exs.endomorphism-solutions",
       "s(x, y) = (xy, gamma(y)) is a solution  <=>  gamma in End(X), gamma^2 = gamma; "
       "non-degenerate  <=>  gamma = id", level="semigroup")
def _(c):
    provided = set(c.sols)
    for g in _maps(c):
        tab = c.constant_rows(g)
        is_sol = tab in provided
        expected = _is_endo(c, g) and all(g[g[x]] == g[x] for x in c.r)
        if is_sol != expected:
            return ("solution", g)
        if is_sol and c.flags_of(tab)["nondegenerate"] != (g == c.identity_map):
            return ("non-degenerate", g)


@_case("exs.constant-solution",
       "e in E(X)  =>  s(x, y) = (xy, e) solution; idempotent  <=>  xye = xy for all x, y",
       level="semigroup")
def _(c):
    provided = set(c.sols)
    m = c.m
    for e in sorted(c.E):
        tab = c.constant_rows((e,) * c.n)
        if tab not in provided:
            return ("solution", e)
        expected = all(m[m[x][y]][e] == m[x][y] for x in c.r for y in c.r)
        if c.flags_of(tab)["idempotent"] != expected:
            return ("idempotent", e)


@_case("exs.variety-solution", "abc = bc  =>  s(x, y) = (xy, xy) idempotent solution",
       ("variety[abc=bc]",), level="semigroup")
def _(c):
    tab = c.m
    if tab not in set(c.sols) or not c.flags_of(tab)["idempotent"]:
        return ("(xy, xy)",)


@_case("exs.clifford-solution", "X Clifford  =>  s(x, y) = (xy, y^-1 y) idempotent solution",
       ("clifford",), level="semigroup")
def _(c):
    _, inv = is_clifford(c.S)
    tab = c.constant_rows(tuple(c.m[inv[y]][y] for y in c.r))
    if tab not in set(c.sols) or not c.flags_of(tab)["idempotent"]:
        return ("(xy, y^-1 y)",)


def _only(c, sols, expected):
    if list(sols) != [expected]:
        return ("found", len(sols), tuple(sols[:2]))


@_case("group.unique-idempotent", "G group  =>  s(x, y) = (xy, 1) only idempotent solution",
       ("group",), level="semigroup")
def _(c):
    return _only(c, c.idempotent_sols, c.constant_rows((c.one,) * c.n))


@_case("cancmon.unique-idempotent",
       "M cancellative  =>  s(x, y) = (xy, 1) only idempotent solution",
       ("cancellative-monoid",), level="semigroup")
def _(c):
    return _only(c, c.idempotent_sols, c.constant_rows((c.one,) * c.n))


@_case("mon.gamma-idempotent",
       "s(x, y) = (xy, gamma(y)) idempotent solution  <=>  gamma in End(M), gamma^2 = gamma, "
       "x gamma(x) = x", ("monoid",), level="semigroup")
def _(c):
    provided = set(c.sols)
    for g in _maps(c):
        tab = c.constant_rows(g)
        actual = tab in provided and c.flags_of(tab)["idempotent"]
        expected = _is_endo(c, g) and all(g[g[x]] == g[x] and c.m[x][g[x]] == x for x in c.r)
        if actual != expected:
            return (g,)


@_case("mon.identity-solution-idempotent-band",
       "s(x, y) = (xy, y) idempotent  <=>  M idempotent monoid", ("monoid",), level="semigroup")
def _(c):
    tab = c.constant_rows(c.identity_map)
    actual = tab in set(c.sols) and c.flags_of(tab)["idempotent"]
    if actual != (len(c.E) == c.n):
        return ("idempotent", actual, "band", len(c.E) == c.n)


@_case("mon.unique-cocommutative", "s(x, y) = (xy, y) only cocommutative solution",
       ("monoid",), level="semigroup")
def _(c):
    return _only(c, [t for t in sorted(c.sols) if c.flags_of(t)["cocommutative"]],
                 c.constant_rows(c.identity_map))


@_case("mon.unique-nondegenerate", "theta_x = id for the only non-degenerate solution",
       ("monoid",), level="semigroup")
def _(c):
    return _only(c, [t for t in sorted(c.sols) if c.flags_of(t)["nondegenerate"]],
                 c.constant_rows(c.identity_map))


@_case("mon.commutative-solutions",
       "commutative solutions = {theta_x = gamma : gamma in End(M), gamma^2 = gamma} "
       "if M commutative, none otherwise", ("monoid",), level="semigroup")
def _(c):
    actual = sorted(t for t in c.sols if c.flags_of(t)["commutative"])
    expected = []
    if is_commutative(c.S):
        expected = sorted(c.constant_rows(g) for g in _maps(c)
                          if _is_endo(c, g) and all(g[g[x]] == g[x] for x in c.r))
    if actual != expected:
        return ("found", len(actual), "expected", len(expected))


@_case("group.construction-complete",
       "solutions on G = those built from (K, R, mu)", ("group",), level="semigroup")
def _(c):
    built = [s.theta for s in enumerate_group_solutions(c.S.with_identity())]
    if sorted(c.sols) != built:
        return ("found", len(c.sols), "constructed", len(built))


@_case("group.iso-criterion",
       "f in Aut(G) is an isomorphism s -> r  <=>  f theta_1 = eta_1 f",
       ("group",), level="semigroup")
def _(c):
    one = c.one
    for t, u in itertools.product(sorted(c.sols), repeat=2):
        for f in c.autos:
            iso = transport_theta(t, f) == u
            crit = all(f[t[one][x]] == u[one][f[x]] for x in c.r)
            if iso != crit:
                return (t, u, f)


@_case("cimon.construction-complete",
       "E(M) in Z(M)  =>  idempotent solutions = those built from (mu, {theta_e})",
       ("monoid", "central-idempotents"), level="semigroup")
def _(c):
    built = [s.theta for s in enumerate_monoid_constructions(c.S.with_identity())]
    if c.idempotent_sols != built:
        return ("found", len(c.idempotent_sols), "constructed", len(built))


@_case("cimon.iso-implies-theta1",
       "E(M) in Z(M), idempotent s ~ r via f  =>  f theta_1 = eta_1 f",
       ("monoid", "central-idempotents"), level="semigroup")
def _(c):
    one = c.one
    for t, u in itertools.product(c.idempotent_sols, repeat=2):
        for f in c.autos:
            if transport_theta(t, f) == u and any(f[t[one][x]] != u[one][f[x]] for x in c.r):
                return (t, u, f)


# -- specific paper instances (matched up to isomorphism) ----------------------------

EXAMPLE_TABLES = (
    ((0, 0, 0), (0, 0, 0), (0, 0, 0)),   # (xy, 1)
    ((0, 1, 0), (0, 1, 0), (0, 1, 0)),   # (xy, gamma(y)), gamma(a) = a
    ((0, 1, 0), (0, 1, 2), (0, 1, 0)),   # theta_a(b) = b
)

EX5_TABLE = ((0, 0, 2), (0, 0, 2), (1, 1, 2))


def _transport_from(builder, c, table):
    f = isomorphisms(builder(), c.S)[0]
    return f, transport_theta(table, f)


@_case("example.three-idempotent",
       "a^2 = a, ab = a, b^2 = 1: exactly three idempotent solutions up to isomorphism, "
       "with the listed theta tables", ("iso:worked-example",), level="semigroup")
def _(c):
    reps = [t for t in c.idempotent_sols if canonical_theta(t, c.autos) == t]
    if len(reps) != 3:
        return ("classes", len(reps))
    classes = set()
    for tab in EXAMPLE_TABLES:
        _, tt = _transport_from(catalog.example_monoid, c, tab)
        if tt not in c.idempotent_sols:
            return ("missing", tab)
        classes.add(canonical_theta(tt, c.autos))
    if len(classes) != 3:
        return ("listed tables not pairwise non-isomorphic",)


@_case("example.ex5-solution",
       "ab = b idempotent commutative monoid: idempotent solution with theta_b(1) = a; "
       "three idempotent solutions share its theta_1", ("iso:ex5",), level="semigroup")
def _(c):
    f, tt = _transport_from(catalog.ex5_monoid, c, EX5_TABLE)
    one, a, b = f[0], f[1], f[2]
    if tt not in c.idempotent_sols or tt[b][one] != a:
        return ("solution",)
    same = [t for t in c.idempotent_sols if t[one] == tt[one]]
    if len(same) != 3:
        return ("sharing theta_1", len(same))


@_case("example.remark-unique-idempotent",
       "commutative monoid on {1, a, b}, E(M) = {1, a}, ab = a (read b^2 = a): "
       "only idempotent solution is (xy, 1)", ("iso:remark[b2=a]",), level="semigroup")
def _(c):
    return _only(c, c.idempotent_sols, c.constant_rows((c.one,) * c.n))


INTERPRETATION_NOTES = (
    "example.remark-unique-idempotent: b^2 is unspecified in the source statement; "
    "instantiated with b^2 = a (b^2 = 1 gives the worked-example monoid, which has "
    "three idempotent solutions).",
)


# -- running ------------------------------------------------------------------------

@dataclass
class CaseResult:
    id: str
    scope: str
    statement: str
    instances: int = 0
    passes: int = 0
    fails: int = 0
    skips: int = 0
    witnesses: list = field(default_factory=list)
    skip_reasons: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.fails == 0

    def summary_line(self) -> str:
        return (f"{self.id} scope={self.scope} instances={self.instances} "
                f"passes={self.passes} fails={self.fails} skips={self.skips}")


MAX_WITNESSES = 3


def evaluate(case: PropertyCase, inst: LabInstance):
    """``("skip", reason)``, ``("pass", None)`` or ``("fail", witness)``."""
    c = _Ctx(inst)
    reason = case.skip_reason(c)
    if reason is not None:
        return "skip", reason
    w = case.check(c)
    return ("pass", None) if w is None else ("fail", w)


def _run_case(args) -> CaseResult:
    case_id, instances = args
    case = CATALOG[case_id]
    res = CaseResult(case.id, case.scope, case.statement)
    for i, inst in enumerate(instances):
        if inst.level != case.level:
            continue
        res.instances += 1
        status, info = evaluate(case, inst)
        if status == "skip":
            res.skips += 1
            res.skip_reasons[info] += 1
        elif status == "pass":
            res.passes += 1
        else:
            res.fails += 1
            if len(res.witnesses) < MAX_WITNESSES:
                res.witnesses.append((i, info))
    return res


@dataclass
class LabReport:
    results: list[CaseResult]
    instance_count: int
    notes: tuple[str, ...] = INTERPRETATION_NOTES

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[CaseResult]:
        return [r for r in self.results if not r.ok]

    def to_text(self) -> str:
        lines = ["# property catalog", f"INSTANCES={self.instance_count}",
                 f"CASES={len(self.results)}"]
        for note in self.notes:
            lines.append(f"# note: {note}")
        lines.append("")
        for r in self.results:
            lines.append(f"## {r.id}  [{r.scope}]")
            lines.append(f"#   {r.statement}")
            lines.append(r.summary_line())
            for i, w in r.witnesses:
                lines.append(f"  FAIL instance={i} witness={w}")
            for reason, k in sorted(r.skip_reasons.items()):
                lines.append(f"  skipped {k}: {reason}")
        lines.append("")
        lines.append(f"FAILED_CASES={len(self.failures)}")
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        return "".join(r.summary_line() + "\n" for r in self.results)

    def to_json(self) -> dict:
        return {
            "instances": self.instance_count,
            "notes": list(self.notes),
            "cases": [{
                "id": r.id, "scope": r.scope, "statement": r.statement,
                "instances": r.instances, "passes": r.passes, "fails": r.fails,
                "skips": r.skips,
                "witnesses": [{"instance": i, "witness": repr(w)} for i, w in r.witnesses],
                "skip_reasons": dict(sorted(r.skip_reasons.items())),
            } for r in self.results],
            "failed_cases": len(self.failures),
        }


def run_catalog(instances: Sequence[LabInstance], case_ids: Sequence[str] | None = None,
                worker_count: int = 1) -> LabReport:
    """Evaluate every catalog case on every instance of its level."""
    ids = list(CATALOG) if case_ids is None else list(case_ids)
    instances = list(instances)
    jobs = [(cid, instances) for cid in ids]
    if worker_count > 1:
        with ProcessPoolExecutor(max_workers=worker_count) as ex:
            results = list(ex.map(_run_case, jobs))
    else:
        results = [_run_case(j) for j in jobs]
    return LabReport(results, len(instances))


def standard_instances(max_order: int = 3) -> list[LabInstance]:
    """Every semigroup of order up to ``max_order`` (up to isomorphism) with all its solutions."""
    out = []
    for n in range(1, max_order + 1):
        for S in enumerate_semigroups(n, cap=max(4, max_order)):
            tables = tuple(enumerate_theta_tables(S))
            out.append(LabInstance(S, None, tables))
            out.extend(LabInstance(S, t) for t in tables)
    return out


# -- mutation testing -------------------------------------------------------------------

@dataclass(frozen=True)
class MutationOutcome:
    case_id: str
    kind: str | None          # "fail", "skip" or None when nothing was flipped
    instance: int | None = None
    mutation: tuple | None = None
    detail: object = None


def _cell_mutations(t):
    n = len(t)
    for x in range(n):
        for y in range(n):
            for v in range(n):
                if v != t[x][y]:
                    rows = [list(r) for r in t]
                    rows[x][y] = v
                    yield (x, y, v), tuple(tuple(r) for r in rows)
    # whole-column rewrites reach tables whose rows all agree
    for y in range(n):
        for v in range(n):
            if any(t[x][y] != v for x in range(n)):
                rows = [list(r) for r in t]
                for r in rows:
                    r[y] = v
                yield ("column", y, v), tuple(tuple(r) for r in rows)


def _mutate_solution_case(case, instances):
    skip_hit = None
    for i, inst in enumerate(instances):
        if inst.level != "solution":
            continue
        if evaluate(case, inst)[0] != "pass":
            continue
        for mut, t2 in _cell_mutations(inst.theta):
            status, info = evaluate(case, LabInstance(inst.semigroup, t2))
            if status == "fail":
                return MutationOutcome(case.id, "fail", i, mut, info)
            if status == "skip" and skip_hit is None:
                skip_hit = MutationOutcome(case.id, "skip", i, mut, info)
    return skip_hit or MutationOutcome(case.id, None)


def _mutate_semigroup_case(case, instances):
    for i, inst in enumerate(instances):
        if inst.level != "semigroup" or evaluate(case, inst)[0] != "pass":
            continue
        sols = list(inst.solutions)
        for j in range(len(sols)):
            dropped = tuple(sols[:j] + sols[j + 1:])
            status, info = evaluate(case, LabInstance(inst.semigroup, None, dropped))
            if status == "fail":
                return MutationOutcome(case.id, "fail", i, ("drop", j), info)
        for j, t in enumerate(sols):
            for mut, t2 in _cell_mutations(t):
                if t2 in inst.solutions:
                    continue
                changed = tuple(sols[:j] + [t2] + sols[j + 1:])
                status, info = evaluate(case, LabInstance(inst.semigroup, None, changed))
                if status == "fail":
                    return MutationOutcome(case.id, "fail", i, ("cell", j) + mut, info)
    # no corruption fails: fall back to a hypothesis-violating instance
    for i, inst in enumerate(instances):
        if inst.level == "semigroup":
            status, info = evaluate(case, inst)
            if status == "skip":
                return MutationOutcome(case.id, "skip", i, ("out of scope",), info)
    return MutationOutcome(case.id, None)


def mutation_sweep(instances: Sequence[LabInstance],
                   case_ids: Sequence[str] | None = None) -> dict[str, MutationOutcome]:
    """For each case, the first single-point corruption of a passing instance it flags.

    Solution-level instances are corrupted by changing one theta cell;
    semigroup-level instances by dropping one solution from the set or
    changing one cell (or one column) of one member. A case counts as flipped
    when a corruption turns a pass into a fail, or failing that, when some
    instance violating its hypotheses is skipped with a reason.
    """
    instances = list(instances)
    out = {}
    for cid in (list(CATALOG) if case_ids is None else case_ids):
        case = CATALOG[cid]
        if case.level == "solution":
            out[cid] = _mutate_solution_case(case, instances)
        else:
            out[cid] = _mutate_semigroup_case(case, instances)
    return out


# -- focused checks -----------------------------------------------------------------------

def check_nondegenerate_monoid(M: FiniteSemigroup) -> CaseResult:
    """Confirm by enumeration that ``theta_x = id`` is the only non-degenerate solution."""
    if M.n > 4:
        raise ValueError("limited to order 4")
    tables = tuple(enumerate_theta_tables(M)) if find_identity(M) is not None else ()
    return _run_case(("mon.unique-nondegenerate", [LabInstance(M, None, tables)]))


def check_involutive_implies_cc(instances: Sequence[tuple]) -> CaseResult:
    """Every involutive solution among ``(semigroup, theta)`` pairs is commutative and cocommutative."""
    insts = [LabInstance(S, tuple(map(tuple, t))) for S, t in instances]
    return _run_case(("basics.involutive-commutative-cocommutative", insts))
