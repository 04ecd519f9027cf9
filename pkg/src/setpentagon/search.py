"""Exhaustive search for solutions on a fixed semigroup, and order-wide censuses.

The search fills the theta table row by row, cell by cell, in ascending value
order. Each assignment is propagated through (P1) and (P2): once ``theta_x(y)``
and ``theta_xy(z)`` are known, (P1) forces ``theta_x(yz)`` and (P2) ties the cell
``(theta_x(y), theta_xy(z))`` to ``(y, z)``. Active filters add cell domains and
forcing rules of their own, and every leaf is re-verified in full.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .semigroup import (DEFAULT_ORDER_CAP, DomainError, FiniteSemigroup, automorphisms,
                        enumerate_semigroups)
from .solution import (FLAG_NAMES, ClassificationFlags, PentagonSolution, canonical_theta,
                       classify_table, verify_pentagon_direct, verify_solution)

__all__ = [
    "SearchOptions", "enumerate_solutions", "enumerate_theta_tables",
    "count_by_flags", "CensusEntry", "CensusReport", "census",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchOptions:
    filter: frozenset[str] = frozenset()
    up_to_iso: bool = False
    worker_count: int = 1
    cap: int = DEFAULT_ORDER_CAP

    def __post_init__(self):
        object.__setattr__(self, "filter", frozenset(self.filter))
        unknown = self.filter - set(FLAG_NAMES)
        if unknown:
            raise ValueError(f"unknown filter flag(s): {sorted(unknown)}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")


class _ThetaSearch:
    def __init__(self, S: FiniteSemigroup, filters=frozenset()):
        self.S = S
        self.filters = frozenset(filters)
        n = self.n = S.n
        m = self.m = S.mul
        N = n * n
        self.theta = [-1] * N

        # (x, y, z) triples keyed by the cells that activate them
        self.watch: list[list[tuple[int, int, int]]] = [[] for _ in range(N)]
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    t = (x, y, z)
                    a, b, d = x * n + y, m[x][y] * n + z, y * n + z
                    self.watch[a].append(t)
                    if b != a:
                        self.watch[b].append(t)
                    if d != a and d != b:
                        self.watch[d].append(t)

        dom = [list(range(n)) for _ in range(N)]
        f = self.filters
        for x in range(n):
            for y in range(n):
                xy = m[x][y]
                k = x * n + y
                if "idempotent" in f:
                    dom[k] = [v for v in dom[k] if m[xy][v] == xy]
                if "involutive" in f:
                    dom[k] = [v for v in dom[k] if m[xy][v] == x]
                if "cocommutative" in f:
                    dom[k] = [v for v in dom[k] if all(m[w][v] == m[w][y] for w in range(n))]
        self.domain = dom
        self.domain_sets = [frozenset(d) for d in dom]

        # rows forced equal by theta_x = theta_xy
        self.row_class = None
        if "commutative" in f:
            parent = list(range(n))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a
            for x in range(n):
                for y in range(n):
                    parent[find(x)] = find(m[x][y])
            self.row_class = [[r for r in range(n) if find(r) == find(x)] for x in range(n)]
        self.trail: list[int] = []

    def _assign(self, k: int, v: int, queue: list[int]) -> bool:
        th = self.theta
        cur = th[k]
        if cur >= 0:
            return cur == v
        if v not in self.domain_sets[k]:
            return False
        if "nondegenerate" in self.filters:
            n = self.n
            row = k - k % n
            if v in th[row:row + n]:
                return False
        th[k] = v
        self.trail.append(k)
        queue.append(k)
        return True

    def _propagate(self, queue: list[int]) -> bool:
        th, m, n, f = self.theta, self.m, self.n, self.filters
        assign = self._assign
        while queue:
            k = queue.pop()
            x0, y0 = divmod(k, n)
            v0 = th[k]
            xy0 = m[x0][y0]
            if "idempotent" in f and not assign(xy0 * n + v0, v0, queue):
                return False
            if "involutive" in f and not assign(xy0 * n + v0, y0, queue):
                return False
            if self.row_class is not None:
                for r in self.row_class[x0]:
                    if not assign(r * n + y0, v0, queue):
                        return False
            for x, y, z in self.watch[k]:
                a = th[x * n + y]
                if a < 0:
                    continue
                b = th[m[x][y] * n + z]
                if b < 0:
                    continue
                if not assign(x * n + m[y][z], m[a][b], queue):
                    return False
                d, e = y * n + z, a * n + b
                vd, ve = th[d], th[e]
                if vd >= 0:
                    if not assign(e, vd, queue):
                        return False
                elif ve >= 0:
                    if not assign(d, ve, queue):
                        return False
        return True

    def _undo(self, mark: int):
        th, trail = self.theta, self.trail
        while len(trail) > mark:
            th[trail.pop()] = -1

    def _leaf_ok(self) -> bool:
        n = self.n
        t = tuple(tuple(self.theta[i * n:(i + 1) * n]) for i in range(n))
        if not verify_solution(self.S, t).ok:
            return False
        if self.filters:
            flags = classify_table(self.S, t, cross_check=False)
            return all(getattr(flags, name) for name in self.filters)
        return True

    def _current(self):
        n = self.n
        return tuple(tuple(self.theta[i * n:(i + 1) * n]) for i in range(n))

    def run(self, prefix=None, stop_after=None):
        """Yield complete tables, or partial states once ``stop_after`` cells are fixed.

        ``prefix`` is a flat list of values for the first cells.
        """
        if "commutative" in self.filters:
            m, r = self.m, range(self.n)
            if any(m[m[x][z]][y] != m[m[x][y]][z] for x in r for y in r for z in r):
                return
        queue: list[int] = []
        if prefix:
            for k, v in enumerate(prefix):
                if not self._assign(k, v, queue) or not self._propagate(queue):
                    return
        yield from self._rec(0, stop_after)

    def _rec(self, k, stop_after):
        N = self.n * self.n
        th = self.theta
        while k < N and th[k] >= 0:
            k += 1
        if stop_after is not None and k >= stop_after:
            yield tuple(th[:stop_after])
            return
        if k == N:
            if self._leaf_ok():
                yield self._current()
            return
        for v in self.domain[k]:
            mark = len(self.trail)
            queue: list[int] = []
            if self._assign(k, v, queue) and self._propagate(queue):
                yield from self._rec(k + 1, stop_after)
            self._undo(mark)


def _solve_prefix(args):
    table, identity, filters, prefix = args
    S = FiniteSemigroup(table, identity)
    return list(_ThetaSearch(S, filters).run(prefix=list(prefix)))


def enumerate_theta_tables(S: FiniteSemigroup, filters=frozenset(), worker_count: int = 1):
    """Every theta table forming a solution on ``S`` with the given flags, sorted."""
    filters = frozenset(filters)
    if worker_count <= 1:
        return sorted(_ThetaSearch(S, filters).run())
    # partition by the first theta row
    prefixes = list(_ThetaSearch(S, filters).run(stop_after=S.n))
    jobs = [(S.mul, S.identity, filters, p) for p in prefixes]
    with ProcessPoolExecutor(max_workers=worker_count) as ex:
        parts = list(ex.map(_solve_prefix, jobs))
    return sorted(t for part in parts for t in part)


def enumerate_solutions(S: FiniteSemigroup, opts: SearchOptions | None = None,
                        **kwargs) -> list[PentagonSolution]:
    """All solutions on ``S`` passing the filters, in lexicographic theta order.

    With ``up_to_iso`` only the lexicographically least table of each
    ``Aut(S)`` orbit is kept.
    """
    opts = opts or SearchOptions(**kwargs)
    if S.n > opts.cap:
        raise DomainError(f"order {S.n} exceeds the search cap {opts.cap}")
    tables = enumerate_theta_tables(S, opts.filter, opts.worker_count)
    if opts.up_to_iso:
        autos = automorphisms(S)
        tables = [t for t in tables if canonical_theta(t, autos) == t]
    return [PentagonSolution(S, t) for t in tables]


def count_by_flags(S: FiniteSemigroup, opts: SearchOptions | None = None,
                   **kwargs) -> Counter:
    """Number of solutions for each combination of classification flags."""
    sols = enumerate_solutions(S, opts, **kwargs)
    return Counter(classify_table(S, s.theta) for s in sols)


@dataclass
class CensusEntry:
    semigroup: FiniteSemigroup
    raw_count: int
    representatives: list[PentagonSolution]
    histogram: Counter

    @property
    def iso_count(self) -> int:
        return len(self.representatives)


@dataclass
class CensusReport:
    order: int
    entries: list[CensusEntry]
    elapsed: float = 0.0
    filter: frozenset[str] = field(default_factory=frozenset)

    @property
    def total(self) -> int:
        return sum(e.iso_count for e in self.entries)

    @property
    def raw_total(self) -> int:
        return sum(e.raw_count for e in self.entries)

    @property
    def labeled_total(self) -> int:
        """Solutions on the labeled set: each class counted ``n!/|Aut|`` times."""
        from math import factorial
        out = 0
        for e in self.entries:
            autos = automorphisms(e.semigroup)
            out += e.raw_count * factorial(self.order) // len(autos)
        return out

    def to_text(self) -> str:
        lines = [f"# census of solutions on semigroups of order {self.order}",
                 f"SEMIGROUP_CLASSES={len(self.entries)}"]
        if self.filter:
            lines.append(f"FILTER={','.join(sorted(self.filter))}")
        for i, e in enumerate(self.entries):
            S = e.semigroup
            lines.append("")
            ident = "-" if S.identity is None else str(S.identity)
            lines.append(f"[semigroup {i}] table={' '.join(''.join(map(str, r)) for r in S.mul)} "
                         f"identity={ident}")
            lines.append(f"solutions={e.raw_count} iso_classes={e.iso_count}")
            for flags, c in sorted(e.histogram.items(), key=lambda kv: kv[0].label()):
                lines.append(f"  flags[{flags.label()}]={c}")
            for s in e.representatives:
                lines.append("  theta=" + " ".join("".join(map(str, r)) for r in s.theta))
        lines.append("")
        lines.append(f"RAW_SOLUTIONS={self.raw_total}")
        lines.append(f"LABELED_SOLUTIONS={self.labeled_total}")
        lines.append(f"TOTAL_ISO_CLASSES={self.total}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "filter": sorted(self.filter),
            "semigroup_classes": len(self.entries),
            "entries": [{
                "mul": [list(r) for r in e.semigroup.mul],
                "identity": e.semigroup.identity,
                "solutions": e.raw_count,
                "iso_classes": e.iso_count,
                "histogram": {k.label(): v for k, v in
                              sorted(e.histogram.items(), key=lambda kv: kv[0].label())},
                "representatives": [[list(r) for r in s.theta] for s in e.representatives],
            } for e in self.entries],
            "raw_solutions": self.raw_total,
            "labeled_solutions": self.labeled_total,
            "total_iso_classes": self.total,
        }


def census(order: int = 3, filters=frozenset(), worker_count: int = 1,
           allow_large: bool = False) -> CensusReport:
    """Solutions up to isomorphism over every semigroup class of the given order."""
    if order > 3 and not allow_large:
        raise DomainError(f"census of order {order} needs allow_large=True (long runtime)")
    started = time.perf_counter()
    entries = []
    for S in enumerate_semigroups(order, cap=max(order, DEFAULT_ORDER_CAP)):
        tables = enumerate_theta_tables(S, filters, worker_count)
        autos = automorphisms(S)
        reps = [PentagonSolution(S, t) for t in tables if canonical_theta(t, autos) == t]
        hist = Counter(classify_table(S, t) for t in tables)
        for s in reps:
            assert verify_pentagon_direct(S, s.theta)
        entries.append(CensusEntry(S, len(tables), reps, hist))
    report = CensusReport(order, entries, time.perf_counter() - started, frozenset(filters))
    log.info("census order %d: %d classes in %.2fs", order, report.total, report.elapsed)
    return report
