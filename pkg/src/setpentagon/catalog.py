"""Named small semigroups, monoids and groups used throughout the tests and the lab."""
from __future__ import annotations

import itertools

from .semigroup import FiniteSemigroup, find_identity

__all__ = [
    "cyclic_group", "direct_product", "dihedral_group", "quaternion_group",
    "small_groups", "null_semigroup", "left_zero", "right_zero", "chain_semilattice",
    "clifford_z2_zero", "example_monoid", "ex5_monoid", "remark_monoid",
    "from_function",
]


def from_function(elements, op, identity=None) -> FiniteSemigroup:
    """Cayley table of ``op`` on an explicit element list (indexed in list order)."""
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[op(a, b)] for b in elements) for a in elements)
    if identity is not None:
        return FiniteSemigroup(table, index[identity])
    return FiniteSemigroup(table, find_identity(table))


def cyclic_group(n: int) -> FiniteSemigroup:
    return from_function(range(n), lambda a, b: (a + b) % n, identity=0)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    pairs = list(itertools.product(S.elements, T.elements))
    return from_function(pairs, lambda p, q: (S.mul[p[0]][q[0]], T.mul[p[1]][q[1]]))


def dihedral_group(k: int) -> FiniteSemigroup:
    """Symmetries of the k-gon, order ``2k``; elements ``(flip, rotation)``."""
    def op(a, b):
        (s1, r1), (s2, r2) = a, b
        return ((s1 + s2) % 2, ((-r1 if s2 else r1) + r2) % k)
    return from_function([(s, r) for s in range(2) for r in range(k)], op, identity=(0, 0))


def quaternion_group() -> FiniteSemigroup:
    # unit quaternions {±1, ±i, ±j, ±k} as (sign, basis) with basis 0..3 = 1,i,j,k
    unit = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
            (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
            (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
            (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}

    def op(a, b):
        sign, basis = unit[(a[1], b[1])]
        return (a[0] * b[0] * sign, basis)
    return from_function([(s, b) for s in (1, -1) for b in range(4)], op, identity=(1, 0))


def small_groups(max_order: int = 8) -> list[tuple[str, FiniteSemigroup]]:
    """One representative of every group of order at most 8."""
    z = cyclic_group
    groups = [
        ("Z1", z(1)), ("Z2", z(2)), ("Z3", z(3)), ("Z4", z(4)),
        ("Z2xZ2", direct_product(z(2), z(2))), ("Z5", z(5)), ("Z6", z(6)),
        ("S3", dihedral_group(3)), ("Z7", z(7)), ("Z8", z(8)),
        ("Z2xZ4", direct_product(z(2), z(4))),
        ("Z2xZ2xZ2", direct_product(direct_product(z(2), z(2)), z(2))),
        ("D4", dihedral_group(4)), ("Q8", quaternion_group()),
    ]
    return [(name, G) for name, G in groups if G.n <= max_order]


def null_semigroup(n: int) -> FiniteSemigroup:
    """``xy = 0`` for all ``x, y``."""
    return FiniteSemigroup(tuple((0,) * n for _ in range(n)))


def left_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple((x,) * n for x in range(n)))


def right_zero(n: int) -> FiniteSemigroup:
    return FiniteSemigroup(tuple(tuple(range(n)) for _ in range(n)))


def chain_semilattice(n: int) -> FiniteSemigroup:
    """``xy = min(x, y)``; identity ``n - 1``."""
    return from_function(range(n), min, identity=n - 1)


def clifford_z2_zero() -> FiniteSemigroup:
    """``Z2`` with an adjoined absorbing zero; elements ``0`` (zero), ``1``, ``2`` (= 1 + 1 in Z2 terms)."""
    # 1 is the group identity, 2 the generator
    def op(a, b):
        if a == 0 or b == 0:
            return 0
        return 1 if a == b else 2
    return from_function([0, 1, 2], op, identity=1)


# Paper-style three-element monoids on {1, a, b}, indexed 1 -> 0, a -> 1, b -> 2.
def _monoid_1ab(a2, ab, ba, b2) -> FiniteSemigroup:
    one, a, b = 0, 1, 2
    table = [[0, 1, 2], [1, a2, ab], [2, ba, b2]]
    return FiniteSemigroup(tuple(map(tuple, table)), one)


def example_monoid() -> FiniteSemigroup:
    """Commutative monoid with ``a^2 = a``, ``ab = a``, ``b^2 = 1``."""
    return _monoid_1ab(a2=1, ab=1, ba=1, b2=0)


def ex5_monoid() -> FiniteSemigroup:
    """Idempotent commutative monoid with ``ab = b``."""
    return _monoid_1ab(a2=1, ab=2, ba=2, b2=2)


def remark_monoid() -> FiniteSemigroup:
    """Commutative monoid with idempotents ``{1, a}``, ``ab = a``, read with ``b^2 = a``."""
    return _monoid_1ab(a2=1, ab=1, ba=1, b2=1)
