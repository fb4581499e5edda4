"""Inverse-monoid recognition and its order-theoretic apparatus.

Covers unique generalized inverses, the idempotent semilattice, the natural
partial order, the minimum group congruence, and the E-unitary / F-inverse /
Clifford predicates with explicit counterexample witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Congruence,
    FiniteMonoid,
    MonoidMap,
    is_group,
    make_congruence,
    make_monoid_map,
    quotient,
    validate_monoid,
)
from .errors import (
    EquivalenceMismatch,
    IdempotentsDoNotCommute,
    InternalCharacterizationFailure,
    NoInverse,
    NonUniqueInverse,
    NotACongruence,
    NotASemilattice,
    OrderAxiomViolation,
)


@dataclass(frozen=True)
class InverseMonoid:
    base: FiniteMonoid
    inv: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def id(self) -> int:
        return self.base.id

    def mul(self, x: int, y: int) -> int:
        return self.base.table[x][y]

    def label(self, x: int) -> str:
        return self.base.label(x)


@dataclass(frozen=True)
class SemilatticeMonoid:
    """Commutative idempotent monoid; multiplication is meet, identity is top."""

    base: FiniteMonoid
    order: tuple[tuple[bool, ...], ...]  # order[x][y] iff x <= y

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def top(self) -> int:
        return self.base.id

    def meet(self, x: int, y: int) -> int:
        return self.base.table[x][y]

    def leq(self, x: int, y: int) -> bool:
        return self.order[x][y]


@dataclass(frozen=True)
class NaturalOrder:
    monoid: InverseMonoid
    leq: tuple[tuple[bool, ...], ...]

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.monoid.n)
                for y in range(self.monoid.n) if self.leq[x][y]]


@dataclass(frozen=True)
class EUnitaryResult:
    holds: bool
    witness: tuple[int, int] | None = None  # (x, e) with x*e idempotent, x not


@dataclass(frozen=True)
class FInverseResult:
    holds: bool
    sigma: Congruence
    selector: tuple[int, ...] | None = None  # class index -> greatest element
    witness_class: int | None = None
    witness_maximals: tuple[int, ...] | None = None


@dataclass(frozen=True)
class CliffordResult:
    holds: bool
    witness: tuple[int, int] | None = None  # (e, x) failing to commute


def validate_inverse(m: FiniteMonoid) -> InverseMonoid:
    """Accept iff each element has exactly one generalized inverse."""
    inv = []
    for x in range(m.n):
        cands = [y for y in range(m.n)
                 if m.mul(m.mul(x, y), x) == x and m.mul(m.mul(y, x), y) == y]
        if not cands:
            raise NoInverse(x)
        if len(cands) > 1:
            raise NonUniqueInverse(x, cands)
        inv.append(cands[0])
    # Cross-check: commuting idempotents characterize inverse semigroups, so a
    # violation here means the table is corrupt, not that the input is bad.
    idem = m.idempotents()
    for e in idem:
        for f in idem:
            if m.mul(e, f) != m.mul(f, e):
                raise IdempotentsDoNotCommute(e, f)
    return InverseMonoid(base=m, inv=tuple(inv))


def validate_semilattice(m: FiniteMonoid) -> SemilatticeMonoid:
    for x in range(m.n):
        if m.mul(x, x) != x:
            raise NotASemilattice("not idempotent", x)
        for y in range(m.n):
            if m.mul(x, y) != m.mul(y, x):
                raise NotASemilattice("not commutative", (x, y))
    order = tuple(tuple(m.mul(x, y) == x for y in range(m.n)) for x in range(m.n))
    for x in range(m.n):
        if not order[x][m.id]:
            raise NotASemilattice("identity is not the top", x)
    return SemilatticeMonoid(base=m, order=order)


def idempotent_semilattice(m: InverseMonoid) -> tuple[SemilatticeMonoid, MonoidMap]:
    """E(M) as a monoid in its own right, with the inclusion into M."""
    idem = m.base.idempotents()
    iset = set(idem)
    for e in idem:
        for f in idem:
            if m.mul(e, f) not in iset:
                raise InternalCharacterizationFailure(
                    f"idempotents not closed under product at ({e},{f})")
    pos = {e: i for i, e in enumerate(idem)}
    table = [[pos[m.mul(e, f)] for f in idem] for e in idem]
    labels = tuple(m.label(e) for e in idem)
    sub = validate_monoid(len(idem), table, pos[m.id], labels)
    semi = validate_semilattice(sub)
    emb = make_monoid_map(sub, m.base, idem)
    return semi, emb


def natural_order(m: InverseMonoid) -> NaturalOrder:
    """x <= y iff x = e*y for some idempotent e."""
    idem = m.base.idempotents()
    leq = [[False] * m.n for _ in range(m.n)]
    for y in range(m.n):
        for e in idem:
            leq[m.mul(e, y)][y] = True
    for x in range(m.n):
        if not leq[x][x]:
            raise OrderAxiomViolation("reflexivity", x)
        for y in range(m.n):
            if leq[x][y] and leq[y][x] and x != y:
                raise OrderAxiomViolation("antisymmetry", (x, y))
            if leq[x][y]:
                for z in range(m.n):
                    if leq[y][z] and not leq[x][z]:
                        raise OrderAxiomViolation("transitivity", (x, y, z))
    return NaturalOrder(monoid=m, leq=tuple(tuple(r) for r in leq))


def min_group_congruence(m: InverseMonoid) -> Congruence:
    """a ~ b iff e*a = e*b for some idempotent e; quotient is the greatest group image."""
    idem = m.base.idempotents()
    parent = list(range(m.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(m.n):
        for b in range(a + 1, m.n):
            if any(m.mul(e, a) == m.mul(e, b) for e in idem):
                parent[find(a)] = find(b)
    class_of = [find(x) for x in range(m.n)]
    try:
        sigma = make_congruence(m.base, class_of)
    except NotACongruence as exc:
        raise InternalCharacterizationFailure(
            f"sigma relation is not a congruence: {exc}") from exc
    q, _ = quotient(m.base, sigma)
    if not is_group(q):
        raise InternalCharacterizationFailure("sigma quotient is not a group")
    return sigma


def is_e_unitary(m: InverseMonoid) -> EUnitaryResult:
    """x*e idempotent with e idempotent must force x idempotent."""
    idem = m.base.idempotents()
    iset = set(idem)
    for x in range(m.n):
        if x in iset:
            continue
        for e in idem:
            if m.mul(x, e) in iset:
                return EUnitaryResult(holds=False, witness=(x, e))
    return EUnitaryResult(holds=True)


def is_f_inverse(m: InverseMonoid) -> FInverseResult:
    """Every sigma class must contain a greatest element under the natural order.

    For a finite class this is the same as having a unique maximal element;
    on failure the offending class and its incomparable maximals are returned.
    """
    sigma = min_group_congruence(m)
    order = natural_order(m)
    selector = []
    for c, members in enumerate(sigma.classes()):
        maximals = [x for x in members
                    if not any(order.leq[x][y] for y in members if y != x)]
        if len(maximals) != 1:
            return FInverseResult(holds=False, sigma=sigma,
                                  witness_class=c,
                                  witness_maximals=tuple(maximals))
        top = maximals[0]
        if not all(order.leq[y][top] for y in members):
            raise OrderAxiomViolation("unique maximal is not greatest", (c, top))
        selector.append(top)
    return FInverseResult(holds=True, sigma=sigma, selector=tuple(selector))


def is_clifford(m: InverseMonoid) -> CliffordResult:
    """Idempotents must be central; cross-checked against x*inv(x) = inv(x)*x."""
    witness = None
    for e in m.base.idempotents():
        for x in range(m.n):
            if m.mul(e, x) != m.mul(x, e):
                witness = (e, x)
                break
        if witness:
            break
    alt = all(m.mul(x, m.inv[x]) == m.mul(m.inv[x], x) for x in range(m.n))
    if alt != (witness is None):
        bad = next(x for x in range(m.n)
                   if m.mul(x, m.inv[x]) != m.mul(m.inv[x], x))
        raise EquivalenceMismatch(bad)
    return CliffordResult(holds=witness is None, witness=witness)
