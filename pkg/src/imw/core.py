"""Finite monoids as dense multiplication tables.

Elements are the indices 0..n-1; ``table[x][y]`` is the product x*y. Labels
are cosmetic. All structures are immutable once validated and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    IndexOutOfRange,
    NotACongruence,
    NotAssociative,
    NotHomomorphism,
    NotIdentity,
)


@dataclass(frozen=True)
class FiniteMonoid:
    n: int
    table: tuple[tuple[int, ...], ...]
    id: int
    labels: tuple[str, ...] | None = None

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    @property
    def elements(self) -> range:
        return range(self.n)

    def is_idempotent(self, x: int) -> bool:
        return self.table[x][x] == x

    def idempotents(self) -> list[int]:
        return [x for x in range(self.n) if self.table[x][x] == x]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)


@dataclass(frozen=True)
class MonoidMap:
    """A total map between monoids; ``kind`` records whether it is multiplicative."""

    source: FiniteMonoid
    target: FiniteMonoid
    values: tuple[int, ...]
    kind: str = "homomorphism"  # or "function"

    def __call__(self, x: int) -> int:
        return self.values[x]

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target.n


@dataclass(frozen=True)
class Congruence:
    """Partition of a monoid compatible with multiplication.

    ``class_of`` uses contiguous class indices numbered by first occurrence,
    which makes equal congruences compare equal.
    """

    monoid: FiniteMonoid
    class_of: tuple[int, ...]
    num_classes: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out


def validate_monoid(n: int, table: Sequence[Sequence[int]], id: int,
                    labels: Sequence[str] | None = None) -> FiniteMonoid:
    """Check closure, identity and associativity exhaustively; O(n^3)."""
    if n <= 0:
        raise IndexOutOfRange("element count", n, 0)
    if len(table) != n:
        raise IndexOutOfRange("row count", len(table), n + 1)
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise IndexOutOfRange(f"row {i} length", len(row), n + 1)
        for v in row:
            if not (0 <= int(v) < n):
                raise IndexOutOfRange(f"table[{i}]", int(v), n)
        rows.append(tuple(int(v) for v in row))
    t = tuple(rows)
    if not (0 <= id < n):
        raise IndexOutOfRange("identity index", id, n)
    for x in range(n):
        if t[id][x] != x or t[x][id] != x:
            raise NotIdentity(id, x)
    for x in range(n):
        tx = t[x]
        for y in range(n):
            txy = t[tx[y]]
            ty = t[y]
            for z in range(n):
                if txy[z] != tx[ty[z]]:
                    raise NotAssociative(x, y, z)
    lab = tuple(str(s) for s in labels) if labels is not None else None
    if lab is not None and len(lab) != n:
        raise IndexOutOfRange("label count", len(lab), n + 1)
    return FiniteMonoid(n=n, table=t, id=id, labels=lab)


def make_monoid_map(source: FiniteMonoid, target: FiniteMonoid,
                    values: Sequence[int], kind: str = "homomorphism") -> MonoidMap:
    vals = tuple(int(v) for v in values)
    if len(vals) != source.n:
        raise IndexOutOfRange("map length", len(vals), source.n + 1)
    for v in vals:
        if not (0 <= v < target.n):
            raise IndexOutOfRange("map value", v, target.n)
    if kind == "homomorphism":
        if vals[source.id] != target.id:
            raise NotHomomorphism(source.id)
        for x in range(source.n):
            for y in range(source.n):
                if vals[source.mul(x, y)] != target.mul(vals[x], vals[y]):
                    raise NotHomomorphism(x, y)
    elif kind != "function":
        raise ValueError(f"unknown map kind {kind!r}")
    return MonoidMap(source=source, target=target, values=vals, kind=kind)


def identity_map(m: FiniteMonoid) -> MonoidMap:
    return MonoidMap(source=m, target=m, values=tuple(range(m.n)))


def make_congruence(m: FiniteMonoid, class_of: Sequence[int]) -> Congruence:
    """Canonicalize a class vector and verify compatibility with the table."""
    if len(class_of) != m.n:
        raise IndexOutOfRange("class vector length", len(class_of), m.n + 1)
    renum: dict[int, int] = {}
    canon = []
    for c in class_of:
        if c not in renum:
            renum[c] = len(renum)
        canon.append(renum[c])
    k = len(renum)
    # Compatibility is equivalent to the product class being a function of
    # the factor classes.
    seen: dict[tuple[int, int], tuple[int, int, int]] = {}
    for x in range(m.n):
        for y in range(m.n):
            key = (canon[x], canon[y])
            c = canon[m.mul(x, y)]
            prev = seen.get(key)
            if prev is None:
                seen[key] = (c, x, y)
            elif prev[0] != c:
                raise NotACongruence(((prev[1], prev[2]), (x, y)))
    return Congruence(monoid=m, class_of=tuple(canon), num_classes=k)


def identity_congruence(m: FiniteMonoid) -> Congruence:
    return make_congruence(m, list(range(m.n)))


def universal_congruence(m: FiniteMonoid) -> Congruence:
    return make_congruence(m, [0] * m.n)


def quotient(m: FiniteMonoid, theta: Congruence) -> tuple[FiniteMonoid, MonoidMap]:
    """Quotient monoid on the classes of ``theta`` plus the projection map."""
    if theta.monoid is not m and theta.monoid != m:
        raise NotACongruence("congruence belongs to a different monoid")
    cls = theta.class_of
    k = theta.num_classes
    reps = [-1] * k
    for x in range(m.n):
        if reps[cls[x]] < 0:
            reps[cls[x]] = x
    qt = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(k):
            qt[a][b] = cls[m.mul(reps[a], reps[b])]
    # Well-definedness over every representative pair, not just the chosen ones.
    for x in range(m.n):
        for y in range(m.n):
            if cls[m.mul(x, y)] != qt[cls[x]][cls[y]]:
                raise NotACongruence(((reps[cls[x]], reps[cls[y]]), (x, y)))
    labels = tuple(f"[{m.label(reps[a])}]" for a in range(k))
    q = validate_monoid(k, qt, cls[m.id], labels)
    qmap = make_monoid_map(m, q, cls)
    return q, qmap


def direct_product(a: FiniteMonoid, b: FiniteMonoid) -> FiniteMonoid:
    """Componentwise product; element (x,y) is encoded as x*b.n + y."""
    n = a.n * b.n
    table = [[0] * n for _ in range(n)]
    for x1 in range(a.n):
        for y1 in range(b.n):
            i = x1 * b.n + y1
            for x2 in range(a.n):
                row = a.table[x1][x2] * b.n
                for y2 in range(b.n):
                    table[i][x2 * b.n + y2] = row + b.table[y1][y2]
    labels = tuple(f"({a.label(x)},{b.label(y)})"
                   for x in range(a.n) for y in range(b.n))
    return validate_monoid(n, table, a.id * b.n + b.id, labels)


def generated_submonoid(m: FiniteMonoid, subset: Sequence[int]) \
        -> tuple[FiniteMonoid, MonoidMap]:
    """Closure of ``subset`` (plus the identity) with its inclusion into ``m``."""
    elems = set(int(x) for x in subset)
    for x in elems:
        if not (0 <= x < m.n):
            raise IndexOutOfRange("generator", x, m.n)
    elems.add(m.id)
    frontier = list(elems)
    while frontier:
        x = frontier.pop()
        for y in list(elems):
            for p in (m.mul(x, y), m.mul(y, x)):
                if p not in elems:
                    elems.add(p)
                    frontier.append(p)
    order = sorted(elems)
    pos = {x: i for i, x in enumerate(order)}
    table = [[pos[m.mul(x, y)] for y in order] for x in order]
    labels = tuple(m.label(x) for x in order)
    sub = validate_monoid(len(order), table, pos[m.id], labels)
    emb = make_monoid_map(sub, m, order)
    return sub, emb


def is_group(m: FiniteMonoid) -> bool:
    """True iff every element has a two-sided inverse."""
    for x in range(m.n):
        if not any(m.mul(x, y) == m.id and m.mul(y, x) == m.id for y in range(m.n)):
            return False
    return True
