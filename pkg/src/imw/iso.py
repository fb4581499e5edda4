"""Certified isomorphism checking.

``verify_iso`` confirms an explicitly given pair of maps; ``brute_force_iso``
searches for one from scratch and is the independent oracle the construction
theorems are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .core import FiniteMonoid, MonoidMap, make_monoid_map
from .errors import NotInverse, SizeLimitExceeded

DEFAULT_ISO_LIMIT = 12


@dataclass(frozen=True)
class IsoWitness:
    a: FiniteMonoid
    b: FiniteMonoid
    forward: MonoidMap
    backward: MonoidMap


def verify_iso(a: FiniteMonoid, b: FiniteMonoid,
               forward: Sequence[int], backward: Sequence[int]) -> IsoWitness:
    """Check homomorphy of both maps and that they compose to the identities."""
    fwd = make_monoid_map(a, b, forward)
    bwd = make_monoid_map(b, a, backward)
    for x in range(a.n):
        if bwd.values[fwd.values[x]] != x:
            raise NotInverse(x, "backward∘forward")
    for y in range(b.n):
        if fwd.values[bwd.values[y]] != y:
            raise NotInverse(y, "forward∘backward")
    return IsoWitness(a=a, b=b, forward=fwd, backward=bwd)


def element_profile(m: FiniteMonoid, x: int) -> tuple[bool, int, int, int]:
    """Cheap isomorphism invariant: (idempotent?, power index, power period, #generalized inverses)."""
    seen = {x: 1}
    p = x
    k = 1
    while True:
        p = m.mul(p, x)
        k += 1
        if p in seen:
            index, period = seen[p], k - seen[p]
            break
        seen[p] = k
    geninv = sum(1 for y in range(m.n)
                 if m.mul(m.mul(x, y), x) == x and m.mul(m.mul(y, x), y) == y)
    return (m.is_idempotent(x), index, period, geninv)


def _search(a: FiniteMonoid, b: FiniteMonoid,
            candidates: list[list[int]]) -> list[int] | None:
    n = a.n
    fwd = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        # Check every multiplication instance that the new assignment
        # completes: x may appear as a factor or as the product.
        for u in range(x + 1):
            fu = fwd[u]
            for (p, q) in ((u, x), (x, u)):
                r = a.mul(p, q)
                if fwd[r] >= 0 and fwd[r] != b.mul(fwd[p], fwd[q]):
                    return False
            for q in range(x + 1):
                if a.mul(u, q) == x and b.mul(fu, fwd[q]) != fwd[x]:
                    return False
        return True

    def assign(depth: int) -> bool:
        if depth == n:
            return True
        x = depth
        for img in candidates[x]:
            if used[img]:
                continue
            fwd[x] = img
            used[img] = True
            if consistent(x) and assign(depth + 1):
                return True
            fwd[x] = -1
            used[img] = False
        return False

    return list(fwd) if assign(0) else None


def brute_force_iso(a: FiniteMonoid, b: FiniteMonoid,
                    max_n: int = DEFAULT_ISO_LIMIT,
                    pruning: bool = True) -> IsoWitness | None:
    """First isomorphism found in a deterministic backtracking order, or None.

    With ``pruning=False`` every bijection is tried; that mode exists purely
    as a slow oracle to validate the pruned search on small instances.
    """
    if a.n != b.n:
        return None
    n = a.n
    if n > max_n:
        raise SizeLimitExceeded(n, max_n)

    if not pruning:
        rng = list(range(n))
        for perm in permutations(rng):
            if perm[a.id] != b.id:
                continue
            if all(perm[a.mul(x, y)] == b.mul(perm[x], perm[y])
                   for x in rng for y in rng):
                back = [0] * n
                for x, y in enumerate(perm):
                    back[y] = x
                return verify_iso(a, b, list(perm), back)
        return None

    prof_a = [element_profile(a, x) for x in range(n)]
    prof_b = [element_profile(b, x) for x in range(n)]
    if sorted(prof_a) != sorted(prof_b):
        return None
    candidates = []
    for x in range(n):
        if x == a.id:
            candidates.append([b.id])
        else:
            candidates.append([y for y in range(n)
                               if y != b.id and prof_b[y] == prof_a[x]])
    fwd = _search(a, b, candidates)
    if fwd is None:
        return None
    back = [0] * n
    for x, y in enumerate(fwd):
        back[y] = x
    return verify_iso(a, b, fwd, back)
