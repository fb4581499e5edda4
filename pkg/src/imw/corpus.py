"""The desk-scale test universe.

Named instances witnessing each predicate both ways, hard-coded small groups,
and exhaustive enumerators (semilattices, almost actions, gluing maps,
inverse monoids) with explicit bounds and budgets. Everything emitted has
already passed its validator, and enumeration order is deterministic so
counts can be pinned as regression values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .constructions import (
    AlmostAction,
    FactorSystem,
    GluingMap,
    factor_system_from_almost_action,
    validate_almost_action,
    validate_gluing_map,
)
from .core import FiniteMonoid, is_group, validate_monoid
from .errors import BoundExceeded, BudgetExceeded, NoInverse, NonUniqueInverse
from .inverse import InverseMonoid, SemilatticeMonoid, validate_inverse, validate_semilattice
from .iso import brute_force_iso, element_profile

DEFAULT_BUDGET = 10 ** 7
SEMILATTICE_BOUND = 6
INVERSE_MONOID_BOUND = 5


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    kind: str  # monoid | group | semilattice | almost-action | gluing-map | factor-system
    payload: object
    expected: dict | None = None


# --- named builders -------------------------------------------------------


def trivial_monoid() -> FiniteMonoid:
    return validate_monoid(1, [[0]], 0, ["1"])


def cyclic_group(n: int) -> FiniteMonoid:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return validate_monoid(n, table, 0, labels)


def klein_four() -> FiniteMonoid:
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return validate_monoid(4, table, 0, ["1", "a", "b", "c"])


def sym3() -> FiniteMonoid:
    perms = sorted(product(range(3), repeat=3))
    perms = [p for p in perms if sorted(p) == [0, 1, 2]]
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms]
    labels = ["".join(str(v) for v in p) for p in perms]
    return validate_monoid(6, table, pos[(0, 1, 2)], labels)


def chain(k: int) -> SemilatticeMonoid:
    # Element 0 is the top; meet of two chain elements is the lower one.
    table = [[max(i, j) for j in range(k)] for i in range(k)]
    labels = ["1"] + [f"e{i}" for i in range(1, k)]
    return validate_semilattice(validate_monoid(k, table, 0, labels))


def diamond() -> SemilatticeMonoid:
    # 0 = top, 1 and 2 incomparable, 3 = bottom.
    def meet(i: int, j: int) -> int:
        if i == j:
            return i
        if i == 0:
            return j
        if j == 0:
            return i
        return 3

    table = [[meet(i, j) for j in range(4)] for i in range(4)]
    return validate_semilattice(validate_monoid(4, table, 0, ["1", "a", "b", "0"]))


def m3() -> FiniteMonoid:
    # {1, e, t} with t*t = e and e*t = t*e = t; the smallest F-inverse
    # monoid that is neither a group nor a semilattice.
    return validate_monoid(3, [[0, 1, 2], [1, 1, 2], [2, 2, 1]], 0, ["1", "e", "t"])


def brandt_b2_1() -> FiniteMonoid:
    # The 2x2 matrix-unit semigroup {a=E12, b=E21, ab=E11, ba=E22, 0} with an
    # adjoined identity; inverse but not E-unitary.
    table = [
        [0, 1, 2, 3, 4, 5],
        [1, 5, 3, 5, 1, 5],
        [2, 4, 5, 2, 5, 5],
        [3, 1, 5, 3, 5, 5],
        [4, 5, 2, 5, 4, 5],
        [5, 5, 5, 5, 5, 5],
    ]
    return validate_monoid(6, table, 0, ["1", "a", "b", "ab", "ba", "0"])


def m7() -> FiniteMonoid:
    # Subsemigroup of (diamond semilattice) x| Z2 with the swap action,
    # omitting the pair (top, g); E-unitary but not F-inverse, not Clifford.
    dia = diamond()
    swap = [0, 2, 1, 3]
    pairs = [(0, 0), (1, 0), (2, 0), (3, 0), (1, 1), (2, 1), (3, 1)]
    pos = {p: i for i, p in enumerate(pairs)}
    table = []
    for (y, h) in pairs:
        row = []
        for (z, k) in pairs:
            zz = swap[z] if h == 1 else z
            row.append(pos[(dia.meet(y, zz), h ^ k)])
        table.append(row)
    labels = [f"({dia.base.label(y)},{'1' if h == 0 else 'g'})" for (y, h) in pairs]
    return validate_monoid(7, table, 0, labels)


def z2_ch2_action() -> AlmostAction:
    # The non-trivial almost action of Z2 on the 2-chain: g sends both
    # elements to the bottom. Its F(Y,G) is m3.
    return validate_almost_action(cyclic_group(2), chain(2), [[0, 1], [1, 1]])


def z2_ch2_gluing() -> GluingMap:
    return validate_gluing_map(cyclic_group(2), chain(2), [0, 1])


ALL_TRUE = {"inverse": True, "e_unitary": True, "f_inverse": True,
            "clifford": True, "weakly_schreier": True}


def builtin_corpus() -> list[CorpusInstance]:
    """Named instances pinning every predicate in both polarities."""
    groups = [
        ("t1", trivial_monoid()),
        ("z2", cyclic_group(2)),
        ("z3", cyclic_group(3)),
        ("z4", cyclic_group(4)),
        ("klein", klein_four()),
        ("s3", sym3()),
    ]
    semis = [("ch2", chain(2)), ("ch3", chain(3)), ("ch4", chain(4)),
             ("d4", diamond())]
    out = [CorpusInstance(name, "group", g, dict(ALL_TRUE)) for name, g in groups]
    out += [CorpusInstance(name, "semilattice", s, dict(ALL_TRUE))
            for name, s in semis]
    out.append(CorpusInstance("m3", "monoid", m3(), dict(ALL_TRUE)))
    out.append(CorpusInstance("b2-1", "monoid", brandt_b2_1(), {
        "inverse": True, "e_unitary": False, "f_inverse": False,
        "clifford": False, "weakly_schreier": False}))
    out.append(CorpusInstance("m7", "monoid", m7(), {
        "inverse": True, "e_unitary": True, "f_inverse": False,
        "clifford": False, "weakly_schreier": False}))
    out.append(CorpusInstance("z2-ch2-action", "almost-action", z2_ch2_action()))
    out.append(CorpusInstance("z2-ch2-gluing", "gluing-map", z2_ch2_gluing()))
    out.append(CorpusInstance("z2-ch2-factors", "factor-system",
                              factor_system_from_almost_action(z2_ch2_action())))
    return out


def small_groups() -> list[FiniteMonoid]:
    """Z1..Z6, the Klein four-group and S3, each checked to be a group."""
    groups = [cyclic_group(n) for n in range(1, 7)] + [klein_four(), sym3()]
    for g in groups:
        assert is_group(g)
    return groups


# --- enumerators -----------------------------------------------------------


def _dedup_key(m: FiniteMonoid) -> tuple:
    return tuple(sorted(element_profile(m, x) for x in range(m.n)))


def enumerate_semilattices(max_n: int,
                           bound: int = SEMILATTICE_BOUND) -> Iterator[SemilatticeMonoid]:
    """All semilattice monoids of size 1..max_n up to isomorphism.

    Enumerates strict-order matrices below a fixed top, keeps those where
    every pair has a meet, and deduplicates with the brute-force oracle.
    """
    if max_n > bound:
        raise BoundExceeded(max_n, bound)
    for n in range(1, max_n + 1):
        kept: list[tuple[tuple, FiniteMonoid]] = []
        for semi in _semilattices_of_size(n):
            key = _dedup_key(semi.base)
            if any(k == key and brute_force_iso(semi.base, prev) is not None
                   for k, prev in kept):
                continue
            kept.append((key, semi.base))
            yield semi


def _semilattices_of_size(n: int) -> Iterator[SemilatticeMonoid]:
    if n == 1:
        yield validate_semilattice(trivial_monoid())
        return
    sub = list(range(1, n))
    pairs = [(i, j) for ai, i in enumerate(sub) for j in sub[ai + 1:]]
    # lt[x][y]: x strictly below y (element 0, the top, handled separately).
    for states in product(range(3), repeat=len(pairs)):
        lt = [[False] * n for _ in range(n)]
        for x in sub:
            lt[x][0] = True
        for (i, j), st in zip(pairs, states):
            if st == 1:
                lt[i][j] = True
            elif st == 2:
                lt[j][i] = True
        ok = True
        for x in sub:
            for y in sub:
                if not lt[x][y]:
                    continue
                for z in sub:
                    if lt[y][z] and not lt[x][z]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        leq = [[lt[x][y] or x == y for y in range(n)] for x in range(n)]
        meet_table = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                lower = [z for z in range(n) if leq[z][x] and leq[z][y]]
                glb = next((z for z in lower
                            if all(leq[w][z] for w in lower)), None)
                if glb is None:
                    ok = False
                    break
                meet_table[x][y] = glb
            if not ok:
                break
        if not ok:
            continue
        yield validate_semilattice(validate_monoid(n, meet_table, 0))


def _meet_endomorphisms(semi: SemilatticeMonoid) -> list[tuple[int, ...]]:
    n = semi.n
    meet = semi.meet
    rows = []
    for row in product(range(n), repeat=n):
        if all(row[meet(y, z)] == meet(row[y], row[z])
               for y in range(n) for z in range(y, n)):
            rows.append(row)
    return rows


def enumerate_almost_actions(group: FiniteMonoid, semilattice: SemilatticeMonoid,
                             budget: int | None = None) -> Iterator[AlmostAction]:
    """Every action table passing the three axioms, in table order.

    The identity row is forced, so the scanned space is |Y|^((|G|-1)|Y|);
    that number is compared against the budget before any work happens.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    y_n, g_n = semilattice.n, group.n
    space = y_n ** ((g_n - 1) * y_n)
    if space > budget:
        raise BudgetExceeded(space, budget)
    meet = semilattice.meet
    top = semilattice.top
    # Axiom A2 holds row by row, so only meet-preserving rows are viable.
    rows = _meet_endomorphisms(semilattice)
    others = [g for g in range(g_n) if g != group.id]
    id_row = tuple(range(y_n))
    for combo in product(rows, repeat=len(others)):
        dot: list[tuple[int, ...] | None] = [None] * g_n
        dot[group.id] = id_row
        for g, row in zip(others, combo):
            dot[g] = row
        ok = True
        for g in range(g_n):
            gtop = dot[g][top]
            for h in range(g_n):
                gh = group.mul(g, h)
                if any(dot[g][dot[h][y]] != meet(dot[gh][y], gtop)
                       for y in range(y_n)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield validate_almost_action(group, semilattice, dot)


def enumerate_gluing_maps(group: FiniteMonoid, semilattice: SemilatticeMonoid,
                          budget: int | None = None) -> Iterator[GluingMap]:
    """Every admissible f with f(1) = top, in table order."""
    budget = DEFAULT_BUDGET if budget is None else budget
    y_n, g_n = semilattice.n, group.n
    space = y_n ** g_n
    if space > budget:
        raise BudgetExceeded(space, budget)
    meet = semilattice.meet
    others = [g for g in range(g_n) if g != group.id]
    for combo in product(range(y_n), repeat=len(others)):
        f = [semilattice.top] * g_n
        for g, v in zip(others, combo):
            f[g] = v
        if all(meet(f[group.mul(g, h)], f[g]) == meet(f[g], f[h])
               for g in range(g_n) for h in range(g_n)):
            yield validate_gluing_map(group, semilattice, f)


def enumerate_inverse_monoids(max_n: int,
                              bound: int = INVERSE_MONOID_BOUND) -> Iterator[InverseMonoid]:
    """All inverse monoids of size 1..max_n up to isomorphism.

    Backtracks over Cayley tables with the identity row and column fixed,
    pruning by associativity on every fully determined triple (plus the
    commuting-idempotents law, which any inverse monoid must satisfy), then
    filters by the inverse validator and deduplicates.
    """
    if max_n > bound:
        raise BoundExceeded(max_n, bound)
    for n in range(1, max_n + 1):
        kept: list[tuple[tuple, FiniteMonoid]] = []
        for table in _monoid_tables(n):
            try:
                inv = validate_inverse(validate_monoid(n, table, 0))
            except (NoInverse, NonUniqueInverse):
                continue
            key = _dedup_key(inv.base)
            if any(k == key and brute_force_iso(inv.base, prev) is not None
                   for k, prev in kept):
                continue
            kept.append((key, inv.base))
            yield inv


def _monoid_tables(n: int) -> Iterator[list[list[int]]]:
    """Complete associative tables with identity 0, in lexicographic order."""
    if n == 1:
        yield [[0]]
        return
    t = [[-1] * n for _ in range(n)]
    for j in range(n):
        t[0][j] = j
        t[j][0] = j
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def consistent(i: int, j: int) -> bool:
        v = t[i][j]
        # Associativity instances in which cell (i,j) participates and whose
        # other references are already assigned.
        for z in range(n):
            jz = t[j][z]
            if t[v][z] >= 0 and jz >= 0 and t[i][jz] >= 0 \
                    and t[v][z] != t[i][jz]:
                return False
        for x in range(n):
            xi = t[x][i]
            if xi >= 0 and t[xi][j] >= 0 and t[x][v] >= 0 \
                    and t[xi][j] != t[x][v]:
                return False
        for x in range(n):
            for y in range(n):
                if t[x][y] == i:
                    yj = t[y][j]
                    if yj >= 0 and t[x][yj] >= 0 and t[x][yj] != v:
                        return False
        for y in range(n):
            for z in range(n):
                if t[y][z] == j:
                    iy = t[i][y]
                    if iy >= 0 and t[iy][z] >= 0 and t[iy][z] != v:
                        return False
        # Idempotents must commute in any inverse monoid.
        if t[i][i] == i and t[j][j] == j and t[j][i] >= 0 and t[j][i] != v:
            return False
        return True

    def fill(depth: int) -> Iterator[list[list[int]]]:
        if depth == len(cells):
            yield [row[:] for row in t]
            return
        i, j = cells[depth]
        for v in range(n):
            t[i][j] = v
            if consistent(i, j):
                yield from fill(depth + 1)
        t[i][j] = -1

    yield from fill(0)
