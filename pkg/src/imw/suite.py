"""The acceptance suite: every theorem re-checked over the whole corpus.

Each criterion scans a deterministic corpus (named instances, the exhaustive
enumerations, and every constructed F(Y,G) and Gl(f) over the standard grid)
and reports a pass/fail verdict with counterexample details. The final
criterion re-runs the first seven and demands byte-identical JSON.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import (
    clifford_reconstruction,
    crossed_product,
    f_product,
    factor_system_from_almost_action,
    factor_system_from_extension,
    gluing,
    gluing_map_from_clifford,
    iso_f_product_crossed,
)
from .core import FiniteMonoid, is_group, make_congruence, quotient
from .corpus import (
    DEFAULT_BUDGET,
    builtin_corpus,
    cyclic_group,
    enumerate_almost_actions,
    enumerate_gluing_maps,
    enumerate_inverse_monoids,
    enumerate_semilattices,
    klein_four,
)
from .errors import EmptyCandidateFiber, ImwError, KernelMismatch, NotACongruence
from .extension import build_canonical_extension, is_weakly_schreier
from .inverse import (
    InverseMonoid,
    is_e_unitary,
    is_f_inverse,
    min_group_congruence,
    validate_inverse,
)
from .iso import brute_force_iso
from .mtab import SCHEMA_VERSION
from .report import to_canonical_json

SUITE_BUDGET = 10 ** 8  # the standard grid needs 4^12 candidate tables
SUITE_ISO_LIMIT = 24


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    checked: int
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "checked": self.checked, "details": self.details,
                "failures": self.failures}


@dataclass
class SuiteResult:
    criteria: list

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.criteria)

    def to_json_dict(self) -> dict:
        return {"schema": SCHEMA_VERSION, "all_passed": self.all_passed,
                "criteria": [c.to_json_dict() for c in self.criteria]}


@dataclass
class SuiteContext:
    """Shared corpus: built once, scanned by several criteria."""

    monoids: list  # (name, InverseMonoid): named + enumerated + constructed
    actions: list  # (name, AlmostAction) over the standard grid
    gluing_maps: list  # (name, GluingMap) over the standard grid
    iso_limit: int = SUITE_ISO_LIMIT


def build_context(budget: int = SUITE_BUDGET,
                  iso_limit: int = SUITE_ISO_LIMIT) -> SuiteContext:
    monoids: list[tuple[str, InverseMonoid]] = []
    for inst in builtin_corpus():
        if inst.kind in ("monoid", "group"):
            monoids.append((inst.name, validate_inverse(inst.payload)))
        elif inst.kind == "semilattice":
            monoids.append((inst.name, validate_inverse(inst.payload.base)))
    for i, m in enumerate(enumerate_inverse_monoids(4)):
        monoids.append((f"enum{m.n}#{i}", m))

    grid_groups = [("z2", cyclic_group(2)), ("z3", cyclic_group(3)),
                   ("z4", cyclic_group(4)), ("klein", klein_four())]
    grid_semis = [(f"y{s.n}#{i}", s) for i, s in enumerate(enumerate_semilattices(4))]
    actions = []
    gluing_maps = []
    for gname, g in grid_groups:
        for yname, y in grid_semis:
            for i, aa in enumerate(enumerate_almost_actions(g, y, budget=budget)):
                actions.append((f"aa({gname},{yname})#{i}", aa))
            for i, gm in enumerate(enumerate_gluing_maps(g, y, budget=budget)):
                gluing_maps.append((f"gl({gname},{yname})#{i}", gm))
    for name, aa in actions:
        fp = f_product(aa)
        monoids.append((f"F[{name}]", fp.monoid))
    for name, gm in gluing_maps:
        gl = gluing(gm)
        monoids.append((f"Gl[{name}]", gl.monoid))
    return SuiteContext(monoids=monoids, actions=actions,
                        gluing_maps=gluing_maps, iso_limit=iso_limit)


def criterion_1(ctx: SuiteContext) -> CriterionResult:
    """Extension exists iff E-unitary, with at least one negative case."""
    failures = []
    negatives = []
    for name, m in ctx.monoids:
        verdict = is_e_unitary(m).holds
        try:
            build_canonical_extension(m)
            built = True
        except KernelMismatch:
            built = False
        if built != verdict:
            failures.append({"instance": name, "e_unitary": verdict,
                             "extension_built": built})
        if not verdict:
            negatives.append(name)
    if "b2-1" not in negatives:
        failures.append({"instance": "b2-1", "error": "expected negative case missing"})
    return CriterionResult(
        1, "canonical extension exists iff E-unitary",
        passed=not failures, checked=len(ctx.monoids),
        details={"negatives": len(negatives)}, failures=failures)


def criterion_2(ctx: SuiteContext) -> CriterionResult:
    """Weakly Schreier iff F-inverse on E-unitary instances; the section is
    the greatest-element selector and is the unique fiber candidate."""
    failures = []
    checked = 0
    negatives = []
    for name, m in ctx.monoids:
        if not is_e_unitary(m).holds:
            continue
        checked += 1
        fres = is_f_inverse(m)
        try:
            ws = is_weakly_schreier(build_canonical_extension(m))
        except EmptyCandidateFiber:
            ws = None
        if (ws is not None) != fres.holds:
            failures.append({"instance": name, "f_inverse": fres.holds,
                             "weakly_schreier": ws is not None})
            continue
        if ws is None:
            negatives.append(name)
            continue
        if ws.s.values != fres.selector:
            failures.append({"instance": name, "error": "section != selector",
                             "section": list(ws.s.values),
                             "selector": list(fres.selector)})
        if any(len(c) != 1 for c in ws.candidates):
            failures.append({"instance": name,
                             "error": "fiber candidate not unique",
                             "sizes": [len(c) for c in ws.candidates]})
    if "m7" not in negatives:
        failures.append({"instance": "m7", "error": "expected negative case missing"})
    return CriterionResult(
        2, "weakly Schreier iff F-inverse, section = greatest selector",
        passed=not failures, checked=checked,
        details={"negatives": len(negatives)}, failures=failures)


def criterion_3(ctx: SuiteContext) -> CriterionResult:
    """Every grid almost action yields a valid factor system and a certified
    isomorphism F(Y,G) = crossed product, cross-checked by brute force."""
    failures = []
    for name, aa in ctx.actions:
        try:
            fs = factor_system_from_almost_action(aa)
            iso_f_product_crossed(aa)
            fp = f_product(aa)
            xp = crossed_product(fs)
            if brute_force_iso(fp.monoid.base, xp.monoid,
                               max_n=ctx.iso_limit) is None:
                failures.append({"instance": name, "error": "brute force found no iso"})
        except ImwError as exc:
            failures.append({"instance": name, "error": str(exc)})
    return CriterionResult(
        3, "factor system valid and F(Y,G) = crossed product on the grid",
        passed=not failures, checked=len(ctx.actions), failures=failures)


def criterion_4(ctx: SuiteContext) -> CriterionResult:
    """Every grid gluing is F-inverse Clifford, reproduces its map pointwise,
    and reconstructs to an isomorphic copy."""
    failures = []
    for name, gm in ctx.gluing_maps:
        try:
            gl = gluing(gm)  # re-checks Clifford, F-inverse, and the section
            back = gluing_map_from_clifford(gl.monoid)
            if back.f != gm.f or back.group.table != gm.group.table:
                failures.append({"instance": name, "error": "recovered map differs",
                                 "f": list(gm.f), "recovered": list(back.f)})
                continue
            clifford_reconstruction(gl.monoid)
            if brute_force_iso(gl.monoid.base, gluing(back).monoid.base,
                               max_n=ctx.iso_limit) is None:
                failures.append({"instance": name, "error": "brute force found no iso"})
        except ImwError as exc:
            failures.append({"instance": name, "error": str(exc)})
    return CriterionResult(
        4, "gluings are F-inverse Clifford and reconstruct round-trip",
        passed=not failures, checked=len(ctx.gluing_maps), failures=failures)


def criterion_5(ctx: SuiteContext) -> CriterionResult:
    """Gluings over abelian groups are commutative."""
    failures = []
    checked = 0
    for name, gm in ctx.gluing_maps:
        g = gm.group
        if any(g.mul(a, b) != g.mul(b, a) for a in range(g.n) for b in range(g.n)):
            continue
        checked += 1
        t = gluing(gm).monoid.base
        bad = next(((x, y) for x in range(t.n) for y in range(t.n)
                    if t.mul(x, y) != t.mul(y, x)), None)
        if bad is not None:
            failures.append({"instance": name, "witness": list(bad)})
    return CriterionResult(
        5, "gluings over abelian groups are commutative",
        passed=not failures, checked=checked, failures=failures)


def all_congruences(m: FiniteMonoid):
    """Every congruence of m, via restricted-growth partition enumeration."""
    n = m.n
    assignment = [0] * n

    def grow(i: int, maxc: int):
        if i == n:
            try:
                yield make_congruence(m, assignment)
            except NotACongruence:
                pass
            return
        for c in range(maxc + 1):
            assignment[i] = c
            yield from grow(i + 1, max(maxc, c + 1))

    yield from grow(0, 0)


def sigma_by_exhaustion(m: InverseMonoid) -> tuple[tuple[int, ...], int]:
    """Intersection of all group congruences, found by brute-force search."""
    n = m.n
    related = [[True] * n for _ in range(n)]
    found = 0
    for cong in all_congruences(m.base):
        q, _ = quotient(m.base, cong)
        if not is_group(q):
            continue
        found += 1
        for a in range(n):
            for b in range(n):
                if cong.class_of[a] != cong.class_of[b]:
                    related[a][b] = False
    class_of = []
    seen: dict[int, int] = {}
    for a in range(n):
        rep = next(b for b in range(n) if related[a][b])
        if rep not in seen:
            seen[rep] = len(seen)
        class_of.append(seen[rep])
    return tuple(class_of), found


def criterion_6(ctx: SuiteContext) -> CriterionResult:
    """Sigma is minimal: it equals the intersection of all group congruences."""
    failures = []
    checked = 0
    for name, m in ctx.monoids:
        if m.n > 6:
            continue
        checked += 1
        sigma = min_group_congruence(m)
        oracle, found = sigma_by_exhaustion(m)
        if sigma.class_of != oracle:
            failures.append({"instance": name, "sigma": list(sigma.class_of),
                             "oracle": list(oracle), "group_congruences": found})
    return CriterionResult(
        6, "sigma equals the intersection of all group congruences (n<=6)",
        passed=not failures, checked=checked, failures=failures)


def criterion_7(ctx: SuiteContext) -> CriterionResult:
    """Factor systems extracted from weakly Schreier canonical extensions
    rebuild the middle object up to brute-force isomorphism."""
    failures = []
    checked = 0
    for name, m in ctx.monoids:
        if not is_e_unitary(m).holds:
            continue
        ext = build_canonical_extension(m)
        try:
            ws = is_weakly_schreier(ext)
        except EmptyCandidateFiber:
            continue
        checked += 1
        try:
            fs = factor_system_from_extension(ext, ws, certify=False)
            xp = crossed_product(fs)
            if brute_force_iso(xp.monoid, m.base, max_n=ctx.iso_limit) is None:
                failures.append({"instance": name, "error": "brute force found no iso"})
        except ImwError as exc:
            failures.append({"instance": name, "error": str(exc)})
    return CriterionResult(
        7, "extracted factor systems rebuild the middle object",
        passed=not failures, checked=checked, failures=failures)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7]


def _run_once(budget: int, iso_limit: int) -> list[CriterionResult]:
    ctx = build_context(budget=budget, iso_limit=iso_limit)
    return [c(ctx) for c in CRITERIA]


def run_suite(budget: int = SUITE_BUDGET,
              iso_limit: int = SUITE_ISO_LIMIT,
              check_determinism: bool = True) -> SuiteResult:
    """Run criteria 1-7, then re-run them and compare canonical JSON bytes."""
    results = _run_once(budget, iso_limit)
    if check_determinism:
        first = to_canonical_json(
            {"criteria": [c.to_json_dict() for c in results]})
        second = to_canonical_json(
            {"criteria": [c.to_json_dict() for c in _run_once(budget, iso_limit)]})
        results.append(CriterionResult(
            8, "two consecutive runs are byte-identical",
            passed=first == second, checked=2,
            details={"bytes": len(first)},
            failures=[] if first == second else [{"error": "outputs differ"}]))
    return SuiteResult(criteria=results)


def format_suite(result: SuiteResult, fmt: str = "human") -> str:
    if fmt == "json":
        return to_canonical_json(result.to_json_dict())
    lines = []
    for c in result.criteria:
        status = "PASS" if c.passed else "FAIL"
        extra = f" ({c.checked} checks)"
        lines.append(f"criterion {c.number}: {status}  {c.name}{extra}")
        for f in c.failures[:5]:
            lines.append(f"    failure: {f}")
        if len(c.failures) > 5:
            lines.append(f"    ... and {len(c.failures) - 5} more")
    ok = sum(1 for c in result.criteria if c.passed)
    lines.append(f"suite: {'PASS' if result.all_passed else 'FAIL'} "
                 f"({ok}/{len(result.criteria)})")
    return "\n".join(lines) + "\n"
