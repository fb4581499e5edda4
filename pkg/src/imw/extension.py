"""The canonical diagram E(M) -> M -> M/sigma and its splitting behaviour.

An extension here is an injection k and a surjection q whose kernel (the
preimage of the identity) is exactly the image of k. The canonical diagram
is an extension precisely for E-unitary monoids, and weakly Schreier
precisely for F-inverse ones; both facts are re-derived per instance rather
than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteMonoid, MonoidMap, make_monoid_map, quotient
from .errors import (
    EmptyCandidateFiber,
    KernelMismatch,
    NotHomomorphism,
    PreconditionFailed,
    TheoremViolation,
)
from .inverse import (
    FInverseResult,
    InverseMonoid,
    idempotent_semilattice,
    is_f_inverse,
    min_group_congruence,
)


@dataclass(frozen=True)
class Extension:
    n_part: FiniteMonoid
    g_part: FiniteMonoid
    h_part: FiniteMonoid
    k: MonoidMap  # N -> G, injective
    q: MonoidMap  # G -> H, surjective


@dataclass(frozen=True)
class WSSplitting:
    ext: Extension
    s: MonoidMap  # H -> G, set-theoretic section of q
    candidates: tuple[tuple[int, ...], ...]  # admissible section values per fiber


@dataclass(frozen=True)
class Cosplitting:
    ext: Extension
    ell: MonoidMap  # G -> N, retraction of k
    ell_is_homomorphism: bool


@dataclass(frozen=True)
class WSFInverseReport:
    f_inverse: FInverseResult
    splitting: WSSplitting | None
    fiber_witness: tuple[int, tuple[int, ...]] | None
    holds: bool  # the shared verdict of the two independent routes


def make_extension(n_part: FiniteMonoid, g_part: FiniteMonoid, h_part: FiniteMonoid,
                   k: MonoidMap, q: MonoidMap) -> Extension:
    if not k.is_injective():
        raise PreconditionFailed("kernel map must be injective")
    if not q.is_surjective():
        raise PreconditionFailed("quotient map must be surjective")
    image = set(k.values)
    kernel = {x for x in range(g_part.n) if q.values[x] == h_part.id}
    for x in sorted(kernel - image):
        raise KernelMismatch(x, "in the kernel but not in the image of k")
    for x in sorted(image - kernel):
        raise KernelMismatch(x, "in the image of k but not in the kernel")
    return Extension(n_part=n_part, g_part=g_part, h_part=h_part, k=k, q=q)


def build_canonical_extension(m: InverseMonoid) -> Extension:
    """E(M) -> M -> M/sigma; raises KernelMismatch exactly when M is not E-unitary."""
    semi, emb = idempotent_semilattice(m)
    sigma = min_group_congruence(m)
    h, qmap = quotient(m.base, sigma)
    return make_extension(semi.base, m.base, h, emb, qmap)


def is_weakly_schreier(ext: Extension) -> WSSplitting:
    """Find a section s with every g equal to k(n)*s(q(g)) for some n.

    The defining condition constrains only the section value of each fiber,
    so fibers are searched independently; the least admissible index wins.
    """
    g, h, n_part = ext.g_part, ext.h_part, ext.n_part
    fibers: list[list[int]] = [[] for _ in range(h.n)]
    for x in range(g.n):
        fibers[ext.q.values[x]].append(x)
    kimg = ext.k.values
    values = []
    all_candidates = []
    for hh in range(h.n):
        fiber = fibers[hh]
        cands = []
        for x in fiber:
            reachable = {g.mul(kimg[n], x) for n in range(n_part.n)}
            if all(y in reachable for y in fiber):
                cands.append(x)
        if not cands:
            raise EmptyCandidateFiber(hh, fiber)
        values.append(cands[0])
        all_candidates.append(tuple(cands))
    s = make_monoid_map(h, g, values, kind="function")
    for hh in range(h.n):
        if ext.q.values[s.values[hh]] != hh:
            raise TheoremViolation(f"section leaves fiber {hh}")
    return WSSplitting(ext=ext, s=s, candidates=tuple(all_candidates))


def weakly_schreier_iff_f_inverse(m: InverseMonoid) -> WSFInverseReport:
    """Run the order route and the fiber route independently and demand agreement.

    When both succeed the section must pick exactly the greatest element of
    each fiber.
    """
    ext = build_canonical_extension(m)
    fres = is_f_inverse(m)
    splitting = None
    fiber_witness = None
    try:
        splitting = is_weakly_schreier(ext)
        ws = True
    except EmptyCandidateFiber as exc:
        fiber_witness = (exc.h, exc.fiber)
        ws = False
    if ws != fres.holds:
        raise TheoremViolation(
            f"weakly-Schreier={ws} but F-inverse={fres.holds}")
    if ws and splitting is not None and fres.selector is not None:
        if splitting.s.values != fres.selector:
            raise TheoremViolation(
                f"section {splitting.s.values} differs from greatest-element "
                f"selector {fres.selector}")
    return WSFInverseReport(f_inverse=fres, splitting=splitting,
                            fiber_witness=fiber_witness, holds=ws)


def cosplit_retraction(m: InverseMonoid) -> Cosplitting:
    """The retraction l(x) = x*inv(x) of the kernel inclusion; homomorphy is reported, not required."""
    ext = build_canonical_extension(m)
    n_part = ext.n_part
    pos = {e: i for i, e in enumerate(ext.k.values)}
    values = [pos[m.mul(x, m.inv[x])] for x in range(m.n)]
    ell = make_monoid_map(ext.g_part, n_part, values, kind="function")
    for i, e in enumerate(ext.k.values):
        if ell.values[e] != i:
            raise NotHomomorphism(i, None, "l∘k is not the identity")
    is_hom = values[m.id] == n_part.id and all(
        values[m.mul(x, y)] == n_part.mul(values[x], values[y])
        for x in range(m.n) for y in range(m.n))
    return Cosplitting(ext=ext, ell=ell, ell_is_homomorphism=is_hom)
