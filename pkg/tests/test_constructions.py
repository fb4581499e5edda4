import pytest

from imw.constructions import (
    FactorSystem,
    almost_action_from_f_inverse,
    clifford_reconstruction,
    crossed_product,
    f_product,
    factor_system_from_almost_action,
    factor_system_from_extension,
    gluing,
    gluing_map_from_clifford,
    iso_f_product_crossed,
    validate_almost_action,
    validate_factor_system,
    validate_gluing_map,
)
from imw.core import direct_product, quotient, validate_monoid
from imw.corpus import (
    chain,
    cyclic_group,
    diamond,
    enumerate_almost_actions,
    enumerate_gluing_maps,
    klein_four,
    m3,
    m7,
    trivial_monoid,
    z2_ch2_action,
    z2_ch2_gluing,
)
from imw.errors import (
    AxiomViolation,
    ConditionViolation,
    IdentityNotTop,
    IllDefinedMultiplication,
    PreconditionFailed,
)
from imw.extension import build_canonical_extension, is_weakly_schreier
from imw.inverse import (
    idempotent_semilattice,
    is_clifford,
    is_f_inverse,
    min_group_congruence,
    natural_order,
    validate_inverse,
)
from imw.iso import brute_force_iso


def trivial_action(group, semi):
    return validate_almost_action(group, semi,
                                  [list(range(semi.n))] * group.n)


def test_trivial_action_is_almost_action():
    aa = trivial_action(cyclic_group(3), chain(3))
    assert aa.dot[1] == (0, 1, 2)


def test_z2_ch2_action_valid():
    aa = z2_ch2_action()
    assert aa.dot == ((0, 1), (1, 1))


def test_constant_top_row_violates_a3():
    with pytest.raises(AxiomViolation) as exc:
        validate_almost_action(cyclic_group(2), chain(2), [[0, 1], [0, 0]])
    assert exc.value.axiom == "A3"


def test_f_product_of_trivial_action_is_direct_product():
    g, y = cyclic_group(2), chain(3)
    fp = f_product(trivial_action(g, y))
    assert fp.monoid.n == 6
    assert brute_force_iso(fp.monoid.base, direct_product(y.base, g)) is not None


def test_f_product_z2_ch2_is_m3():
    fp = f_product(z2_ch2_action())
    assert fp.pairs == ((0, 0), (1, 0), (1, 1))
    assert fp.monoid.base.table == ((0, 1, 2), (1, 1, 2), (2, 2, 1))
    assert fp.monoid.base.table == m3().table


def test_f_product_trivial_group_is_semilattice():
    y = diamond()
    fp = f_product(trivial_action(trivial_monoid(), y))
    assert brute_force_iso(fp.monoid.base, y.base) is not None


def test_factor_system_from_trivial_action():
    g, y = cyclic_group(2), chain(2)
    fs = factor_system_from_almost_action(trivial_action(g, y))
    # Relation is equality at every index; chi is constantly the top.
    assert fs.sim == ((0, 1), (0, 1))
    assert fs.chi == ((0, 0), (0, 0))


def test_factor_system_from_z2_ch2_action():
    fs = factor_system_from_almost_action(z2_ch2_action())
    assert fs.sim == ((0, 1), (0, 0))  # everything collapses below e at g
    assert fs.chi == ((0, 0), (1, 1))
    assert fs.act == ((0, 1), (1, 1))


def test_altered_chi_fails_condition():
    fs = factor_system_from_almost_action(z2_ch2_action())
    chi = [list(r) for r in fs.chi]
    chi[1][1] = 0  # claim chi(g,g) = top
    with pytest.raises(ConditionViolation) as exc:
        validate_factor_system(fs.h_part, fs.n_part, fs.sim, fs.act, chi)
    assert exc.value.condition == 3


def test_crossed_product_with_trivial_group():
    y = chain(3)
    fs = factor_system_from_almost_action(trivial_action(trivial_monoid(), y))
    xp = crossed_product(fs)
    assert brute_force_iso(xp.monoid, y.base) is not None


def test_crossed_product_z2_ch2_is_m3():
    fs = factor_system_from_almost_action(z2_ch2_action())
    xp = crossed_product(fs)
    assert xp.monoid.n == 3
    assert brute_force_iso(xp.monoid, m3()) is not None


def test_crossed_product_of_trivial_action():
    g, y = cyclic_group(2), chain(2)
    fs = factor_system_from_almost_action(trivial_action(g, y))
    xp = crossed_product(fs)
    assert brute_force_iso(xp.monoid, direct_product(y.base, g)) is not None


def test_crossed_product_rejects_broken_relation():
    # Bypass validation: merging the two incomparable atoms of the diamond
    # makes the product depend on the representative (a∧a = a, b∧a = 0).
    y = diamond()
    fs = FactorSystem(h_part=trivial_monoid(), n_part=y.base,
                      sim=((0, 1, 1, 2),),
                      act=((0, 1, 2, 3),),
                      chi=((0,),))
    with pytest.raises(IllDefinedMultiplication):
        crossed_product(fs)


def test_iso_f_product_crossed_on_examples():
    for aa in (z2_ch2_action(),
               trivial_action(cyclic_group(3), chain(2)),
               trivial_action(klein_four(), diamond())):
        w = iso_f_product_crossed(aa)
        fp = f_product(aa)
        xp = crossed_product(factor_system_from_almost_action(aa))
        assert brute_force_iso(fp.monoid.base, xp.monoid, max_n=16) is not None
        assert len(w.forward.values) == fp.monoid.n


def test_gluing_map_validation():
    g, y = cyclic_group(2), chain(2)
    assert validate_gluing_map(g, y, [0, 0]).f == (0, 0)
    assert validate_gluing_map(g, y, [0, 1]).f == (0, 1)
    with pytest.raises(IdentityNotTop):
        validate_gluing_map(g, y, [1, 1])


def test_gluing_map_condition_violation():
    g, y = cyclic_group(3), chain(2)
    f = [0, 1, 0]
    # Oracle: the pair (g^2, g^2) fails f(g^4) ∧ f(g^2) = f(g^2) ∧ f(g^2).
    meet = y.meet
    bad_pairs = [(a, b) for a in range(3) for b in range(3)
                 if meet(f[g.mul(a, b)], f[a]) != meet(f[a], f[b])]
    assert (2, 2) in bad_pairs
    with pytest.raises(ConditionViolation):
        validate_gluing_map(g, y, f)


def test_gluing_full_map_is_direct_product():
    g, y = cyclic_group(2), chain(3)
    gl = gluing(validate_gluing_map(g, y, [0, 0]))
    assert brute_force_iso(gl.monoid.base, direct_product(y.base, g)) is not None


def test_gluing_z2_ch2_is_m3():
    gl = gluing(z2_ch2_gluing())
    assert gl.monoid.base.table == m3().table


def test_gluing_trivial_group():
    y = diamond()
    gl = gluing(validate_gluing_map(trivial_monoid(), y, [0]))
    assert brute_force_iso(gl.monoid.base, y.base) is not None


def test_gluing_map_from_clifford_on_product():
    m = validate_inverse(direct_product(chain(2).base, cyclic_group(2)))
    gm = gluing_map_from_clifford(m)
    assert all(v == gm.semilattice.top for v in gm.f)


def test_gluing_map_from_clifford_on_m3():
    gm = gluing_map_from_clifford(validate_inverse(m3()))
    assert gm.f == (0, 1)


def test_gluing_map_from_clifford_rejects_m7():
    with pytest.raises(PreconditionFailed):
        gluing_map_from_clifford(validate_inverse(m7()))


def test_clifford_reconstruction():
    for m in (m3(), direct_product(chain(2).base, cyclic_group(2)),
              cyclic_group(5)):
        w = clifford_reconstruction(validate_inverse(m))
        assert len(w.forward.values) == m.n


def test_almost_action_from_group():
    g = validate_inverse(cyclic_group(4))
    aa, w = almost_action_from_f_inverse(g)
    assert aa.semilattice.n == 1
    assert brute_force_iso(f_product(aa).monoid.base, g.base) is not None


def test_almost_action_from_m3():
    aa, w = almost_action_from_f_inverse(validate_inverse(m3()))
    assert aa.dot == ((0, 1), (1, 1))  # recovers the defining action


def test_almost_action_from_gluings_round_trip():
    g, y = cyclic_group(2), diamond()
    for gm in enumerate_gluing_maps(g, y):
        gl = gluing(gm)
        aa, w = almost_action_from_f_inverse(gl.monoid, iso_limit=16)
        assert len(w.forward.values) == gl.monoid.n


def test_almost_action_rejects_non_f_inverse():
    with pytest.raises(PreconditionFailed):
        almost_action_from_f_inverse(validate_inverse(m7()))


def test_factor_system_from_group_extension():
    g = validate_inverse(cyclic_group(3))
    ext = build_canonical_extension(g)
    ws = is_weakly_schreier(ext)
    fs = factor_system_from_extension(ext, ws)
    assert fs.n_part.n == 1
    assert fs.chi == ((0, 0, 0),) * 3


def test_factor_system_from_m3_extension():
    m = validate_inverse(m3())
    ext = build_canonical_extension(m)
    ws = is_weakly_schreier(ext)
    fs = factor_system_from_extension(ext, ws)  # certifies internally
    xp = crossed_product(fs)
    assert brute_force_iso(xp.monoid, m.base) is not None


def test_factor_system_from_gluing_extensions():
    for gm in enumerate_gluing_maps(cyclic_group(4), chain(3)):
        gl = gluing(gm)
        ext = build_canonical_extension(gl.monoid)
        ws = is_weakly_schreier(ext)
        fs = factor_system_from_extension(ext, ws, iso_limit=16)
        assert fs.h_part.n == 4


def grid_actions():
    for g in (cyclic_group(2), cyclic_group(3)):
        for y in (chain(2), chain(3), diamond()):
            yield from enumerate_almost_actions(g, y)


def test_f_product_structure_invariants():
    # E(F) recovers Y and F/sigma recovers G, for every small grid action.
    for aa in grid_actions():
        fp = f_product(aa)
        assert is_f_inverse(fp.monoid).holds
        semi, _ = idempotent_semilattice(fp.monoid)
        assert brute_force_iso(semi.base, aa.semilattice.base) is not None
        sigma = min_group_congruence(fp.monoid)
        q, _ = quotient(fp.monoid.base, sigma)
        assert brute_force_iso(q, aa.group) is not None


def test_greatest_element_identities():
    # s(g)s(h) <= s(gh) and inv(s(g)) = s(inverse class) on F-inverse corpus.
    instances = [m3(), direct_product(chain(2).base, cyclic_group(2)),
                 cyclic_group(4)]
    instances += [f_product(aa).monoid.base for aa in grid_actions()]
    for base in instances:
        m = validate_inverse(base) if not hasattr(base, "inv") else base
        res = is_f_inverse(m)
        assert res.holds
        sel, sigma = res.selector, res.sigma
        q, _ = quotient(m.base, sigma)
        order = natural_order(m)
        for g in range(q.n):
            for h in range(q.n):
                gh = q.mul(g, h)
                assert order.leq[m.mul(sel[g], sel[h])][sel[gh]]
            ginv = next(d for d in range(q.n)
                        if q.mul(g, d) == q.id and q.mul(d, g) == q.id)
            assert m.inv[sel[g]] == sel[ginv]


def test_gluing_abelian_is_commutative():
    for gm in enumerate_gluing_maps(klein_four(), chain(3)):
        t = gluing(gm).monoid.base
        for x in range(t.n):
            for y in range(t.n):
                assert t.mul(x, y) == t.mul(y, x)


def test_gluing_round_trip_reproduces_f():
    for gm in enumerate_gluing_maps(cyclic_group(4), diamond()):
        gl = gluing(gm)
        back = gluing_map_from_clifford(gl.monoid)
        assert back.f == gm.f
        assert back.group.table == gm.group.table
