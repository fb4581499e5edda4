import pytest

from imw.core import validate_monoid
from imw.corpus import (
    brandt_b2_1,
    chain,
    cyclic_group,
    diamond,
    enumerate_inverse_monoids,
    klein_four,
    m3,
    m7,
    sym3,
)
from imw.errors import NoInverse, NonUniqueInverse
from imw.inverse import (
    idempotent_semilattice,
    is_clifford,
    is_e_unitary,
    is_f_inverse,
    min_group_congruence,
    natural_order,
    validate_inverse,
)
from imw.suite import sigma_by_exhaustion


def test_group_inverse_is_group_inverse():
    g = validate_inverse(cyclic_group(4))
    for x in range(4):
        assert g.mul(x, g.inv[x]) == g.id


def test_semilattice_inverse_is_identity():
    y = validate_inverse(chain(3).base)
    assert y.inv == (0, 1, 2)


def test_two_element_semilattice_table():
    m = validate_inverse(validate_monoid(2, [[0, 1], [1, 1]], 0))
    assert m.inv == (0, 1)


def test_no_inverse_witness():
    # With e*t = e the non-idempotent t has no generalized inverse at all.
    bad = validate_monoid(3, [[0, 1, 2], [1, 1, 1], [2, 1, 1]], 0)
    with pytest.raises(NoInverse) as exc:
        validate_inverse(bad)
    assert exc.value.witness == 2


def test_non_unique_inverse_witness():
    # Left-zero pair with identity: a and b are generalized inverses of
    # each other and of themselves.
    bad = validate_monoid(3, [[0, 1, 2], [1, 1, 1], [2, 2, 2]], 0)
    with pytest.raises(NonUniqueInverse):
        validate_inverse(bad)


def test_non_unique_found_by_exhaustive_search():
    # Independent oracle: scan all 3x3 monoid tables for a witness.
    def gen_tables():
        for a in range(3):
            for b in range(3):
                for c in range(3):
                    for d in range(3):
                        yield [[0, 1, 2], [1, a, b], [2, c, d]]

    found = None
    for t in gen_tables():
        try:
            m = validate_monoid(3, t, 0)
        except Exception:
            continue
        try:
            validate_inverse(m)
        except NonUniqueInverse:
            found = t
            break
        except NoInverse:
            continue
    assert found is not None


def test_inverse_involution_and_antihomomorphism(corpus_monoids):
    for name, m in corpus_monoids:
        for x in range(m.n):
            assert m.inv[m.inv[x]] == x, name
            for y in range(m.n):
                assert m.inv[m.mul(x, y)] == m.mul(m.inv[y], m.inv[x]), name


def test_idempotent_semilattice():
    g = validate_inverse(sym3())
    semi, emb = idempotent_semilattice(g)
    assert semi.n == 1
    y = validate_inverse(diamond().base)
    semi, emb = idempotent_semilattice(y)
    assert semi.n == 4 and emb.values == (0, 1, 2, 3)
    m = validate_inverse(m3())
    semi, emb = idempotent_semilattice(m)
    assert emb.values == (0, 1)
    assert semi.base.table == ((0, 1), (1, 1))


def test_natural_order_on_groups_is_equality():
    g = validate_inverse(klein_four())
    order = natural_order(g)
    assert order.pairs() == [(x, x) for x in range(4)]


def test_natural_order_on_semilattice_is_meet_order():
    y = diamond()
    order = natural_order(validate_inverse(y.base))
    for a in range(4):
        for b in range(4):
            assert order.leq[a][b] == y.leq(a, b)


def test_natural_order_m3():
    # Oracle: direct scan of the definition x = e*y over E = {1, e}.
    m = validate_inverse(m3())
    expected = set()
    idem = [0, 1]
    for y in range(3):
        for e in idem:
            expected.add((m.mul(e, y), y))
    assert expected == {(0, 0), (1, 1), (2, 2), (1, 0)}
    assert set(natural_order(m).pairs()) == expected


def test_sigma_examples():
    g = validate_inverse(sym3())
    assert min_group_congruence(g).num_classes == 6
    y = validate_inverse(chain(3).base)
    assert min_group_congruence(y).num_classes == 1
    m = validate_inverse(m3())
    assert min_group_congruence(m).class_of == (0, 0, 1)


def test_sigma_matches_exhaustive_oracle(corpus_monoids):
    for name, m in corpus_monoids:
        if m.n > 6:
            continue
        oracle, found = sigma_by_exhaustion(m)
        assert found >= 1, name
        assert min_group_congruence(m).class_of == oracle, name


def test_e_unitary():
    assert is_e_unitary(validate_inverse(sym3())).holds
    assert is_e_unitary(validate_inverse(m3())).holds
    res = is_e_unitary(validate_inverse(brandt_b2_1()))
    assert not res.holds
    x, e = res.witness
    b = validate_inverse(brandt_b2_1())
    assert b.base.is_idempotent(e)
    assert b.base.is_idempotent(b.mul(x, e))
    assert not b.base.is_idempotent(x)


def test_e_unitary_iff_kernel_is_idempotents(corpus_monoids):
    for name, m in corpus_monoids:
        sigma = min_group_congruence(m)
        kernel = {x for x in range(m.n)
                  if sigma.class_of[x] == sigma.class_of[m.id]}
        assert is_e_unitary(m).holds == (kernel == set(m.base.idempotents())), name


def test_f_inverse():
    g = validate_inverse(klein_four())
    res = is_f_inverse(g)
    assert res.holds and res.selector == (0, 1, 2, 3)
    m = validate_inverse(m3())
    res = is_f_inverse(m)
    assert res.holds and res.selector == (0, 2)


def test_m7_not_f_inverse():
    m = validate_inverse(m7())
    res = is_f_inverse(m)
    assert not res.holds
    # The failing class is the fiber {(a,g), (b,g), (0,g)} with the two
    # incomparable pairs (a,g) and (b,g) maximal.
    members = [x for x in range(m.n)
               if res.sigma.class_of[x] == res.witness_class]
    assert sorted(members) == [4, 5, 6]
    assert res.witness_maximals == (4, 5)
    order = natural_order(m)
    a, b = res.witness_maximals
    assert not order.leq[a][b] and not order.leq[b][a]


def test_f_inverse_implies_e_unitary(corpus_monoids):
    for name, m in corpus_monoids:
        if is_f_inverse(m).holds:
            assert is_e_unitary(m).holds, name


def test_clifford():
    assert is_clifford(validate_inverse(m3())).holds
    assert is_clifford(validate_inverse(cyclic_group(5))).holds
    res = is_clifford(validate_inverse(m7()))
    assert not res.holds
    e, x = res.witness
    m = validate_inverse(m7())
    assert m.base.is_idempotent(e) and m.mul(e, x) != m.mul(x, e)


def test_order_restricted_to_idempotents_is_semilattice_order(corpus_monoids):
    for name, m in corpus_monoids:
        semi, emb = idempotent_semilattice(m)
        order = natural_order(m)
        for i, e in enumerate(emb.values):
            for j, f in enumerate(emb.values):
                assert order.leq[e][f] == semi.leq(i, j), name


def test_enumerated_inverse_monoids_have_commuting_idempotents():
    for m in enumerate_inverse_monoids(3):
        for e in m.base.idempotents():
            for f in m.base.idempotents():
                assert m.mul(e, f) == m.mul(f, e)
