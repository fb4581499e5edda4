import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from imw.core import direct_product, validate_monoid
from imw.corpus import chain, cyclic_group, klein_four, m3, sym3, trivial_monoid
from imw.errors import NotHomomorphism, SizeLimitExceeded
from imw.iso import brute_force_iso, verify_iso


def test_identity_witness():
    m = m3()
    w = verify_iso(m, m, [0, 1, 2], [0, 1, 2])
    assert w.forward.values == (0, 1, 2)


def test_inversion_automorphism():
    z3 = cyclic_group(3)
    w = verify_iso(z3, z3, [0, 2, 1], [0, 2, 1])
    assert w.backward.values == (0, 2, 1)
    k = klein_four()
    verify_iso(k, k, [0, 2, 1, 3], [0, 2, 1, 3])  # swapping a and b


def test_non_multiplicative_bijection_rejected():
    m = m3()
    # Swapping e and t: t*t = e must map to e*e = e, but the image is t.
    with pytest.raises(NotHomomorphism):
        verify_iso(m, m, [0, 2, 1], [0, 2, 1])


def test_self_iso():
    for m in (m3(), sym3(), chain(4).base):
        w = brute_force_iso(m, m)
        assert w is not None


def test_klein_vs_z4():
    assert brute_force_iso(klein_four(), cyclic_group(4)) is None


def test_size_mismatch():
    assert brute_force_iso(m3(), cyclic_group(2)) is None


def test_size_limit():
    big = direct_product(cyclic_group(4), cyclic_group(4))
    with pytest.raises(SizeLimitExceeded):
        brute_force_iso(big, big)
    assert brute_force_iso(big, big, max_n=16) is not None


def test_relabeled_copy_found():
    m = sym3()
    # Conjugating the table by a permutation yields an isomorphic copy.
    perm = [0, 2, 3, 4, 5, 1]
    inv = [0] * 6
    for i, p in enumerate(perm):
        inv[p] = i
    table = [[perm[m.table[inv[i]][inv[j]]] for j in range(6)] for i in range(6)]
    other = validate_monoid(6, table, perm[m.id])
    w = brute_force_iso(m, other)
    assert w is not None
    assert w.forward.values[m.id] == other.id


SMALL = [trivial_monoid(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
         klein_four(), sym3(), chain(2).base, chain(3).base, m3()]


def test_symmetry_of_verdict():
    for a in SMALL:
        for b in SMALL:
            assert (brute_force_iso(a, b) is None) == (brute_force_iso(b, a) is None)


def test_pruning_soundness_against_slow_mode():
    for a in SMALL:
        for b in SMALL:
            fast = brute_force_iso(a, b)
            slow = brute_force_iso(a, b, pruning=False)
            assert (fast is None) == (slow is None)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_witnesses_verify(a, b):
    w = brute_force_iso(a, b)
    if w is not None:
        # verify_iso accepts exactly what the search emits.
        verify_iso(a, b, list(w.forward.values), list(w.backward.values))
