"""The permutation search, field reconstruction, and affine fusion counts."""

import pytest

from neargroup.fields import SmallField
from neargroup.groups import AbelianGroup, abelian_groups_of_order
from neargroup.pi_structures import (
    PiStructure,
    affine_group_fusion,
    field_from_pi,
    fields_isomorphic,
    find_all_pi,
    pi_from_field,
)

# Exhaustive search results, frozen.  Nonempty exactly at cyclic orders
# q-1 for prime powers q; the counts grow with the number of primitive
# roots.
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 6: 2, 7: 2, 8: 2, 10: 4, 12: 4, 15: 2}


@pytest.mark.parametrize("n", range(1, 16))
def test_search_counts_cyclic(n):
    found = find_all_pi(AbelianGroup.cyclic(n))
    assert len(found) == EXPECTED_COUNTS.get(n, 0)


def test_search_empty_for_noncyclic():
    for n in range(4, 16):
        for group in abelian_groups_of_order(n):
            if not group.is_cyclic:
                assert find_all_pi(group) == []


def test_structures_have_order_three():
    for pi in find_all_pi(AbelianGroup.cyclic(8)):
        group = AbelianGroup.cyclic(8)
        for x in group.nonidentity():
            assert pi(pi(pi(x))) == x
            assert pi.apply_inverse(pi(x)) == x


def test_omega():
    group = AbelianGroup.cyclic(4)
    for pi in find_all_pi(group):
        w = pi.omega()
        assert w.name == "g2"
        assert (w * w).is_identity
    group3 = AbelianGroup.cyclic(3)
    (pi3,) = find_all_pi(group3)
    assert pi3.omega().is_identity


def test_cycle_notation_round_trip():
    group = AbelianGroup.cyclic(7)
    for pi in find_all_pi(group):
        assert PiStructure.parse(group, str(pi)) == pi
    # the order-2 structure fixes everything, so it prints and parses as id
    z2 = AbelianGroup.cyclic(2)
    (fix,) = find_all_pi(z2)
    assert str(fix) == "id"
    assert PiStructure.parse(z2, "id") == fix


def test_parse_rejects_bad_cycles():
    group = AbelianGroup.cyclic(4)
    with pytest.raises(ValueError):
        PiStructure.parse(group, "(g g2)(g2 g3)")
    with pytest.raises(ValueError):
        PiStructure.parse(group, "(e g)")
    with pytest.raises(ValueError):
        PiStructure.parse(group, "g g2")


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_field_round_trip(q):
    group, pi = pi_from_field(q)
    assert group.order == q - 1
    table = field_from_pi(group, pi)  # checks every axiom internally
    assert table.q == q
    assert fields_isomorphic(table, SmallField(q))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_every_found_structure_gives_the_field(q):
    group = AbelianGroup.cyclic(q - 1)
    structures = find_all_pi(group)
    assert structures
    for pi in structures:
        assert fields_isomorphic(field_from_pi(group, pi), SmallField(q))


def test_field_from_pi_rejects_wrong_group():
    g4 = AbelianGroup.cyclic(4)
    g6 = AbelianGroup.cyclic(6)
    (pi,) = find_all_pi(AbelianGroup.cyclic(6))[:1]
    with pytest.raises(ValueError):
        field_from_pi(g4, pi)
    del g6


def test_invalid_permutation_rejected():
    group = AbelianGroup.cyclic(4)
    with pytest.raises(ValueError):
        PiStructure.parse(group, "(g g2)")


def test_fields_isomorphic_distinguishes_orders():
    assert not fields_isomorphic(SmallField(4), SmallField(5))
    assert fields_isomorphic(SmallField(9), SmallField(9))


def test_small_field_arithmetic():
    f = SmallField(8)
    # characteristic 2: x + x = 0
    for a in range(8):
        assert f.add(a, a) == 0
    g = f.primitive_element()
    seen = {1}
    x = 1
    for _ in range(6):
        x = f.mul(x, g)
        seen.add(x)
    assert len(seen) == 7
    for a in range(1, 8):
        assert f.mul(a, f.inverse(a)) == 1
        assert f.power(g, f.discrete_log(a)) == a


def test_small_field_frobenius():
    for q, p in ((9, 3), (8, 2)):
        f = SmallField(q)
        for a in range(q):
            for b in range(q):
                assert f.power(f.add(a, b), p) == f.add(f.power(a, p), f.power(b, p))


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_affine_group_fusion(q):
    assert affine_group_fusion(q) == (q * (q - 1), q - 1, q - 1, q - 2)


def test_affine_group_fusion_rejects():
    with pytest.raises(ValueError):
        affine_group_fusion(6)
    with pytest.raises(ValueError):
        affine_group_fusion(2)
