import pytest

from neargroup.groups import AbelianGroup, abelian_groups_of_order, orthogonality_sum


def test_cyclic_basics():
    g6 = AbelianGroup.cyclic(6)
    assert g6.order == 6
    assert g6.exponent == 6
    assert g6.is_cyclic
    assert [e.name for e in g6.elements()] == ["e", "g", "g2", "g3", "g4", "g5"]
    assert len(g6.nonidentity()) == 5


def test_element_arithmetic():
    g = AbelianGroup.cyclic(4)
    a = g.element_named("g")
    assert (a * a).name == "g2"
    assert a.inverse().name == "g3"
    assert (a ** 3) == a.inverse()
    assert a.order() == 4
    assert (a * a).order() == 2
    assert g.identity.is_identity


def test_product_group():
    g = AbelianGroup((2, 4))
    assert g.order == 8
    assert g.exponent == 4
    assert not g.is_cyclic
    names = {e.name for e in g.elements()}
    assert "e" in names and "a" in names and "b3" in names and "ab2" in names


def test_descriptor_round_trip():
    for text in ("Z1", "Z5", "Z2xZ2", "Z2xZ4", "Z3xZ3"):
        assert AbelianGroup.parse_descriptor(text).descriptor() == text
    with pytest.raises(ValueError):
        AbelianGroup.parse_descriptor("Q8")


def test_element_named_errors():
    g = AbelianGroup.cyclic(3)
    with pytest.raises(ValueError):
        g.element_named("h")


def test_abelian_groups_of_order():
    assert [g.descriptor() for g in abelian_groups_of_order(1)] == ["Z1"]
    assert len(abelian_groups_of_order(4)) == 2
    assert len(abelian_groups_of_order(8)) == 3
    assert len(abelian_groups_of_order(12)) == 2
    assert len(abelian_groups_of_order(16)) == 5
    found = {g.descriptor() for g in abelian_groups_of_order(4)}
    assert found == {"Z4", "Z2xZ2"}


def test_characters_are_homomorphisms():
    g = AbelianGroup((2, 3))
    for chi in g.characters():
        for a in g.elements():
            for b in g.elements():
                assert chi.value(a * b) == chi.value(a) * chi.value(b)
            assert chi.value(a) * chi.value(a.inverse()) == 1


def test_character_group_structure():
    g = AbelianGroup.cyclic(5)
    chars = g.characters()
    assert len(chars) == 5
    assert chars[0].is_trivial
    chi = chars[1]
    assert (chi * chi.inverse()).is_trivial
    assert chi ** 5 == chars[0]
    assert len({chi ** j for j in range(5)}) == 5


def test_orthogonality():
    g = AbelianGroup.cyclic(6)
    for chi in g.characters():
        total = orthogonality_sum(chi)
        assert total == (6 if chi.is_trivial else 0)


def test_dual_iso_is_bijective():
    g = AbelianGroup((2, 2))
    images = {g.dual_iso(x) for x in g.elements()}
    assert len(images) == 4
    for x in g.elements():
        assert g.dual_iso_inverse(g.dual_iso(x)) == x
    assert g.dual_iso(g.identity).is_trivial
