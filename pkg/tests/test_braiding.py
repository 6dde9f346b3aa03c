"""Braiding enumeration, hexagon checking, twists, and classification."""

import pytest

from neargroup.associators import construct_standard, example_data
from neargroup.braiding import (
    BraidingData,
    braiding_record,
    classify,
    enumerate_braidings,
    hexagon_constraints,
    is_balanced,
    is_symmetric,
    reduced_solutions,
    reverse_braiding,
    twist_solutions,
    verify_hexagons,
)
from neargroup.cyclotomic import Cyclotomic, root_of_unity
from neargroup.pi_structures import pi_from_field

ONE = Cyclotomic.one()

FORWARD_FAMILIES = [
    "abc/abc", "abm/m", "amb/m", "mab/m", "mma/b", "mam/b", "amm/b",
    "mma/m", "mam/m", "amm/m", "mmm/g",
    "mmm/m-I", "mmm/m-II", "mmm/m-III", "mmm/m-IV",
]


def test_braiding_counts():
    assert len(enumerate_braidings(example_data("Z2k1"))) == 3
    assert len(enumerate_braidings(example_data("Z3k2"))) == 4
    assert len(enumerate_braidings(example_data("Z4k3"))) == 1


def test_z2_braidings_are_cube_roots():
    data = example_data("Z2k1")
    found = enumerate_braidings(data)
    psis = {b.psi[0] for b in found}
    assert psis == {ONE, root_of_unity(3, 1), root_of_unity(3, 2)}
    for b in found:
        assert b.psi[0] ** 3 == ONE
        assert b.sigma3_eps == b.psi[0].inverse()
        symmetric = b.psi[0] == ONE
        assert is_symmetric(data, b) == symmetric
        assert is_balanced(data, b) == symmetric
        if symmetric:
            (twist,) = twist_solutions(data, b)
            assert twist.theta_m == ONE
            assert twist.theta_g(data.group.identity) == ONE
        else:
            assert twist_solutions(data, b) == []


def test_z2_nonstandard_scalars_admit_no_braiding():
    for variant in ("zeta3", "zeta3^2"):
        data = example_data("Z2k1", variant)
        assert len(reduced_solutions(data)) == 3
        assert enumerate_braidings(data) == []


def test_z3_braidings_are_signs():
    data = example_data("Z3k2")
    found = enumerate_braidings(data)
    assert len(found) == 4
    assert {tuple(b.psi) for b in found} == {
        (x, y) for x in (ONE, -ONE) for y in (ONE, -ONE)
    }
    for b in found:
        assert b.sigma3_eps == b.psi[0] * b.psi[1]
        assert is_symmetric(data, b) == (b.psi[0] == b.psi[1])
        # every braiding here is balanced; the twist is the common sign
        (twist,) = twist_solutions(data, b)
        assert twist.theta_m == b.psi[0] * b.psi[1]
        assert twist.theta_m == (ONE if is_symmetric(data, b) else -ONE)


def test_z3_flipped_delta_admits_no_braiding():
    data = example_data("Z3k2", "-1")
    assert len(reduced_solutions(data)) == 4
    assert enumerate_braidings(data) == []


def test_z4_reduced_solutions_form_a_cycle():
    data = example_data("Z4k3")
    candidates = reduced_solutions(data)
    assert len(candidates) == 5
    gens = {b.psi[1] for b in candidates}
    assert len(gens) == 5
    for b in candidates:
        p2 = b.psi[1]
        assert p2 ** 5 == ONE
        assert b.psi[0] == p2 ** 2
        assert b.psi[2] == p2.inverse()
        assert b.sigma3_eps == (p2 ** 2).inverse()
    survivors = enumerate_braidings(data)
    assert survivors == [BraidingData(ONE, (ONE, ONE, ONE))]
    (b,) = survivors
    assert is_symmetric(data, b) and is_balanced(data, b)


def test_commuting_maps():
    data = example_data("Z4k3")
    (b,) = enumerate_braidings(data)
    alg = data.algebra
    w = alg.omega_index()
    for g in data.group.elements():
        for h in data.group.elements():
            assert b.sigma0(data, g, h) == ONE
        assert b.sigma1(data, g) == data.chi(w, g)
        assert b.sigma2(data, g) == b.sigma1(data, g)
        assert b.sigma1(data, g) ** 2 == ONE
        assert b.sigma3(data, g) == b.sigma3_eps * b.sigma1(data, g)
    s4 = b.sigma4(data)
    for j in alg.indices():
        target = alg.perm(alg.star_inverse(j))
        hits = [i for i in range(data.k) if not s4[i, j - 1].is_zero()]
        assert hits == [target - 1]
        assert s4[target - 1, j - 1] == b.psi_at(j)


def test_reverse_is_an_involution():
    for name in ("Z3k2", "Z4k3"):
        data = example_data(name)
        for b in enumerate_braidings(data):
            back = reverse_braiding(data, reverse_braiding(data, b))
            assert back == b


def test_hexagons_pass_for_every_enumerated_braiding():
    for name in ("Z2k1", "Z3k2", "Z4k3"):
        data = example_data(name)
        for b in enumerate_braidings(data):
            report = verify_hexagons(data, b)
            assert report.passed, report.render()
            assert [f.family for f in report.families] == FORWARD_FAMILIES + [
                "inv:" + f for f in FORWARD_FAMILIES
            ]


def test_perturbed_psi_fails_the_mixed_families():
    data = example_data("Z3k2")
    bad = BraidingData(ONE, (ONE, root_of_unity(3, 1)))
    report = verify_hexagons(data, bad)
    assert sorted(f.family for f in report.families if not f.passed) == [
        "inv:mmm/g", "inv:mmm/m-II", "inv:mmm/m-III", "inv:mmm/m-IV",
        "mmm/g", "mmm/m-II", "mmm/m-III", "mmm/m-IV",
    ]


def test_root_order_and_bound_escalation():
    data = example_data("Z2k1")
    found = enumerate_braidings(data)
    assert sorted(b.root_order() for b in found) == [1, 3, 3]
    # a tight cap escalates instead of silently dropping solutions
    assert enumerate_braidings(data, root_order_bound=1) == found


def test_serialization_round_trip():
    data = example_data("Z3k2")
    for b in enumerate_braidings(data):
        assert BraidingData.from_obj(b.to_obj()) == b


def test_braiding_record_shape():
    data = example_data("Z3k2")
    b = enumerate_braidings(data)[0]
    record = braiding_record(data, b)
    assert set(record) == {"sigma3_eps", "psi", "symmetric", "twists"}
    assert isinstance(record["symmetric"], bool)
    assert len(record["psi"]) == data.k
    assert len(record["twists"]) == 1


@pytest.mark.parametrize("q,count", [(7, 35), (8, 43), (9, 63)])
def test_hexagon_constraint_counts(q, count):
    data = construct_standard(*pi_from_field(q))
    constraints = hexagon_constraints(data)
    assert len(constraints) == count
    for c in constraints:
        assert "=" in c.render()


def test_classify_unique_case():
    row = classify(example_data("Z4k3"))
    assert row.render().splitlines()[0] == (
        "(Z4, 3) over F5: unique monoidal structure / unique braiding / "
        "balanced / symmetric"
    )
    obj = row.to_obj()
    assert obj["monoidal_structures"] == 1
    assert len(obj["braidings"]) == 1
    assert obj["braidings"][0]["symmetric"] is True


def test_classify_smallest_case():
    row = classify(example_data("Z3k2"))
    assert (
        "2 monoidal structures / 4 braidings / balanced / partly symmetric"
        in row.render()
    )
    assert row.field == "F4"
    assert row.fusion == "(Z3, 2)"
