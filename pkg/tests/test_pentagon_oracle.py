"""The generic four-letter coherence oracle and its symbolic variant.

The oracle recomputes both sides of each five-step identity from raw
matrix elements, sharing nothing with the per-family verifiers, so
agreement between the two is meaningful evidence.
"""

import pytest

from neargroup.associators import (
    NearGroupPrimitive,
    construct_from_primitive,
    example_data,
)
from neargroup.coherence import generic_pentagon_oracle, oracle_sweep
from neargroup.cyclotomic import Cyclotomic, root_of_unity
from neargroup.groups import AbelianGroup
from neargroup.pentagon_trees import M, T1, tree_basis
from neargroup.pi_structures import PiStructure
from neargroup.symbolic import DELTA, FormalData, FormalUnit


def test_all_m_word_passes_each_summand():
    data = example_data("Z2k1", "zeta3")
    e, g = data.group.elements()
    dims = {}
    for summand in (e, g, M):
        res = generic_pentagon_oracle(data, (M, M, M, M), summand)
        assert res.passed
        dims[summand] = res.dim
    assert dims == {e: 3, g: 3, M: 5}


def test_mixed_words():
    data = example_data("Z2k1")
    e, g = data.group.elements()
    res = generic_pentagon_oracle(data, (g, M, M, g), M)
    assert res.passed and res.dim == 1

    d4 = example_data("Z4k3")
    els = d4.group.elements()
    res = generic_pentagon_oracle(d4, (M, M, M, M), M)
    assert res.passed and res.dim == 51
    res = generic_pentagon_oracle(d4, (els[1], M, els[2], M), els[0])
    assert res.passed and res.dim == 1


def test_group_only_words_are_vacuous_or_trivial():
    data = example_data("Z3k2")
    e, g, g2 = data.group.elements()
    ok = generic_pentagon_oracle(data, (g, g, g2, e), g)
    assert ok.passed and ok.dim == 1
    empty = generic_pentagon_oracle(data, (g, g, g2, e), g2)
    assert empty.passed and empty.dim == 0


def test_sweep_totals_z2():
    sweep = oracle_sweep(example_data("Z2k1"))
    assert len(sweep) == 243
    assert sum(res.dim for res in sweep) == 171
    assert all(res.passed for res in sweep)


def test_perturbed_n_fails():
    base = example_data("Z4k3")
    n_func = dict(base.primitive.n_func)
    n_func[(1, 1)] = root_of_unity(5, 1)
    bad = construct_from_primitive(
        base.group, base.pi, NearGroupPrimitive(1, base.primitive.xi, base.primitive.c_eps, n_func)
    )
    res = generic_pentagon_oracle(bad, (M, M, M, M), M)
    assert not res.passed
    assert "mismatch" in res.render()


def test_perturbed_xi_fails():
    group = AbelianGroup.cyclic(2)
    pi = PiStructure.parse(group, "id")
    bad = construct_from_primitive(
        group, pi, NearGroupPrimitive(1, (root_of_unity(5, 1),), (1,), {})
    )
    failures = [res for res in oracle_sweep(bad) if not res.passed]
    assert failures


def test_tree_basis_counts():
    data = example_data("Z2k1")
    states = tree_basis(data, T1, (M, M, M, M), M)
    assert len(states) == 5
    for asgn in states:
        assert set(asgn) == {(), (0,), (0, 0)}
        assert asgn[()][0] == M


def formal_value(unit, values):
    total = Cyclotomic.zero()
    for mono, coeff in unit.terms.items():
        acc = coeff
        for var, exp in mono:
            acc = acc * values[var] ** exp
        total = total + acc
    return total


def test_formal_unit_algebra():
    x = FormalUnit.var(("xi", 1))
    c = FormalUnit.var(("c", 1))
    assert x * x.inverse() == FormalUnit.scalar(1)
    assert (x * c) * (x * c).inverse() == FormalUnit.scalar(1)
    assert x + c - c == x
    assert str(x * x) in ("(1)*xi1^2", "(1)*xi1*xi1")
    with pytest.raises(ValueError):
        (x + c).inverse()
    assert not (x - x)


def test_symbolic_pentagon_closes_under_enumerated_values():
    group = AbelianGroup.cyclic(2)
    pi = PiStructure.parse(group, "id")
    formal = FormalData(group, pi)
    res = generic_pentagon_oracle(formal, (M, M, M, M), M)
    # symbolically open: the unit scalars are opaque at this level
    assert res.mismatches
    one = Cyclotomic.one()
    for xi in (one, root_of_unity(3, 1), root_of_unity(3, 2)):
        values = {("xi", 1): xi, ("c", 1): one, DELTA: one}
        for _, _, lhs, rhs in res.mismatches:
            assert formal_value(lhs, values) == formal_value(rhs, values)
    # a unit outside the solution set leaves at least one identity open
    bad = {("xi", 1): root_of_unity(5, 1), ("c", 1): one, DELTA: one}
    assert any(
        formal_value(lhs, bad) != formal_value(rhs, bad)
        for _, _, lhs, rhs in res.mismatches
    )
