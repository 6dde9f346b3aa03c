"""Integer linear algebra and the mod-1 solvers."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from neargroup.matrix import Matrix
from neargroup.unitsolve import (
    FreeDirectionError,
    implied_constant,
    integer_kernel_basis,
    row_combination,
    smith_normal_form,
    solve_integer,
    solve_mod1,
    solve_mod1_quotient,
)

entries = st.integers(min_value=-4, max_value=4)


@st.composite
def int_matrix(draw, max_dim=4):
    m = draw(st.integers(min_value=1, max_value=max_dim))
    n = draw(st.integers(min_value=1, max_value=max_dim))
    return [[draw(entries) for _ in range(n)] for _ in range(m)]


def mat_mul(a, b):
    return [
        [sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


@given(int_matrix())
@settings(max_examples=60, deadline=None)
def test_smith_form_properties(a):
    m, n = len(a), len(a[0])
    u, d, v = smith_normal_form(a)
    assert mat_mul(mat_mul(u, a), v) == d
    assert Matrix(u).det() in (1, -1)
    assert Matrix(v).det() in (1, -1)
    diag = [d[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    for x, y in zip(diag, diag[1:]):
        if y:
            assert x and y % x == 0
        assert x >= 0 and y >= 0


def test_smith_form_hand_case():
    u, d, v = smith_normal_form([[2, 4], [6, 8]])
    assert [d[0][0], d[1][1]] == [2, 4]


@given(int_matrix())
@settings(max_examples=60, deadline=None)
def test_kernel_basis_annihilates(a):
    basis = integer_kernel_basis(a)
    n = len(a[0])
    for vec in basis:
        assert len(vec) == n
        assert all(sum(row[i] * vec[i] for i in range(n)) == 0 for row in a)


def test_kernel_basis_rank():
    assert integer_kernel_basis([[1, 2, 3]]) != []
    assert integer_kernel_basis([[1, 0], [0, 1]]) == []


@given(int_matrix(), st.data())
@settings(max_examples=60, deadline=None)
def test_solve_integer_round_trip(a, data):
    n = len(a[0])
    x = [data.draw(entries) for _ in range(n)]
    b = [sum(row[i] * x[i] for i in range(n)) for row in a]
    sol = solve_integer(a, b)
    assert sol is not None
    assert [sum(row[i] * sol[i] for i in range(n)) for row in a] == b


def test_solve_integer_unsolvable():
    assert solve_integer([[2]], [1]) is None
    assert solve_integer([[1], [1]], [0, 1]) is None


def test_solve_mod1_hand_cases():
    assert sorted(solve_mod1([[2]], [Fraction(1, 2)])) == [
        (Fraction(1, 4),),
        (Fraction(3, 4),),
    ]
    assert solve_mod1([[1], [2]], [Fraction(1, 3), Fraction(2, 3)]) == [(Fraction(1, 3),)]
    assert solve_mod1([[1], [2]], [Fraction(1, 3), Fraction(1, 2)]) == []
    with pytest.raises(FreeDirectionError):
        solve_mod1([[1, 1]], [Fraction(1, 2)])
    with pytest.raises(FreeDirectionError):
        solve_mod1([[0]], [Fraction(0)])


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_solve_mod1_finds_planted_solution(data):
    n = data.draw(st.integers(min_value=1, max_value=3))
    m = data.draw(st.integers(min_value=n, max_value=n + 2))
    a = [[data.draw(entries) for _ in range(n)] for _ in range(m)]
    x0 = [
        Fraction(data.draw(st.integers(min_value=0, max_value=3)), 4) for _ in range(n)
    ]
    beta = [sum(Fraction(row[i]) * x0[i] for i in range(n)) for row in a]
    try:
        sols = solve_mod1(a, beta)
    except FreeDirectionError:
        assume(False)
    assert tuple(x0) in sols
    for sol in sols:
        for row, b in zip(a, beta):
            total = sum(Fraction(c) * v for c, v in zip(row, sol)) - b
            assert total.denominator == 1


def test_row_combination():
    a = [[1, 0, 1], [0, 1, 1]]
    y = row_combination(a, [2, 3, 5])
    assert y == [2, 3]
    assert row_combination([[2, 0]], [1, 0]) is None
    assert row_combination([], [0, 0]) == []
    assert row_combination([], [1]) is None


def test_implied_constant():
    half = Fraction(1, 2)
    assert implied_constant([[2]], [half], [2]) == half
    assert implied_constant([[2]], [half], [1]) is None
    # free direction, but the target factors through the rows
    assert implied_constant([[1, 1]], [half], [2, 2]) == 0
    assert implied_constant([[1, 1]], [half], [1, 0]) is None
    # inconsistent system
    assert implied_constant([[1], [2]], [Fraction(1, 3), half], [1]) is None


def test_quotient_rejects_varying_row():
    with pytest.raises(ValueError):
        solve_mod1_quotient([[1, 0]], [Fraction(0)], [[1], [0]])


def test_quotient_trivial_gauge_matches_plain():
    a = [[2, 0], [0, 3]]
    beta = [Fraction(0), Fraction(0)]
    count, reps = solve_mod1_quotient(a, beta, [[], []])
    plain = solve_mod1(a, beta)
    assert count == len(plain) == 6
    assert sorted(reps) == sorted(plain)


def test_quotient_collapses_gauge_direction():
    gauge = [[1], [-1]]
    count, reps = solve_mod1_quotient([[1, 1]], [Fraction(1, 2)], gauge)
    assert count == 1
    ((x1, x2),) = reps
    assert (x1 + x2 - Fraction(1, 2)).denominator == 1

    count2, reps2 = solve_mod1_quotient([[2, 2]], [Fraction(1, 2)], gauge)
    assert count2 == 2
    sums = {(x + y) % 1 for x, y in reps2}
    assert sums == {Fraction(1, 4), Fraction(3, 4)}
