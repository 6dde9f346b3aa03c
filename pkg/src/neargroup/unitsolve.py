"""Exact solving of unit (root-of-unity) equation systems.

A monomial equation between nonzero scalars, say x1^2 * x3 = -1, becomes
linear over Q/Z after writing each unknown as exp(2 pi i t): the integer
exponent row (2, 0, 1) and the rational right side 1/2.  This module
solves such systems exactly via Smith normal form: full solution lists,
solution counts modulo a gauge subgroup, and integer certificates showing
that a target relation follows from a system.

All matrices are plain lists of integer lists; right sides and solutions
are Fractions taken mod 1.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


class FreeDirectionError(Exception):
    """The solution set is infinite (a free direction survives)."""


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(a) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return unimodular U, V and diagonal D with U a V = D.

    D has nonnegative diagonal entries satisfying d1 | d2 | ...
    """
    d = [list(row) for row in a]
    m = len(d)
    n = len(d[0]) if d else 0
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        d[dst] = [x + f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in d:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def clear(t):
        # Make d[t][t] the only nonzero entry in its row and column.
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j]:
                        swap_cols(t, j)
                        dirty = True

    t = 0
    while t < m and t < n:
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if d[i][j] and (pivot is None or abs(d[i][j]) < abs(d[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        clear(t)
        t += 1
    rank = t

    def fix_sign(i):
        if d[i][i] < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]

    for i in range(rank):
        fix_sign(i)
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            if d[i + 1][i + 1] % d[i][i]:
                add_col(i, i + 1, 1)
                clear(i)
                fix_sign(i)
                fix_sign(i + 1)
                changed = True
    return u, d, v


def integer_kernel_basis(a) -> list[list[int]]:
    """Basis of {x : a x = 0} over the integers; the lattice is saturated."""
    m = len(a)
    n = len(a[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return _identity(n)
    u, d, v = smith_normal_form(a)
    rank = sum(1 for i in range(min(m, n)) if d[i][i])
    return [[v[r][j] for r in range(n)] for j in range(rank, n)]


def solve_integer(a, b) -> list[int] | None:
    """One integer solution of a x = b, or None."""
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return [0] * n
    u, d, v = smith_normal_form(a)
    ub = [sum(u[i][j] * b[j] for j in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
        elif ub[i]:
            return None
    return [sum(v[i][j] * y[j] for j in range(n)) for i in range(n)]


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def solve_mod1(a, beta, max_solutions: int = 1_000_000) -> list[tuple[Fraction, ...]]:
    """All solutions of a x = beta over (Q/Z)^n, as tuples of Fractions in [0,1).

    Raises FreeDirectionError when a variable direction is unconstrained
    (the solution set would be infinite); returns [] when inconsistent.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    beta = [Fraction(b) for b in beta]
    if n == 0:
        return [()] if all(_mod1(b) == 0 for b in beta) else []
    if m == 0:
        raise FreeDirectionError("no equations constrain the variables")
    u, d, v = smith_normal_form(a)
    ub = [sum(Fraction(u[i][j]) * beta[j] for j in range(m)) for i in range(m)]
    choices = []
    count = 1
    for i in range(n):
        di = d[i][i] if i < m else 0
        if di == 0:
            raise FreeDirectionError(f"free direction in column {i}")
        base = ub[i] / di
        choices.append([_mod1(base + Fraction(t, di)) for t in range(di)])
        count *= di
        if count > max_solutions:
            raise FreeDirectionError(f"more than {max_solutions} solutions")
    for i in range(n, m):
        if _mod1(ub[i]) != 0:
            return []
    out = []
    for ys in product(*choices):
        x = tuple(
            _mod1(sum(Fraction(v[i][j]) * ys[j] for j in range(n)))
            for i in range(n)
        )
        out.append(x)
    return out


def row_combination(a, target) -> list[int] | None:
    """Integer y with y a = target, or None when target is outside the row span."""
    if not a:
        return None if any(target) else []
    at = [list(col) for col in zip(*a)]
    return solve_integer(at, list(target))


def implied_constant(a, beta, target) -> Fraction | None:
    """The common value of target . x over all solutions, or None.

    None means either no solutions exist or the value varies.
    """
    try:
        sols = solve_mod1(a, beta)
    except FreeDirectionError:
        y = row_combination(a, target)
        if y is None:
            return None
        return _mod1(sum(Fraction(c) * Fraction(b) for c, b in zip(y, beta)))
    if not sols:
        return None
    values = {
        _mod1(sum(Fraction(t) * x for t, x in zip(target, sol))) for sol in sols
    }
    return values.pop() if len(values) == 1 else None


def solve_mod1_quotient(a, beta, gauge) -> tuple[int, list[tuple[Fraction, ...]]]:
    """Count and represent solutions of a x = beta modulo the gauge subgroup.

    gauge is an n x p integer matrix whose columns span the directions the
    gauge group can shift solutions along (by arbitrary rational amounts).
    Every equation row must be gauge invariant.  Returns the orbit count
    and one lifted representative per orbit, each re-verified against the
    original system.
    """
    n = len(gauge)
    p = len(gauge[0]) if n else 0
    for row in a:
        for j in range(p):
            if sum(row[i] * gauge[i][j] for i in range(n)):
                raise ValueError(f"equation {row} is not gauge invariant")
    gauge_t = [[gauge[i][j] for i in range(n)] for j in range(p)]
    proj = integer_kernel_basis(gauge_t) if p else _identity(n)
    reduced = []
    for row in a:
        y = row_combination(proj, row)
        if y is None:
            raise AssertionError("invariant row failed to factor through the quotient")
        reduced.append(y)
    if proj:
        ysols = solve_mod1(reduced, beta)
    else:
        ysols = [()] if all(_mod1(Fraction(b)) == 0 for b in beta) else []
    reps = []
    for ysol in ysols:
        x = _lift_through(proj, ysol, n)
        for row, b in zip(a, beta):
            if _mod1(sum(Fraction(c) * xi for c, xi in zip(row, x)) - Fraction(b)) != 0:
                raise AssertionError("lifted representative fails the original system")
        reps.append(x)
    return len(ysols), reps


def _lift_through(proj, ysol, n) -> tuple[Fraction, ...]:
    # One x with proj . x = ysol mod 1; proj spans a saturated lattice, so
    # its Smith form has unit diagonal and the lift is exact.
    if not proj:
        return tuple(Fraction(0) for _ in range(n))
    u, d, v = smith_normal_form(proj)
    r = len(proj)
    for i in range(r):
        if d[i][i] != 1:
            raise AssertionError("projection lattice is not saturated")
    uy = [sum(Fraction(u[i][j]) * ysol[j] for j in range(r)) for i in range(r)]
    padded = uy + [Fraction(0)] * (n - r)
    return tuple(
        _mod1(sum(Fraction(v[i][j]) * padded[j] for j in range(n))) for i in range(n)
    )
