"""Enumeration of scalar solution families up to basis rescaling.

The unknowns (xi, c, N, delta) are unit cyclotomics, so each solution is
a vector of angles in Q/Z and the scalar equations become an integer
linear system on those angles.  Rescaling the chosen hom-space bases
shifts the angles along a fixed integer lattice without changing the
category, so distinct structures are counted modulo that lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .associators import IndexAlgebra, NearGroupPrimitive, build_index_algebra
from .cyclotomic import Cyclotomic, root_of_unity
from .groups import AbelianGroup
from .pi_structures import PiStructure
from .symbolic import DELTA, primitive_variables
from .unitsolve import solve_mod1_quotient


def _circ_solve(alg: IndexAlgebra, lhs: int, out: int) -> int:
    u = alg.star(alg.perm_inverse(out), alg.star_inverse(alg.perm_inverse(lhs)))
    return alg.perm(u) if u else 0


def functional_equation_rows(
    algebra: IndexAlgebra,
) -> tuple[list[tuple], list[list[int]], list[Fraction]]:
    """The scalar equations as integer angle relations.

    Returns (variables, rows, constants) with one row per equation
    instance, each row holding the exponent of every variable in the
    (lhs / rhs) ratio, plus the torsion row fixing delta to +-1.  The
    instance set mirrors verify_16_24 exactly.
    """
    vars_ = primitive_variables(algebra)
    pos = {v: i for i, v in enumerate(vars_)}
    K = list(algebra.indices())
    st, sinv = algebra.star, algebra.star_inverse
    pm, pminv = algebra.perm, algebra.perm_inverse
    rows: list[list[int]] = []
    consts: list[Fraction] = []

    def add(terms) -> None:
        row = [0] * len(vars_)
        for sgn, v in terms:
            row[pos[v]] += sgn
        rows.append(row)
        consts.append(Fraction(0))

    for i in K:
        ii = sinv(i)
        add([(1, ("c", i)), (-1, ("c", pminv(i))), (-1, DELTA),
             (-1, ("xi", ii)), (-1, ("xi", pm(ii))), (-1, ("xi", pminv(i)))])
        add([(1, ("xi", i)), (1, ("c", i)), (-1, DELTA),
             (-1, ("xi", pm(ii))), (-1, ("c", pm(ii)))])
        add([(1, ("c", i)), (-1, DELTA), (-1, ("c", sinv(pm(i))))])
    for i in K:
        for j in K:
            ij = st(i, j)
            if i != j:
                add([(1, ("c", i)), (-1, ("c", j)),
                     (-1, ("n", st(i, sinv(j)), j)),
                     (-1, ("n", st(pm(j), sinv(pm(i))), sinv(pm(j))))])
            t = st(pminv(i), pm(sinv(j)))
            if i != j and t != 0:
                add([(1, ("xi", t)), (1, ("c", t)),
                     (-1, ("xi", pminv(i))), (-1, ("c", pminv(i))),
                     (-1, ("n", i, st(sinv(i), j))), (-1, ("n", sinv(i), j))])
            if ij != 0:
                add([(1, ("c", i)), (1, ("n", i, j)), (-1, ("xi", j)),
                     (-1, ("c", ij)), (-1, ("n", sinv(pm(ij)), pm(j)))])
                r = st(pminv(i), pm(j))
                if r != 0:
                    add([(1, ("c", sinv(ij))), (-1, ("c", j)), (-1, ("xi", j)),
                         (-1, ("n", r, sinv(pm(j)))), (-1, ("n", pminv(i), pm(j)))])
    # three-N relation (the all-pair corner of the big coherence identity)
    for a in K:
        for b in K:
            for c in K:
                ba = st(b, a)
                if ba == 0:
                    continue
                cb, cba = st(c, b), st(c, ba)
                if cb == 0 or cba == 0:
                    continue
                t1 = _circ_solve(algebra, ba, b)
                t2 = _circ_solve(algebra, cba, c)
                if t1 == 0 or t2 == 0 or st(t2, t1) == 0:
                    continue
                add([(1, ("n", b, a)), (1, ("n", c, ba)), (1, ("n", t2, t1)),
                     (-1, ("n", cb, a)), (-1, ("n", c, b))])
    add([(2, DELTA)])
    return vars_, rows, consts


def gauge_directions(algebra: IndexAlgebra) -> list[list[int]]:
    """Angle shifts from rescaling the hom-space bases, as matrix columns.

    One column per rescaling parameter: u_1..u_k for the m-into-mm basis
    vectors and a single v for the group-slot vectors.  delta is gauge
    invariant.
    """
    vars_ = primitive_variables(algebra)
    pos = {v: i for i, v in enumerate(vars_)}
    K = list(algebra.indices())
    cols: list[list[int]] = []
    for u in K:
        col = [0] * len(vars_)
        for j in K:
            if j == u:
                col[pos[("xi", j)]] += 1
            if algebra.perm(j) == u:
                col[pos[("xi", j)]] -= 1
        for i in K:
            if i == u:
                col[pos[("c", i)]] -= 1
            if algebra.circ_inverse(i) == u:
                col[pos[("c", i)]] -= 1
        for r, s in algebra.n_domain():
            e = 0
            if r == u:
                e += 1
            if s == u:
                e += 1
            if algebra.star(r, s) == u:
                e -= 1
            if _circ_solve(algebra, algebra.star(r, s), r) == u:
                e -= 1
            if e:
                col[pos[("n", r, s)]] += e
        cols.append(col)
    vcol = [0] * len(vars_)
    for i in K:
        vcol[pos[("c", i)]] += 1
    cols.append(vcol)
    # transpose to variables x parameters
    return [[col[i] for col in cols] for i in range(len(vars_))]


def _value_from_angle(angle: Fraction) -> Cyclotomic:
    a = Fraction(angle) % 1
    return root_of_unity(a.denominator, a.numerator)


def primitive_from_angles(
    algebra: IndexAlgebra, vars_: list[tuple], angles
) -> NearGroupPrimitive:
    by_var = dict(zip(vars_, angles))
    if by_var[DELTA] % 1 not in (Fraction(0), Fraction(1, 2)):
        raise ValueError(f"delta angle {by_var[DELTA]} is not +-1")
    delta = 1 if by_var[DELTA] % 1 == 0 else -1
    K = list(algebra.indices())
    xi = tuple(_value_from_angle(by_var[("xi", i)]) for i in K)
    c_eps = tuple(_value_from_angle(by_var[("c", i)]) for i in K)
    n_func = {
        (r, s): _value_from_angle(by_var[("n", r, s)])
        for r, s in algebra.n_domain()
    }
    return NearGroupPrimitive(delta, xi, c_eps, n_func)


@dataclass
class MonoidalEnumeration:
    group: AbelianGroup
    pi: PiStructure
    count: int
    representatives: list[NearGroupPrimitive]

    def render(self) -> str:
        head = (
            f"{self.group.descriptor()} with pi={self.pi}: "
            f"{self.count} structure{'s' if self.count != 1 else ''} "
            f"up to gauge"
        )
        lines = [head]
        for p in self.representatives:
            lines.append(f"  {p!r}")
        return "\n".join(lines)


def enumerate_monoidal(
    group: AbelianGroup, pi: PiStructure, verify: bool = True
) -> MonoidalEnumeration:
    """All solutions of the scalar equations, one representative per orbit.

    With ``verify`` set, every representative is rebuilt into full data
    and run through the scalar verifier again as a guard against solver
    or lifting bugs.
    """
    algebra = build_index_algebra(group, pi)
    vars_, rows, consts = functional_equation_rows(algebra)
    count, reps = solve_mod1_quotient(rows, consts, gauge_directions(algebra))
    prims = [primitive_from_angles(algebra, vars_, rep) for rep in reps]
    if verify:
        from .coherence import verify_16_24

        for prim in prims:
            report = verify_16_24(prim, pi)
            if not report.passed:
                raise AssertionError(
                    f"enumerated representative fails re-verification: {prim!r}"
                )
    return MonoidalEnumeration(group, pi, count, prims)
