"""Commuting structures on near-group data.

A braiding is pinned down by the scalar sigma3(eps) together with the k
constants psi(1..k); every commuting map (sigma0 through sigma4) is
recomputed from those and the distinguished involution omega, never
stored.  Enumeration solves the reduced scalar system exactly and then
keeps only candidates that pass the complete unreduced hexagon list in
both directions; the reduced system is never trusted on its own.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .associators import NearGroupData, _unit
from .coherence import VerificationReport, _Collector
from .cyclotomic import Cyclotomic, root_of_unity
from .matrix import Matrix
from .unitsolve import solve_mod1


class BraidingData:
    """The scalar package (sigma3(eps), psi(1..k)) describing a braiding."""

    __slots__ = ("sigma3_eps", "psi")

    def __init__(self, sigma3_eps, psi) -> None:
        self.sigma3_eps = _unit(sigma3_eps)
        self.psi = tuple(_unit(v) for v in psi)

    @property
    def k(self) -> int:
        return len(self.psi)

    def psi_at(self, j: int) -> Cyclotomic:
        return self.psi[j - 1]

    # -- the commuting maps, recomputed on demand --

    def sigma0(self, data: NearGroupData, g, h) -> Cyclotomic:
        return Cyclotomic.one()

    def sigma1(self, data: NearGroupData, g) -> Cyclotomic:
        return data.chi(data.algebra.omega_index(), g)

    def sigma2(self, data: NearGroupData, g) -> Cyclotomic:
        return self.sigma1(data, g)

    def sigma3(self, data: NearGroupData, g) -> Cyclotomic:
        return self.sigma3_eps * self.sigma1(data, g)

    def sigma4(self, data: NearGroupData) -> Matrix:
        """Permutation-like matrix sending slot j to slot perm(j^-1)."""
        k = self.k
        alg = data.algebra
        out = [[Cyclotomic.zero() for _ in range(k)] for _ in range(k)]
        for j in alg.indices():
            out[alg.perm(alg.star_inverse(j)) - 1][j - 1] = self.psi_at(j)
        return Matrix(out)

    def root_order(self) -> int:
        orders = [self.sigma3_eps.multiplicative_order()]
        orders += [v.multiplicative_order() for v in self.psi]
        if any(o is None for o in orders):
            raise ValueError("braiding scalars must be roots of unity")
        return lcm(*orders)

    def to_obj(self) -> dict:
        return {
            "sigma3_eps": self.sigma3_eps.to_obj(),
            "psi": [v.to_obj() for v in self.psi],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> BraidingData:
        return cls(
            Cyclotomic.from_obj(obj["sigma3_eps"]),
            [Cyclotomic.from_obj(v) for v in obj["psi"]],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidingData):
            return NotImplemented
        return self.sigma3_eps == other.sigma3_eps and self.psi == other.psi

    def __repr__(self) -> str:
        psi = ", ".join(str(v) for v in self.psi)
        return f"BraidingData(sigma3_eps={self.sigma3_eps}, psi=({psi}))"


@dataclass(frozen=True)
class TwistData:
    """Twist scalar on the noninvertible object; group objects twist trivially."""

    theta_m: Cyclotomic

    def theta_g(self, g) -> Cyclotomic:
        return Cyclotomic.one()


@dataclass(frozen=True)
class HexagonConstraint:
    """One monomial equation sigma3(eps)^a * prod psi(j)^e_j = value."""

    eq: str
    indices: tuple[int, ...]
    s3_exp: int
    psi_exp: tuple[tuple[int, int], ...]
    value: Cyclotomic

    def evaluate(self, braiding: BraidingData) -> Cyclotomic:
        out = braiding.sigma3_eps ** self.s3_exp
        for j, e in self.psi_exp:
            out = out * braiding.psi_at(j) ** e
        return out

    def satisfied(self, braiding: BraidingData) -> bool:
        return self.evaluate(braiding) == self.value

    def render(self) -> str:
        parts = []
        if self.s3_exp:
            parts.append("s3" if self.s3_exp == 1 else f"s3^{self.s3_exp}")
        for j, e in self.psi_exp:
            parts.append(f"psi({j})" if e == 1 else f"psi({j})^{e}")
        lhs = " ".join(parts) or "1"
        where = ",".join(str(i) for i in self.indices)
        return f"({self.eq})[{where}] {lhs} = {self.value}"


def hexagon_constraints(data: NearGroupData) -> list[HexagonConstraint]:
    """The reduced scalar system, with the datum's xi, c and N substituted.

    One constraint per equation instance; the odd and even group orders
    contribute different tails.  Every index fed to psi or N is checked
    to be nontrivial, so a transcription slip fails loudly instead of
    producing a wrong system.
    """
    alg = data.algebra
    st, sinv, pm, pminv = alg.star, alg.star_inverse, alg.perm, alg.perm_inverse
    xi, c, n = data.xi, data.c_eps, data.n
    out: list[HexagonConstraint] = []

    def add(eq, indices, s3, terms, value):
        acc: dict[int, int] = {}
        for j, e in terms:
            assert j, f"({eq}) hit a trivial index at {indices}"
            acc[j] = acc.get(j, 0) + e
        exp = tuple(sorted((j, e) for j, e in acc.items() if e))
        out.append(HexagonConstraint(eq, tuple(indices), s3, exp, _unit(value)))

    for r in alg.indices():
        add("29", (r,), -1, [(r, 1), (sinv(pm(r)), 1)],
            xi(r) * xi(pm(r)) / xi(pm(sinv(r))))
    for r in alg.indices():
        w = st(r, pm(r))
        if w:
            add("30", (r,), 0, [(sinv(r), 1), (pminv(w), 1)],
                c(w) / (xi(pminv(r)) * c(pminv(r)) * n(r, pm(r))))
    for r in alg.indices():
        for s in alg.indices():
            if s == pm(r) or s == sinv(r):
                continue
            w = st(sinv(s), pm(r))
            rs = st(r, s)
            second = st(pm(s), sinv(pm(rs)))
            assert w and rs and second, ("31", r, s)
            add("31", (r, s), 0, [(s, 1), (pminv(w), 1), (rs, -1)],
                n(r, s) * n(pm(sinv(rs)), second) / n(r, pm(sinv(s))))
    omega = alg.omega_index()
    if omega == 0:
        add("32", (), 2, [], Cyclotomic.from_rational(data.delta))
        for r in alg.indices():
            u = sinv(r)
            add("33", (r,), 1, [(sinv(pm(r)), 1), (r, -1)], n(pm(u), pminv(u)))
    else:
        add("34", (), 2, [(omega, -1)], xi(omega).inverse())
        add("35", (), 1, [(pminv(omega), 1)], Cyclotomic.one())
        for r in alg.indices():
            if r == omega:
                continue
            u = st(omega, sinv(r))
            add("36", (r,), 1, [(sinv(pm(r)), 1), (st(omega, r), -1)],
                n(pm(u), pminv(u)))
            add("37", (r,), 1, [(pminv(r), 1), (u, -1)],
                xi(r) * c(r) * n(pm(r), pminv(r))
                / (xi(st(omega, r)) * c(st(omega, r))))
    return out


def reduced_solutions(data: NearGroupData) -> list[BraidingData]:
    """Exact solutions of the reduced system, before the hexagon filter.

    Unknown angles live in Q/Z, so the monomial equations become an
    integer linear system solved without any search bound.  Values that
    are not roots of unity make the system unsatisfiable over roots of
    unity and yield an empty list.
    """
    constraints = hexagon_constraints(data)
    k = data.k
    rows, consts = [], []
    for cst in constraints:
        angle = cst.value.as_root_of_unity()
        if angle is None:
            return []
        order, power = angle
        row = [cst.s3_exp] + [0] * k
        for j, e in cst.psi_exp:
            row[j] += e
        rows.append(row)
        consts.append(Fraction(power, order) % 1)

    def rou(a: Fraction) -> Cyclotomic:
        a %= 1
        return root_of_unity(a.denominator, a.numerator)

    sols = sorted(set(solve_mod1(rows, consts)))
    return [BraidingData(rou(sol[0]), [rou(x) for x in sol[1:]]) for sol in sols]


def reverse_braiding(data: NearGroupData, braiding: BraidingData) -> BraidingData:
    """The mirror braiding: each commuting map inverted, slots transported."""
    alg = data.algebra
    psi = [
        braiding.psi_at(alg.perm(alg.star_inverse(j))).inverse()
        for j in alg.indices()
    ]
    return BraidingData(braiding.sigma3_eps.inverse(), psi)


def enumerate_braidings(
    data: NearGroupData, root_order_bound: int = 60
) -> list[BraidingData]:
    """All braidings of the datum, deterministically ordered.

    Candidates come from the exact reduced-system solve; each must then
    pass the full unreduced hexagon list forward and reversed.  The
    root-order cap escalates automatically when the equations force
    higher torsion, so the default never loses solutions.
    """
    candidates = reduced_solutions(data)
    highest = max((b.root_order() for b in candidates), default=1)
    if highest > root_order_bound:
        root_order_bound = highest
    return [
        b
        for b in candidates
        if b.root_order() <= root_order_bound and verify_hexagons(data, b).passed
    ]


def verify_hexagons(data: NearGroupData, braiding: BraidingData) -> VerificationReport:
    """Every unreduced hexagon instance, forward and reversed.

    The reversed families (ids prefixed ``inv:``) run the same equations
    against the mirror braiding, which is exactly the second hexagon
    axiom for the original one.
    """
    col = _Collector("hexagons")
    _hexagon_families(data, braiding, col, "")
    _hexagon_families(data, reverse_braiding(data, braiding), col, "inv:")
    return col.done()


def _hexagon_families(data, br, col, prefix) -> None:
    G = data.group.elements()
    alg = data.algebra
    k = data.k
    one = Cyclotomic.one()
    s4 = br.sigma4(data)
    sig1 = {g: br.sigma1(data, g) for g in G}
    sig3 = {g: br.sigma3(data, g) for g in G}
    m = data.m_entry()
    K = list(alg.indices())

    def fam(name):
        col.family(prefix + name)

    fam("abc/abc")
    for a in G:
        for x in G:
            for y in G:
                col.check("abc/abc", (a, x, y),
                          br.sigma0(data, a, y) * br.sigma0(data, a, x),
                          br.sigma0(data, a, x * y))
    fam("abm/m")
    for a in G:
        for x in G:
            col.check("abm/m", (a, x), sig1[a] * br.sigma0(data, a, x), sig1[a])
    fam("amb/m")
    for a in G:
        for x in G:
            col.check("amb/m", (a, x), br.sigma0(data, a, x) * sig1[a], sig1[a])
    fam("mab/m")
    for a in G:
        for x in G:
            col.check("mab/m", (a, x), sig1[x] * sig1[a], sig1[a * x])
    fam("mma/b")
    for a in G:
        for x in G:
            col.check("mma/b", (a, x), sig1[a] * sig3[x * a.inverse()], sig3[x])
    fam("mam/b")
    for a in G:
        for x in G:
            col.check("mam/b", (a, x), sig3[x * a.inverse()] * sig1[a], sig3[x])
    fam("amm/b")
    for a in G:
        for x in G:
            col.check("amm/b", (a, x), sig1[a] * sig1[a],
                      br.sigma0(data, a, x * a.inverse()))
    fam("mma/m")
    for a in G:
        lhs = (data.gamma3(a) @ s4).scale(sig1[a])
        rhs = data.gamma2(a) @ s4 @ data.gamma3(a)
        for i in range(k):
            for j in range(k):
                col.check("mma/m", (a, i + 1, j + 1), lhs[i, j], rhs[i, j])
    fam("mam/m")
    for a in G:
        lhs = (s4 @ data.gamma1(a)).scale(sig1[a])
        rhs = data.gamma1(a) @ s4 @ data.gamma2(a)
        for i in range(k):
            for j in range(k):
                col.check("mam/m", (a, i + 1, j + 1), lhs[i, j], rhs[i, j])
    fam("amm/m")
    for a in G:
        lhs = data.gamma2(a).scale(sig1[a] * sig1[a])
        rhs = (data.gamma3(a) @ data.gamma1(a)).scale(sig1[a])
        for i in range(k):
            for j in range(k):
                col.check("amm/m", (a, i + 1, j + 1), lhs[i, j], rhs[i, j])
    fam("mmm/g")
    for g in G:
        lam = data.lam(g)
        lhs = s4 @ lam @ s4
        rhs = (lam @ lam).scale(sig3[g])
        for i in range(k):
            for j in range(k):
                col.check("mmm/g", (g, i + 1, j + 1), lhs[i, j], rhs[i, j])

    cinv = alg.circ_inverse

    def c_entry(i, j, g):
        return data.c_val(g, i) if j == cinv(i) else None

    def r_entry(g, p, j):
        return data.r_val(g, p) if j == alg.star_inverse(p) else None

    def n_entry(i, j, r, s):
        if alg.star(r, s) == i and alg.circ(i, j) == r:
            return data.n(r, s)
        return None

    zero = Cyclotomic.zero()
    sum_sigma2 = zero
    for a in G:
        sum_sigma2 = sum_sigma2 + sig1[a]

    fam("mmm/m-I")
    for g in G:
        for h in G:
            rhs = m * m * sum_sigma2
            for i in K:
                for j in K:
                    ce = c_entry(i, j, g)
                    if ce is None:
                        continue
                    for p in K:
                        s4v = s4[p - 1, i - 1]
                        if s4v.is_zero():
                            continue
                        re = r_entry(h, p, j)
                        if re is None:
                            continue
                        rhs = rhs + ce * s4v * re
            col.check("mmm/m-I", (g, h), sig3[g] * m * sig3[h], rhs)
    fam("mmm/m-II")
    for g in G:
        for i in K:
            for j in K:
                lhs = zero
                for p in K:
                    ce = c_entry(i, p, g)
                    if ce is None or s4[j - 1, p - 1].is_zero():
                        continue
                    lhs = lhs + ce * s4[j - 1, p - 1]
                lhs = sig3[g] * lhs
                rhs = zero
                for a in G:
                    ce = c_entry(i, j, a)
                    if ce is not None:
                        rhs = rhs + m * sig1[a] * ce
                for r in K:
                    for s in K:
                        ce = c_entry(r, s, g)
                        if ce is None:
                            continue
                        for t in K:
                            s4v = s4[t - 1, r - 1]
                            if s4v.is_zero():
                                continue
                            ne = n_entry(i, j, t, s)
                            if ne is None:
                                continue
                            rhs = rhs + ce * s4v * ne
                col.check("mmm/m-II", (g, i, j), lhs, rhs)
    fam("mmm/m-III")
    for g in G:
        for r in K:
            for s in K:
                lhs = zero
                for t in K:
                    re = r_entry(g, r, t)
                    if re is None or s4[t - 1, s - 1].is_zero():
                        continue
                    lhs = lhs + s4[t - 1, s - 1] * re
                lhs = lhs * sig3[g]
                rhs = zero
                for a in G:
                    re = r_entry(a, r, s)
                    if re is not None:
                        rhs = rhs + re * sig1[a] * m
                for p in K:
                    for q in K:
                        ne = n_entry(p, q, r, s)
                        if ne is None:
                            continue
                        for j in K:
                            s4v = s4[j - 1, p - 1]
                            if s4v.is_zero():
                                continue
                            re = r_entry(g, j, q)
                            if re is None:
                                continue
                            rhs = rhs + ne * s4v * re
                col.check("mmm/m-III", (g, r, s), lhs, rhs)
    fam("mmm/m-IV")
    for i in K:
        for j in K:
            for r in K:
                for s in K:
                    lhs = zero
                    for u in K:
                        if s4[u - 1, s - 1].is_zero():
                            continue
                        for v in K:
                            ne = n_entry(i, v, r, u)
                            if ne is None or s4[j - 1, v - 1].is_zero():
                                continue
                            lhs = lhs + s4[u - 1, s - 1] * ne * s4[j - 1, v - 1]
                    rhs = zero
                    for a in G:
                        re = r_entry(a, r, s)
                        ce = c_entry(i, j, a)
                        if re is not None and ce is not None:
                            rhs = rhs + re * sig1[a] * ce
                    for p in K:
                        for q in K:
                            ne = n_entry(p, q, r, s)
                            if ne is None:
                                continue
                            for t in K:
                                s4v = s4[t - 1, p - 1]
                                if s4v.is_zero():
                                    continue
                                ne2 = n_entry(i, j, t, q)
                                if ne2 is None:
                                    continue
                                rhs = rhs + ne * s4v * ne2
                    col.check("mmm/m-IV", (i, j, r, s), lhs, rhs)


def is_symmetric(data: NearGroupData, braiding: BraidingData) -> bool:
    """Whether every commuting map squares to the identity."""
    G = data.group.elements()
    one = Cyclotomic.one()
    for g in G:
        for h in G:
            if braiding.sigma0(data, g, h) * braiding.sigma0(data, h, g) != one:
                return False
    for g in G:
        if braiding.sigma1(data, g) * braiding.sigma2(data, g) != one:
            return False
        if braiding.sigma3(data, g) ** 2 != one:
            return False
    s4 = braiding.sigma4(data)
    return (s4 @ s4).is_identity()


def twist_solutions(data: NearGroupData, braiding: BraidingData) -> list[TwistData]:
    """All theta_m balancing the braiding; empty means not balanced."""
    alg = data.algebra
    values = {
        braiding.psi_at(j) * braiding.psi_at(alg.perm(alg.star_inverse(j)))
        for j in alg.indices()
    }
    if len(values) != 1:
        return []
    theta = values.pop()
    if (braiding.sigma3_eps * theta) ** 2 != Cyclotomic.one():
        return []
    return [TwistData(theta)]


def is_balanced(data: NearGroupData, braiding: BraidingData) -> bool:
    return bool(twist_solutions(data, braiding))


def braiding_record(data: NearGroupData, braiding: BraidingData) -> dict:
    """JSON-ready summary of one braiding with its derived classification."""
    return {
        "sigma3_eps": braiding.sigma3_eps.to_obj(),
        "psi": [v.to_obj() for v in braiding.psi],
        "symmetric": is_symmetric(data, braiding),
        "twists": [t.theta_m.to_obj() for t in twist_solutions(data, braiding)],
    }


@dataclass
class BraidingSummary:
    braiding: BraidingData
    symmetric: bool
    balanced: bool
    twists: list[TwistData]

    def describe(self) -> str:
        psi = ", ".join(str(v) for v in self.braiding.psi)
        tags = [
            "balanced" if self.balanced else "not balanced",
            "symmetric" if self.symmetric else "not symmetric",
        ]
        return f"psi=({psi}): {', '.join(tags)}"


@dataclass
class ClassificationRow:
    fusion: str
    field: str
    monoidal_count: int
    braidings: list[BraidingSummary]

    def _phrase(self) -> list[str]:
        if self.monoidal_count == 1:
            monoidal = "unique monoidal structure"
        else:
            monoidal = f"{self.monoidal_count} monoidal structures"
        if not self.braidings:
            braid = "not braided"
        elif len(self.braidings) == 1:
            braid = "unique braiding"
        else:
            braid = f"{len(self.braidings)} braidings"
        flags = [b.balanced for b in self.braidings]
        if not flags:
            balance = "no balance"
        elif all(flags):
            balance = "balanced"
        elif not any(flags):
            balance = "not balanced"
        else:
            balance = "partly balanced"
        flags = [b.symmetric for b in self.braidings]
        if not flags:
            symmetry = "no symmetry"
        elif all(flags):
            symmetry = "symmetric"
        elif not any(flags):
            symmetry = "not symmetric"
        else:
            symmetry = "partly symmetric"
        return [monoidal, braid, balance, symmetry]

    def render(self) -> str:
        head = f"{self.fusion} over {self.field}: " + " / ".join(self._phrase())
        lines = [head]
        for b in self.braidings:
            lines.append(f"  {b.describe()}")
        return "\n".join(lines)

    def to_obj(self) -> dict:
        return {
            "fusion": self.fusion,
            "field": self.field,
            "monoidal_structures": self.monoidal_count,
            "braidings": [
                {
                    "sigma3_eps": b.braiding.sigma3_eps.to_obj(),
                    "psi": [v.to_obj() for v in b.braiding.psi],
                    "symmetric": b.symmetric,
                    "balanced": b.balanced,
                }
                for b in self.braidings
            ],
        }


def classify(data: NearGroupData) -> ClassificationRow:
    """Summary row for the datum: field, structure counts, braiding flags.

    The monoidal count covers the whole (group, permutation) family; the
    braidings are those of this particular datum.
    """
    from .monoidal import enumerate_monoidal
    from .pi_structures import field_from_pi

    field_from_pi(data.group, data.pi)
    field = f"F{data.group.order + 1}"
    fusion = f"({data.group.descriptor()}, {data.k})"
    count = enumerate_monoidal(data.group, data.pi).count
    rows = []
    for braiding in enumerate_braidings(data):
        twists = twist_solutions(data, braiding)
        rows.append(
            BraidingSummary(
                braiding,
                is_symmetric(data, braiding),
                bool(twists),
                twists,
            )
        )
    return ClassificationRow(fusion, field, count, rows)
