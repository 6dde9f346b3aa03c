"""Exhaustive verification of the structure equations for near-group data.

Each checker walks every instance of an equation family (no sampling) and
returns a :class:`VerificationReport` whose families carry stable string
ids.  The ids ("1"-"10" for the gamma/lambda laws, "11M"-"14N" for the
entrywise mu symmetries, "15M"-"15N" for the quadratic mu identity,
"16"-"24" for the scalar functional equations, "25"-"28" for the
trivial-group determinant identities) are part of the report format and
are what the CLI and the JSON schema expose.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from fractions import Fraction

from .associators import (
    NearGroupData,
    NearGroupPrimitive,
    assemble_mu,
    construct_from_primitive,
)
from .cyclotomic import Cyclotomic
from .matrix import Matrix
from .pentagon_trees import M, pentagon_discrepancies, state_str
from .pi_structures import PiStructure
from .unitsolve import solve_mod1

REPORT_SCHEMA = "verification-report@1"


def _show(value) -> str:
    return str(value)


@dataclass(frozen=True)
class Failure:
    """One failing instance: equation id, indices, and both sides."""

    eq: str
    indices: tuple
    lhs: object
    rhs: object

    def to_obj(self) -> dict:
        return {
            "eq": self.eq,
            "indices": [_show(i) for i in self.indices],
            "lhs": _show(self.lhs),
            "rhs": _show(self.rhs),
        }


@dataclass
class FamilyReport:
    family: str
    failures: list[Failure]
    seconds: float
    checked: int

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_obj(self) -> dict:
        return {
            "family": self.family,
            "status": self.status,
            "checked": self.checked,
            "seconds": round(self.seconds, 6),
            "failures": [f.to_obj() for f in self.failures],
        }


@dataclass
class VerificationReport:
    name: str
    families: list[FamilyReport]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)

    def failures(self) -> list[Failure]:
        return [x for fam in self.families for x in fam.failures]

    def family(self, family_id: str) -> FamilyReport:
        for fam in self.families:
            if fam.family == family_id:
                return fam
        raise KeyError(family_id)

    def to_obj(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "families": [f.to_obj() for f in self.families],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_obj(), indent=indent)

    def render(self) -> str:
        lines = [f"{self.name}: {'pass' if self.passed else 'FAIL'}"]
        for fam in self.families:
            lines.append(
                f"  [{fam.status:4}] {fam.family:4} "
                f"({fam.checked} instances, {fam.seconds:.3f}s)"
            )
            for f in fam.failures[:5]:
                idx = ", ".join(_show(i) for i in f.indices)
                lines.append(f"         {f.eq} at ({idx}): {f.lhs} != {f.rhs}")
            if len(fam.failures) > 5:
                lines.append(f"         ... {len(fam.failures) - 5} more")
        return "\n".join(lines)


class _Collector:
    """Accumulates per-family checks with timing."""

    def __init__(self, name: str) -> None:
        self.report = VerificationReport(name, [])
        self._current: FamilyReport | None = None
        self._t0 = 0.0

    def family(self, family_id: str) -> None:
        self._close()
        self._current = FamilyReport(family_id, [], 0.0, 0)
        self._t0 = time.perf_counter()

    def check(self, eq: str, indices: tuple, lhs, rhs) -> None:
        fam = self._current
        fam.checked += 1
        if lhs != rhs:
            fam.failures.append(Failure(eq, indices, lhs, rhs))

    def _close(self) -> None:
        if self._current is not None:
            self._current.seconds = time.perf_counter() - self._t0
            self.report.families.append(self._current)
            self._current = None

    def done(self) -> VerificationReport:
        self._close()
        return self.report


def verify_gamma_lambda(data: NearGroupData) -> VerificationReport:
    """Representation laws for the three diagonal families and lambda.

    Families "1"-"3" are multiplicativity, "4"-"6" the pairwise
    commutation relations, and "7"-"10" tie lambda to the diagonal
    families under translation and conjugation.
    """
    col = _Collector("gamma-lambda")
    elems = data.group.elements()
    K = list(data.algebra.indices())
    lam = {g: data.lam(g) for g in elems}

    reps = [("1", data.gamma3_at), ("2", data.gamma1_at), ("3", data.gamma2_at)]
    for eq, at in reps:
        col.family(eq)
        for a in elems:
            for b in elems:
                ab = a * b
                for i in K:
                    col.check(eq, (a, b, i), at(b, i) * at(a, i), at(ab, i))

    commutators = [
        ("4", data.gamma3_at, data.gamma1_at),
        ("5", data.gamma3_at, data.gamma2_at),
        ("6", data.gamma2_at, data.gamma1_at),
    ]
    for eq, left, right in commutators:
        col.family(eq)
        for a in elems:
            for b in elems:
                for i in K:
                    col.check(
                        eq, (a, b, i),
                        left(b, i) * right(a, i),
                        right(a, i) * left(b, i),
                    )

    col.family("7")
    for g in elems:
        for h in elems:
            lhg = lam[h * g]
            lh = lam[h]
            for i in K:
                for j in K:
                    col.check(
                        "7", (g, h, i, j),
                        lhg[i - 1, j - 1],
                        data.gamma3_at(g, i) * lh[i - 1, j - 1],
                    )
    col.family("8")
    for g in elems:
        for h in elems:
            lhg = lam[h * g]
            lh = lam[h]
            for i in K:
                for j in K:
                    col.check(
                        "8", (g, h, i, j),
                        lhg[i - 1, j - 1],
                        lh[i - 1, j - 1] * data.gamma1_at(g, j),
                    )
    col.family("9")
    for g in elems:
        for h in elems:
            lh = lam[h]
            for i in K:
                for j in K:
                    col.check(
                        "9", (g, h, i, j),
                        data.gamma2_at(g, i) * lh[i - 1, j - 1] * data.gamma3_at(g, j),
                        lh[i - 1, j - 1],
                    )
    col.family("10")
    for g in elems:
        for h in elems:
            lh = lam[h]
            for i in K:
                for j in K:
                    col.check(
                        "10", (g, h, i, j),
                        data.gamma1_at(g, i) * lh[i - 1, j - 1] * data.gamma2_at(g, j),
                        lh[i - 1, j - 1],
                    )
    return col.done()


class _MuView:
    """Block accessors into a full mu matrix, by labels."""

    def __init__(self, data: NearGroupData, mu: Matrix) -> None:
        ne = data.group.order
        size = ne + data.k * data.k
        if mu.shape != (size, size):
            raise ValueError(f"mu must be {size}x{size}, got {mu.shape}")
        self.data = data
        self.mu = mu
        self.ne = ne

    def m(self, a, b):
        return self.mu[self.data.elem_pos(a), self.data.elem_pos(b)]

    def r(self, a, r: int, s: int):
        return self.mu[self.data.elem_pos(a), self.ne + self.data.pair_pos(r, s)]

    def c(self, i: int, j: int, a):
        return self.mu[self.ne + self.data.pair_pos(i, j), self.data.elem_pos(a)]

    def n(self, i: int, j: int, r: int, s: int):
        return self.mu[
            self.ne + self.data.pair_pos(i, j), self.ne + self.data.pair_pos(r, s)
        ]


def verify_mu_symmetries(data: NearGroupData, mu: Matrix | None = None) -> VerificationReport:
    """Entrywise translation symmetries of the four blocks of mu.

    Sixteen families "11M"-"14N", one per (equation, block) pair, each
    quantified over every entry of the block and every group element, so
    a corrupted entry anywhere is seen even if the structural pattern
    says it should be zero.  Pass ``mu`` to audit an explicit matrix
    instead of the one assembled from ``data``.
    """
    view = _MuView(data, assemble_mu(data) if mu is None else mu)
    col = _Collector("mu-symmetries")
    elems = data.group.elements()
    K = list(data.algebra.indices())
    pairs = data.pairs()
    g1, g2, g3 = data.gamma1_at, data.gamma2_at, data.gamma3_at

    col.family("11M")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for b in elems:
                col.check("11M", (g, a, b), view.m(a, b), view.m(gi * a, b))
    col.family("11R")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for r, s in pairs:
                col.check(
                    "11R", (g, a, (r, s)),
                    view.r(a, r, s),
                    view.r(gi * a, r, s) * g3(g, r).inverse(),
                )
    col.family("11C")
    for g in elems:
        for a in elems:
            for i, j in pairs:
                col.check(
                    "11C", (g, (i, j), a),
                    view.c(i, j, a),
                    g3(g, i) * g3(g, j) * view.c(i, j, a),
                )
    col.family("11N")
    for g in elems:
        for i, j in pairs:
            for r, s in pairs:
                col.check(
                    "11N", (g, (i, j), (r, s)),
                    g3(g, i) * g3(g, j) * view.n(i, j, r, s),
                    view.n(i, j, r, s) * g3(g, r),
                )

    col.family("12M")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for b in elems:
                col.check("12M", (g, a, b), view.m(a, b), view.m(a, b * gi))
    col.family("12R")
    for g in elems:
        for a in elems:
            for r, s in pairs:
                col.check(
                    "12R", (g, a, (r, s)),
                    view.r(a, r, s) * g2(g, r) * g3(g, s).inverse(),
                    view.r(a, r, s),
                )
    col.family("12C")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for i, j in pairs:
                col.check(
                    "12C", (g, (i, j), a),
                    view.c(i, j, gi * a),
                    g2(g, j) * view.c(i, j, a),
                )
    col.family("12N")
    for g in elems:
        for i, j in pairs:
            for r, s in pairs:
                col.check(
                    "12N", (g, (i, j), (r, s)),
                    g2(g, j) * view.n(i, j, r, s),
                    view.n(i, j, r, s) * g2(g, r) * g3(g, s).inverse(),
                )

    col.family("13M")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for b in elems:
                col.check("13M", (g, a, b), view.m(a, b), view.m(gi * a, b))
    col.family("13R")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for r, s in pairs:
                col.check(
                    "13R", (g, a, (r, s)),
                    view.r(gi * a, r, s),
                    view.r(a, r, s) * g2(g, s),
                )
    col.family("13C")
    for g in elems:
        for a in elems:
            for i, j in pairs:
                col.check(
                    "13C", (g, (i, j), a),
                    g2(g, i).inverse() * g1(g, j) * view.c(i, j, a),
                    view.c(i, j, a),
                )
    col.family("13N")
    for g in elems:
        for i, j in pairs:
            for r, s in pairs:
                col.check(
                    "13N", (g, (i, j), (r, s)),
                    g2(g, i) * g1(g, j).inverse() * view.n(i, j, r, s),
                    view.n(i, j, r, s) * g2(g, s),
                )

    col.family("14M")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for b in elems:
                col.check("14M", (g, a, b), view.m(a, gi * b), view.m(a, b))
    col.family("14R")
    for g in elems:
        for a in elems:
            for r, s in pairs:
                col.check(
                    "14R", (g, a, (r, s)),
                    view.r(a, r, s) * g1(g, r) * g1(g, s),
                    view.r(a, r, s),
                )
    col.family("14C")
    for g in elems:
        gi = g.inverse()
        for a in elems:
            for i, j in pairs:
                col.check(
                    "14C", (g, (i, j), a),
                    view.c(i, j, gi * a),
                    g1(g, i) * view.c(i, j, a),
                )
    col.family("14N")
    for g in elems:
        for i, j in pairs:
            for r, s in pairs:
                col.check(
                    "14N", (g, (i, j), (r, s)),
                    view.n(i, j, r, s) * g1(g, r) * g1(g, s),
                    g1(g, i) * view.n(i, j, r, s),
                )
    return col.done()


def _sparse_rows(m: Matrix) -> list[list[tuple[int, object]]]:
    return [
        [(j, v) for j, v in enumerate(m.row(i)) if not v.is_zero()]
        for i in range(m.rows)
    ]


def verify_15(data: NearGroupData, mu: Matrix | None = None) -> VerificationReport:
    """The quadratic identity mu D(g) mu = E(g), for every g.

    D(g) is the identity on the group slots and lambda(g) tensor identity
    on the pair slots.  E(g) has the group-convolution pattern on the
    group block and the product of two lambda entries on the pair block.
    Failing positions are classified into families "15M", "15R", "15C",
    "15N" by the block they land in.
    """
    mu = assemble_mu(data) if mu is None else mu
    _MuView(data, mu)  # shape guard
    col = _Collector("mu-quadratic")
    elems = data.group.elements()
    ne = len(elems)
    pairs = data.pairs()
    k = data.k
    size = ne + k * k
    zero = Cyclotomic.zero()

    labels = list(elems) + pairs
    mu_rows = _sparse_rows(mu)

    by_family: dict[str, list[Failure]] = {f: [] for f in ("15M", "15R", "15C", "15N")}
    checked = {f: 0 for f in by_family}
    t0 = time.perf_counter()
    for g in elems:
        lam = data.lam(g)
        # rows of D(g): group slot -> itself; pair slot (i,a) -> lam[i,j] at (j,a)
        d_rows: list[list[tuple[int, object]]] = [[(t, None)] for t in range(ne)]
        for i, a in pairs:
            entries = []
            for j in range(1, k + 1):
                v = lam[i - 1, j - 1]
                if not v.is_zero():
                    entries.append((ne + data.pair_pos(j, a), v))
            d_rows.append(entries)
        # P = D(g) . mu  (sparse rows)
        p_rows: list[dict[int, object]] = []
        for t in range(size):
            acc: dict[int, object] = {}
            for u, w in d_rows[t]:
                for v_col, v in mu_rows[u]:
                    prod = v if w is None else w * v
                    cur = acc.get(v_col)
                    acc[v_col] = prod if cur is None else cur + prod
            p_rows.append(acc)
        # S = mu . P
        s_rows: list[dict[int, object]] = []
        for r in range(size):
            acc = {}
            for t_col, w in mu_rows[r]:
                for v_col, v in p_rows[t_col].items():
                    prod = w * v
                    cur = acc.get(v_col)
                    acc[v_col] = prod if cur is None else cur + prod
            s_rows.append(acc)

        for r in range(size):
            row_lab = labels[r]
            row_group = r < ne
            for c in range(size):
                col_lab = labels[c]
                col_group = c < ne
                got = s_rows[r].get(c, zero)
                if row_group and col_group:
                    fam = "15M"
                    want = (
                        Cyclotomic.one()
                        if row_lab == col_lab.inverse() * g
                        else zero
                    )
                elif row_group:
                    fam, want = "15R", zero
                elif col_group:
                    fam, want = "15C", zero
                else:
                    fam = "15N"
                    i, j = row_lab
                    rr, ss = col_lab
                    want = lam[i - 1, ss - 1] * lam[j - 1, rr - 1]
                checked[fam] += 1
                if got != want:
                    by_family[fam].append(
                        Failure(fam, (g, row_lab, col_lab), got, want)
                    )
    elapsed = time.perf_counter() - t0
    for fam in ("15M", "15R", "15C", "15N"):
        col.report.families.append(
            FamilyReport(fam, by_family[fam], elapsed / 4, checked[fam])
        )
    return col.report


def _n_or_zero(data: NearGroupData, r: int, s: int) -> Cyclotomic:
    if data.algebra.star(r, s) == 0:
        return Cyclotomic.zero()
    return data.n(r, s)


def _circ_solve(alg, lhs: int, out: int) -> int:
    """The index t with circ(lhs, t) == out, or 0 when none exists."""
    u = alg.star(alg.perm_inverse(out), alg.star_inverse(alg.perm_inverse(lhs)))
    return alg.perm(u) if u else 0


def verify_16_24(primitive: NearGroupPrimitive, pi: PiStructure) -> VerificationReport:
    """The nine scalar functional equations on (xi, c, N, delta).

    Instances run over all index tuples for which every slot is defined
    (products staying away from the trivial character).  Family "23" is
    the closed three-N relation carried by the all-pair corner of the
    degree-four coherence identity; a side whose arguments leave the
    structural support of N counts as zero.
    """
    data = construct_from_primitive(pi.group, pi, primitive)
    alg = data.algebra
    K = list(alg.indices())
    st, sinv, pm, pminv = alg.star, alg.star_inverse, alg.perm, alg.perm_inverse
    xi, c, n = data.xi, data.c_eps, data.n
    delta = Cyclotomic.from_rational(Fraction(data.delta))
    col = _Collector("functional-equations")

    col.family("16")
    for i in K:
        col.check(
            "16", (i,),
            c(i) * c(pminv(i)).inverse(),
            delta * xi(sinv(i)) * xi(pm(sinv(i))) * xi(pminv(i)),
        )
    for eq in ("17", "20"):
        col.family(eq)
        for i in K:
            col.check(
                eq, (i,),
                xi(i) * c(i),
                delta * xi(pm(sinv(i))) * c(pm(sinv(i))),
            )
    col.family("18")
    for i in K:
        col.check("18", (i,), c(i), delta * c(sinv(pm(i))))
    col.family("19")
    for i in K:
        for j in K:
            if i == j:
                continue
            col.check(
                "19", (i, j),
                c(i),
                c(j)
                * n(st(i, sinv(j)), j)
                * n(st(pm(j), sinv(pm(i))), sinv(pm(j))),
            )
    col.family("21")
    for i in K:
        for j in K:
            t = st(pminv(i), pm(sinv(j)))
            if i == j or t == 0:
                continue
            col.check(
                "21", (i, j),
                xi(t) * c(t),
                xi(pminv(i)) * c(pminv(i)) * n(i, st(sinv(i), j)) * n(sinv(i), j),
            )
    col.family("22")
    for i in K:
        for j in K:
            ij = st(i, j)
            if ij == 0:
                continue
            col.check(
                "22", (i, j),
                c(i) * n(i, j),
                xi(j) * c(ij) * n(sinv(pm(ij)), pm(j)),
            )
    col.family("23")
    for a in K:
        for b in K:
            for cc in K:
                ba = st(b, a)
                if ba == 0:
                    continue
                cb, cba = st(cc, b), st(cc, ba)
                if cb == 0 or cba == 0:
                    continue
                t1 = _circ_solve(alg, ba, b)
                t2 = _circ_solve(alg, cba, cc)
                if t1 == 0 or t2 == 0:
                    continue
                col.check(
                    "23", (a, b, cc),
                    n(b, a) * n(cc, ba) * _n_or_zero(data, t2, t1),
                    n(cc, b) * n(cb, a),
                )
    col.family("24")
    for i in K:
        for j in K:
            ij = st(i, j)
            r = st(pminv(i), pm(j))
            if ij == 0 or r == 0:
                continue
            col.check(
                "24", (i, j),
                c(sinv(ij)) * c(j).inverse() * xi(j).inverse(),
                n(r, sinv(pm(j))) * n(pminv(i), pm(j)),
            )
    return col.done()


@dataclass
class OracleResult:
    """Outcome of one generic pentagon comparison."""

    word: tuple
    summand: object
    dim: int
    mismatches: list

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def render(self) -> str:
        word = " ".join(str(x) for x in self.word)
        head = (
            f"pentagon [{word}] / {self.summand}: dim {self.dim}, "
            f"{'pass' if self.passed else f'{len(self.mismatches)} mismatches'}"
        )
        lines = [head]
        for row, c, lhs, rhs in self.mismatches[:10]:
            lines.append(f"  at row {state_str(row)} | col {state_str(c)}:")
            lines.append(f"    long path  {lhs}")
            lines.append(f"    short path {rhs}")
        if len(self.mismatches) > 10:
            lines.append(f"  ... {len(self.mismatches) - 10} more")
        return "\n".join(lines)


def generic_pentagon_oracle(data, word, summand) -> OracleResult:
    """Compare the two ways around the pentagon on a four-letter word.

    Works for any object implementing the data accessor protocol, so the
    same code audits concrete cyclotomic structures and formal ones.
    """
    mismatches, dim = pentagon_discrepancies(data, tuple(word), summand)
    return OracleResult(tuple(word), summand, dim, mismatches)


def oracle_sweep(data) -> list[OracleResult]:
    """The generic comparison on every four-letter word and root channel.

    Quadruples run over all simple-object labels; channels with no basis
    vector come back as vacuous dimension-0 passes.
    """
    letters = list(data.group.elements()) + [M]
    return [
        generic_pentagon_oracle(data, word, summand)
        for word in itertools.product(letters, repeat=4)
        for summand in letters
    ]


def flip_matrix(k: int) -> Matrix:
    """Permutation matrix swapping the tensor factors of a k x k square."""
    perm = [0] * (k * k)
    for i in range(k):
        for j in range(k):
            perm[i * k + j] = j * k + i
    return Matrix.permutation(perm)


def flip_det(k: int) -> int:
    """Determinant of :func:`flip_matrix`, from the eigenspace count."""
    return -1 if (k * (k - 1) // 2) % 2 else 1


@dataclass
class TrivialGroupVerdict:
    """Solvability of the determinant constraints when the group is trivial.

    ``solutions`` lists the angle pairs (l, m) in Q/Z with det lambda =
    e^{2 pi i l}, det mu = e^{2 pi i m} allowed by the constraints;
    empty means obstructed and no data of that size can exist.
    """

    k: int
    obstructed: bool
    flip_determinant: int
    solutions: list[tuple[Fraction, Fraction]]
    reason: str

    def render(self) -> str:
        head = f"k={self.k}: {'OBSTRUCTED' if self.obstructed else 'consistent'}"
        body = [head, f"  {self.reason}"]
        if self.solutions:
            shown = ", ".join(f"(l={l}, m={m})" for l, m in self.solutions)
            body.append(f"  admissible determinant angles: {shown}")
        return "\n".join(body)


def trivial_group_verdict(k: int) -> TrivialGroupVerdict:
    """Decide whether the determinant constraints admit a solution.

    Writing l, m for the angles of det lambda and det mu, the two
    determinant identities and the cube law give the linear system
    2m - k l = x, 2l + k m = k/2 + k x, 3l = 0 over Q/Z, with x the
    angle of the flip determinant.  The system is solved exactly.
    """
    if k < 1:
        raise ValueError("k must be positive")
    fd = flip_det(k)
    x = Fraction(1, 2) if fd == -1 else Fraction(0)
    rows = [[-k, 2], [2, k], [3, 0]]
    beta = [x, (Fraction(k, 2) + k * x) % 1, Fraction(0)]
    sols = solve_mod1(rows, beta)
    sols = sorted(set(sols))
    if sols:
        reason = (
            f"flip determinant {fd:+d}; the constraint system on the "
            f"determinant angles is consistent"
        )
    else:
        if k % 2:
            e, y = k * k + 4, (-k, 2)
        else:
            r = k // 2
            e, y = 2 * r * r + 2, (-r, 1)
        combo = [y[0] * rows[0][j] + y[1] * rows[1][j] for j in range(2)]
        cval = (y[0] * beta[0] + y[1] * beta[1]) % 1
        assert combo == [e, 0] and cval == Fraction(1, 2)
        reason = (
            f"flip determinant {fd:+d}; the determinant identities combine "
            f"to (det lambda)^{e} = -1, contradicting (det lambda)^3 = 1"
        )
    return TrivialGroupVerdict(k, not sols, fd, [tuple(s) for s in sols], reason)


@dataclass(frozen=True)
class TrivialGroupCandidate:
    """Trial data for the group-free case: lambda (k x k) and mu ((1+k^2) square).

    Row and column 0 of mu is the single group slot; the remaining slots
    are pairs (i, j) in i-major order, exactly as in the general layout.
    """

    k: int
    lam: Matrix
    mu: Matrix

    def __post_init__(self):
        if self.lam.shape != (self.k, self.k):
            raise ValueError(f"lambda must be {self.k}x{self.k}")
        n = 1 + self.k * self.k
        if self.mu.shape != (n, n):
            raise ValueError(f"mu must be {n}x{n}")

    def pair_pos(self, i: int, j: int) -> int:
        return 1 + (i - 1) * self.k + (j - 1)


def check_trivial_group_candidate(cand: TrivialGroupCandidate) -> VerificationReport:
    """Test candidate trivial-group data against the determinant identities.

    Families "25" and "26" are the scalar determinant constraints, "27"
    and "28" the matrix identities coupling the border row and column of
    mu to lambda.  Requires mu[0,0] invertible.
    """
    k = cand.k
    mu00 = cand.mu[0, 0]
    if not _exactly_invertible(mu00):
        raise ValueError("candidate needs an invertible corner entry mu[0,0]")
    col = _Collector("trivial-group-candidate")
    L = _as_cyclotomic(cand.lam.det())
    M = _as_cyclotomic(cand.mu.det())
    fd = flip_det(k)
    fd_c = Cyclotomic.from_rational(Fraction(fd))
    sign_k = Cyclotomic.from_rational(Fraction((-1) ** k))

    col.family("25")
    col.check("25", (), M ** 2 * L ** k, L ** (2 * k) * fd_c)
    col.family("26")
    col.check("26", (), (L * M ** k) ** 2, M ** k * sign_k * fd_c ** k)

    mu_r = Matrix.build(k, k, lambda i, j: cand.mu[0, cand.pair_pos(i + 1, j + 1)])
    mu_c = Matrix.build(k, k, lambda i, j: cand.mu[cand.pair_pos(j + 1, i + 1), 0])
    col.family("27")
    lhs27 = mu_c @ mu_r
    rhs27 = (cand.lam @ cand.lam).scale(mu00)
    for i in range(k):
        for j in range(k):
            col.check("27", (i + 1, j + 1), lhs27[i, j], rhs27[i, j])
    col.family("28")
    lhs28 = mu_c.transpose() @ mu_r @ cand.lam
    rhs28 = Matrix.identity(k).scale(mu00)
    for i in range(k):
        for j in range(k):
            col.check("28", (i + 1, j + 1), lhs28[i, j], rhs28[i, j])
    return col.done()


def _as_cyclotomic(v) -> Cyclotomic:
    if isinstance(v, Cyclotomic):
        return v
    return Cyclotomic.from_rational(Fraction(v))


def _exactly_invertible(v) -> bool:
    if isinstance(v, Cyclotomic):
        return not v.is_zero()
    return v != 0


def verify_all(data: NearGroupData) -> list[VerificationReport]:
    """The full battery used by the CLI verify command."""
    return [
        verify_gamma_lambda(data),
        verify_mu_symmetries(data),
        verify_15(data),
        verify_16_24(data.primitive, data.pi),
    ]
