"""Permutation structures on the nonidentity elements of an abelian group.

A valid structure is a bijection pi on G minus the identity satisfying

    (i)   pi^3 = id,
    (ii)  pi(x)^-1 = pi^-1(x^-1),
    (iii) pi(s t) = pi(t) * pi(pi(s)^-1 * pi(t^-1))   for s != t^-1.

These exist exactly when G is cyclic of order q - 1 for a prime power q,
and in that case pi is the map x -> (1 - x)^-1 of a field structure on
G plus a zero element.  This module searches for all such pi, rebuilds
the field from a given pi, and converts in both directions.
"""

from __future__ import annotations

from math import isqrt

from .fields import SmallField, prime_power
from .groups import AbelianGroup, GroupElement


class PiStructure:
    """A validated bijection on the nonidentity elements of a group."""

    __slots__ = ("_group", "_mapping", "_inverse")

    def __init__(self, group: AbelianGroup, mapping: dict) -> None:
        self._group = group
        self._mapping = dict(mapping)
        nonid = group.nonidentity()
        if set(self._mapping) != set(nonid) or set(self._mapping.values()) != set(nonid):
            raise ValueError("mapping is not a bijection on the nonidentity elements")
        self._inverse = {v: k for k, v in self._mapping.items()}
        problem = self._violation()
        if problem is not None:
            raise ValueError(problem)

    def _violation(self) -> str | None:
        m, inv = self._mapping, self._inverse
        for x in self._group.nonidentity():
            if m[m[m[x]]] != x:
                return f"pi^3 != id at {x.name}"
            if m[x].inverse() != inv[x.inverse()]:
                return f"pi(x)^-1 != pi^-1(x^-1) at {x.name}"
        for s in self._group.nonidentity():
            for t in self._group.nonidentity():
                if s == t.inverse():
                    continue
                u = m[s].inverse() * m[t.inverse()]
                if m[s * t] != m[t] * m[u]:
                    return f"composition rule fails at s={s.name}, t={t.name}"
        return None

    @property
    def group(self) -> AbelianGroup:
        return self._group

    @property
    def mapping(self) -> dict:
        return dict(self._mapping)

    def __call__(self, x: GroupElement) -> GroupElement:
        return self._mapping[x]

    def apply_inverse(self, x: GroupElement) -> GroupElement:
        return self._inverse[x]

    def omega(self) -> GroupElement:
        """The common value of s * pi(s) * pi^-1(s); squares to the identity."""
        values = {
            s * self._mapping[s] * self._inverse[s] for s in self._group.nonidentity()
        }
        if not values:
            return self._group.identity
        if len(values) > 1:
            raise ValueError(f"omega differs across elements: {sorted(v.name for v in values)}")
        (w,) = values
        if not (w * w).is_identity:
            raise ValueError(f"omega = {w.name} does not square to the identity")
        return w

    def cycles(self) -> list[tuple[GroupElement, ...]]:
        """Nontrivial cycles, each starting at its earliest member."""
        order = {g: i for i, g in enumerate(self._group.nonidentity())}
        seen = set()
        out = []
        for g in self._group.nonidentity():
            if g in seen:
                continue
            cyc = [g]
            seen.add(g)
            x = self._mapping[g]
            while x != g:
                cyc.append(x)
                seen.add(x)
                x = self._mapping[x]
            if len(cyc) > 1:
                start = min(range(len(cyc)), key=lambda i: order[cyc[i]])
                out.append(tuple(cyc[start:] + cyc[:start]))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + " ".join(g.name for g in c) + ")" for c in cycles)

    @classmethod
    def parse(cls, group: AbelianGroup, text: str) -> PiStructure:
        """Read disjoint-cycle notation over element names; "id" is allowed."""
        mapping = {g: g for g in group.nonidentity()}
        text = text.strip()
        if text not in ("id", ""):
            if not text.startswith("(") or not text.endswith(")"):
                raise ValueError(f"bad cycle notation {text!r}")
            moved = set()
            for chunk in text[1:-1].split(")("):
                names = chunk.replace(",", " ").split()
                elems = [group.element_named(n) for n in names]
                if len(elems) != len(set(elems)) or any(g.is_identity for g in elems):
                    raise ValueError(f"bad cycle {chunk!r}")
                if moved & set(elems):
                    raise ValueError("cycles are not disjoint")
                moved |= set(elems)
                for a, b in zip(elems, elems[1:] + elems[:1]):
                    mapping[a] = b
        return cls(group, mapping)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiStructure):
            return NotImplemented
        return self._group == other._group and self._mapping == other._mapping

    def __hash__(self) -> int:
        return hash((self._group, tuple(sorted(
            (k.residues, v.residues) for k, v in self._mapping.items()
        ))))

    def __repr__(self) -> str:
        return f"<pi {self} on {self._group.descriptor()}>"


def _search(group: AbelianGroup) -> list[dict]:
    """All bijections satisfying the three defining rules, by pruned DFS."""
    nonid = group.nonidentity()
    solutions: list[dict] = []

    def propagate(m: dict, inv: dict, x, y) -> bool:
        # Assign pi(x) = y and chase every forced consequence.
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            if a in m:
                if m[a] != b:
                    return False
                continue
            if b in inv:
                return False
            if a.is_identity or b.is_identity:
                return False
            m[a] = b
            inv[b] = a
            queue.append((b.inverse(), a.inverse()))
            if b in m:
                queue.append((m[b], a))
            if a in inv:
                queue.append((b, inv[a]))
            # Composition rule instances that just became determined.
            for s in nonid:
                for t in nonid:
                    if s == t.inverse():
                        continue
                    if s not in m or t not in m or t.inverse() not in m:
                        continue
                    u = m[s].inverse() * m[t.inverse()]
                    if u.is_identity:
                        return False
                    if u not in m:
                        continue
                    rhs = m[t] * m[u]
                    st = s * t
                    if st in m:
                        if m[st] != rhs:
                            return False
                    else:
                        queue.append((st, rhs))
        return True

    def extend(m: dict, inv: dict) -> None:
        x = next((g for g in nonid if g not in m), None)
        if x is None:
            solutions.append(dict(m))
            return
        for y in nonid:
            if y in inv:
                continue
            m2, inv2 = dict(m), dict(inv)
            if propagate(m2, inv2, x, y):
                extend(m2, inv2)

    extend({}, {})
    return solutions


def find_all_pi(group: AbelianGroup) -> list[PiStructure]:
    """Every valid structure on the group, in a deterministic order.

    The list is empty unless the group is cyclic of prime-power-minus-one
    order; that emptiness falls out of the search itself rather than any
    precomputed criterion.
    """
    if group.is_trivial:
        return [PiStructure(group, {})]
    order = {g: i for i, g in enumerate(group.nonidentity())}
    found = [PiStructure(group, m) for m in _search(group)]
    found.sort(key=lambda pi: tuple(order[pi(g)] for g in group.nonidentity()))
    return found


def pi_from_field(q: int) -> tuple[AbelianGroup, PiStructure]:
    """The structure induced by x -> (1 - x)^-1 on the field with q elements."""
    field = SmallField(q)
    group = AbelianGroup.cyclic(q - 1)
    gen = field.primitive_element()
    mapping = {}
    for j in range(1, q - 1):
        x = field.power(gen, j)
        y = field.inverse(field.sub(1, x))
        mapping[group.element((j,))] = group.element((field.discrete_log(y),))
    return group, PiStructure(group, mapping)


class FieldTable:
    """A field structure on G plus a zero element, as explicit tables.

    Element i >= 1 is the i-th group element in enumeration order (so 1 is
    the multiplicative identity) and 0 is the zero element.
    """

    __slots__ = ("group", "q", "_add", "_mul")

    def __init__(self, group: AbelianGroup, add_table: list[list[int]]) -> None:
        self.group = group
        self.q = group.order + 1
        self._add = add_table
        elems = group.elements()
        index = {g: i + 1 for i, g in enumerate(elems)}
        self._mul = [[0] * self.q for _ in range(self.q)]
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                self._mul[i + 1][j + 1] = index[a * b]

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def check_axioms(self) -> None:
        """Exhaustively verify every field axiom; raise on the first failure."""
        n = self.q
        rng = range(n)
        for a in rng:
            if self.add(a, 0) != a or self.add(0, a) != a:
                raise ValueError(f"0 is not an additive identity at {a}")
            if self.mul(a, 1) != a or self.mul(1, a) != a:
                raise ValueError(f"1 is not a multiplicative identity at {a}")
            if self.mul(a, 0) != 0 or self.mul(0, a) != 0:
                raise ValueError(f"zero multiplication fails at {a}")
            if not any(self.add(a, b) == 0 for b in rng):
                raise ValueError(f"no additive inverse for {a}")
        for a in rng:
            for b in rng:
                if self.add(a, b) != self.add(b, a):
                    raise ValueError(f"addition not commutative at ({a},{b})")
                if self.mul(a, b) != self.mul(b, a):
                    raise ValueError(f"multiplication not commutative at ({a},{b})")
        for a in rng:
            for b in rng:
                for c in rng:
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                        raise ValueError(f"addition not associative at ({a},{b},{c})")
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValueError(f"multiplication not associative at ({a},{b},{c})")
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                        raise ValueError(f"distributivity fails at ({a},{b},{c})")

    def __repr__(self) -> str:
        return f"FieldTable(q={self.q}, group={self.group.descriptor()})"


def field_from_pi(group: AbelianGroup, pi: PiStructure) -> FieldTable:
    """Rebuild the field whose unit group is G with pi(x) = (1-x)^-1.

    Addition is a + b = pi(omega b a^-1)^-1 a, with a + omega a = 0.
    All field axioms are checked exhaustively; a failure means the given
    structure does not come from a field and raises ValueError.
    """
    if pi.group != group:
        raise ValueError("structure belongs to a different group")
    elems = group.elements()
    index = {g: i + 1 for i, g in enumerate(elems)}
    w = pi.omega()
    n = group.order + 1
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        table[a][0] = a
        table[0][a] = a
    for a in elems:
        for b in elems:
            if b == w * a:
                table[index[a]][index[b]] = 0
            else:
                total = pi(w * b * a.inverse()).inverse() * a
                table[index[a]][index[b]] = index[total]
    out = FieldTable(group, table)
    out.check_axioms()
    return out


def fields_isomorphic(left: FieldTable | SmallField, right: FieldTable | SmallField) -> bool:
    """Decide isomorphism by matching multiplicative generators."""
    lq = left.q
    if lq != right.q:
        return False
    lgen = _any_generator(left)
    lpow = [1]
    for _ in range(lq - 2):
        lpow.append(left.mul(lpow[-1], lgen))
    for rgen in range(1, lq):
        if _mult_order(right, rgen) != lq - 1:
            continue
        phi = {0: 0}
        x = 1
        for j in range(lq - 1):
            phi[lpow[j]] = x
            x = right.mul(x, rgen)
        if all(
            phi[left.add(a, b)] == right.add(phi[a], phi[b])
            for a in range(lq)
            for b in range(lq)
        ):
            return True
    return False


def _mult_order(field, a: int) -> int:
    x, n = a, 1
    while x != 1:
        x = field.mul(x, a)
        n += 1
        if n > field.q:
            raise AssertionError("not a unit")  # pragma: no cover
    return n


def _any_generator(field) -> int:
    for a in range(1, field.q):
        if _mult_order(field, a) == field.q - 1:
            return a
    raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover


def affine_group_fusion(q: int) -> tuple[int, int, int, int]:
    """Fusion data of the affine group of F_q, from its multiplication table.

    Returns (group order, number of linear irreps, dimension of the unique
    nonlinear irrep, multiplicity of that irrep in its tensor square).
    Everything is computed from conjugacy classes and the commutator
    subgroup of the concrete group, not from closed-form formulas.
    """
    if q < 3:
        raise ValueError(f"need q >= 3, got {q}")
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    f = SmallField(q)
    elems = [(a, b) for a in range(q) for b in range(1, q)]

    def mul(x, y):
        return (f.add(x[0], f.mul(x[1], y[0])), f.mul(x[1], y[1]))

    def inv(x):
        bi = f.inverse(x[1])
        return (f.neg(f.mul(bi, x[0])), bi)

    # Conjugacy classes by direct orbit computation.
    remaining = set(elems)
    classes = []
    while remaining:
        x = min(remaining)
        orbit = {mul(mul(g, x), inv(g)) for g in elems}
        classes.append(orbit)
        remaining -= orbit
    # Commutator subgroup, closed under the group operation.
    commutators = {mul(mul(inv(a), inv(b)), mul(a, b)) for a in elems for b in elems}
    subgroup = set(commutators)
    frontier = set(commutators)
    while frontier:
        new = {mul(a, b) for a in frontier for b in commutators} - subgroup
        subgroup |= new
        frontier = new
    order = len(elems)
    linear = order // len(subgroup)
    nonlinear = len(classes) - linear
    if nonlinear != 1:
        raise AssertionError(f"expected one nonlinear irrep, found {nonlinear}")
    big_sq = order - linear
    dim = isqrt(big_sq)
    if dim * dim != big_sq:
        raise AssertionError("irrep dimension is not an integer")
    mult = (dim * dim - linear) // dim
    if mult * dim + linear != dim * dim:
        raise AssertionError("tensor-square multiplicity is not an integer")
    return order, linear, dim, mult
