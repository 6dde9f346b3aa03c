"""Formal unit scalars for extracting pentagon constraints mechanically.

A FormalUnit is a finite sum of terms coeff * monomial, where the
coefficient is an exact cyclotomic number and the monomial is a product
of integer powers of opaque unit variables (the primitive scalars: the
xi(i), the c_eps(i), the N(r, s), and the sign delta with delta^2 = 1).
Units are invertible by fiat, so single-term values can be inverted.

FormalData presents the same accessor interface as NearGroupData but
with the primitive scalars left symbolic; running the generic pentagon
oracle over it turns each mismatching matrix entry into an exact
relation between the primitives, with no human transcription involved.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic
from .groups import AbelianGroup, GroupElement
from .pi_structures import PiStructure
from .associators import IndexAlgebra, build_index_algebra

DELTA = ("d",)


def _canon(mono: dict) -> tuple:
    out = {}
    for var, exp in mono.items():
        if var == DELTA:
            exp %= 2
        if exp:
            out[var] = exp
    return tuple(sorted(out.items()))


def _coeff(value) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.from_rational(value)


class FormalUnit:
    __slots__ = ("_terms",)

    def __init__(self, terms: dict) -> None:
        clean = {}
        for mono, coeff in terms.items():
            coeff = _coeff(coeff)
            if not coeff.is_zero():
                clean[mono] = coeff
        self._terms = clean

    @classmethod
    def scalar(cls, value) -> FormalUnit:
        return cls({(): _coeff(value)})

    @classmethod
    def var(cls, name: tuple, exp: int = 1, coeff=1) -> FormalUnit:
        return cls({_canon({name: exp}): _coeff(coeff)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_single(self) -> bool:
        return len(self._terms) == 1

    def single(self) -> tuple[tuple, Cyclotomic]:
        ((mono, coeff),) = self._terms.items()
        return mono, coeff

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _as_unit(self, other) -> FormalUnit | None:
        if isinstance(other, FormalUnit):
            return other
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return FormalUnit.scalar(other)
        return None

    def __add__(self, other):
        o = self._as_unit(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in o._terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return FormalUnit(out)

    __radd__ = __add__

    def __neg__(self):
        return FormalUnit({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = self._as_unit(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._as_unit(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._as_unit(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            d1 = dict(m1)
            for m2, c2 in o._terms.items():
                merged = dict(d1)
                for var, exp in m2:
                    merged[var] = merged.get(var, 0) + exp
                key = _canon(merged)
                out[key] = out.get(key, 0) + c1 * c2
        return FormalUnit(out)

    __rmul__ = __mul__

    def inverse(self) -> FormalUnit:
        if not self.is_single():
            raise ValueError("only single-term formal units are invertible")
        mono, coeff = self.single()
        return FormalUnit({_canon({v: -e for v, e in mono}): coeff.inverse()})

    def __eq__(self, other) -> bool:
        o = self._as_unit(other)
        if o is None:
            return NotImplemented
        if set(self._terms) != set(o._terms):
            return False
        return all(self._terms[m] == o._terms[m] for m in self._terms)

    def __hash__(self):
        return hash(frozenset((m, c.minimize()) for m, c in self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for mono, coeff in sorted(self._terms.items()):
            vars_ = "*".join(
                "".join(str(p) for p in var) + (f"^{exp}" if exp != 1 else "")
                for var, exp in mono
            )
            bits.append(f"({coeff})" + (f"*{vars_}" if vars_ else ""))
        return " + ".join(bits)

    __repr__ = __str__


class FormalData:
    """Near-group associator data with symbolic primitive scalars."""

    def __init__(self, group: AbelianGroup, pi: PiStructure) -> None:
        self.group = group
        self.pi = pi
        self.algebra = build_index_algebra(group, pi)
        self._chi = {}
        for i in range(self.algebra.k + 1):
            chi = self.algebra.char(i)
            for g in group.elements():
                self._chi[(i, g.residues)] = chi.value(g)

    @property
    def k(self) -> int:
        return self.algebra.k

    def chi(self, i: int, g: GroupElement) -> Cyclotomic:
        return self._chi[(i, g.residues)]

    def chi_inv(self, i: int, g: GroupElement) -> Cyclotomic:
        return self._chi[(i, g.inverse().residues)]

    def xi(self, i: int) -> FormalUnit:
        return FormalUnit.var(("xi", i))

    def c_eps(self, i: int) -> FormalUnit:
        return FormalUnit.var(("c", i))

    def n(self, r: int, s: int) -> FormalUnit:
        return FormalUnit.var(("n", r, s))

    @property
    def delta(self) -> FormalUnit:
        return FormalUnit.var(DELTA)

    def m_entry(self) -> FormalUnit:
        return FormalUnit.var(DELTA, coeff=Fraction(1, self.group.order))

    def r_eps(self, r: int) -> FormalUnit:
        p = self.algebra.perm_inverse(r)
        unit = FormalUnit.var(("xi", p)) * FormalUnit.var(("c", p))
        return unit.inverse() * Fraction(1, self.group.order)

    def r_val(self, g: GroupElement, r: int) -> FormalUnit:
        return self.chi_inv(self.algebra.perm_inverse(r), g) * self.r_eps(r)

    def c_val(self, g: GroupElement, i: int) -> FormalUnit:
        return self.chi_inv(i, g) * self.c_eps(i)

    def lam_val(self, g: GroupElement, r: int) -> FormalUnit:
        return self.chi(r, g) * self.xi(r)

    def gamma1_at(self, g: GroupElement, i: int) -> Cyclotomic:
        return self.chi(i, g)

    def gamma2_at(self, g: GroupElement, i: int) -> Cyclotomic:
        return self.chi_inv(self.algebra.perm(i), g)

    def gamma3_at(self, g: GroupElement, i: int) -> Cyclotomic:
        return self.chi(self.algebra.perm_inverse(i), g)


def primitive_variables(algebra: IndexAlgebra) -> list[tuple]:
    """Deterministic variable order: xi's, c's, N's, then delta."""
    out = [("xi", i) for i in algebra.indices()]
    out += [("c", i) for i in algebra.indices()]
    out += [("n", r, s) for r, s in algebra.n_domain()]
    out.append(DELTA)
    return out


def relation_row(lhs: FormalUnit, rhs: FormalUnit, variables: list[tuple]):
    """Turn a single-term relation lhs = rhs into an exponent row.

    Returns (row, const) meaning sum(row[v] * angle(v)) = const in Q/Z,
    where angle(v) is the additive exponent of the unit variable v.
    Raises ValueError when either side is not a single term or the
    coefficient ratio is not a root of unity.
    """
    if not (lhs.is_single() and rhs.is_single()):
        raise ValueError(f"relation is not single-term: {lhs} = {rhs}")
    lm, lc = lhs.single()
    rm, rc = rhs.single()
    diff = dict(lm)
    for var, exp in rm:
        diff[var] = diff.get(var, 0) - exp
    row = [diff.pop(var, 0) for var in variables]
    if any(diff.values()):
        leftover = [v for v, e in diff.items() if e]
        raise ValueError(f"unknown variables in relation: {leftover}")
    ratio = (rc * lc.inverse()).as_root_of_unity()
    if ratio is None:
        raise ValueError(f"coefficient ratio is not a root of unity: {lc} vs {rc}")
    order, power = ratio
    return row, Fraction(power, order) % 1
