"""Finite abelian groups, their elements, and their characters.

A group is a product of cyclic factors Z/n_1 x ... x Z/n_t; elements and
characters are residue tuples in the same lattice.  The element list and
the character list are both ordered lexicographically on residues, so the
identity (resp. trivial character) always comes first and the two lists
correspond under the canonical isomorphism with the dual group.
"""

from __future__ import annotations

from math import gcd, lcm, prod

from .cyclotomic import Cyclotomic, root_of_unity

_FACTOR_LETTERS = "abcdefgh"


class AbelianGroup:
    """Direct product of cyclic groups, given by its factor orders."""

    __slots__ = ("_factors", "_elements", "_by_name")

    def __init__(self, factors=()) -> None:
        factors = tuple(int(n) for n in factors)
        if any(n < 2 for n in factors):
            raise ValueError(f"cyclic factors must be >= 2, got {factors}")
        if len(factors) > len(_FACTOR_LETTERS):
            raise ValueError("too many factors")
        self._factors = factors
        self._elements = None
        self._by_name = None

    @classmethod
    def cyclic(cls, n: int) -> AbelianGroup:
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        return cls(() if n == 1 else (n,))

    @property
    def factors(self) -> tuple[int, ...]:
        return self._factors

    @property
    def order(self) -> int:
        return prod(self._factors)

    @property
    def exponent(self) -> int:
        return lcm(*self._factors) if self._factors else 1

    @property
    def is_trivial(self) -> bool:
        return not self._factors

    @property
    def is_cyclic(self) -> bool:
        return self.exponent == self.order

    def descriptor(self) -> str:
        if not self._factors:
            return "Z1"
        return "x".join(f"Z{n}" for n in self._factors)

    @classmethod
    def parse_descriptor(cls, text: str) -> AbelianGroup:
        parts = text.strip().split("x")
        factors = []
        for p in parts:
            p = p.strip()
            if not p.startswith("Z") or not p[1:].isdigit():
                raise ValueError(f"bad group descriptor {text!r}")
            n = int(p[1:])
            if n == 1:
                continue
            factors.append(n)
        return cls(factors)

    def element(self, residues) -> GroupElement:
        return GroupElement(self, residues)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self._factors))

    def elements(self) -> list[GroupElement]:
        if self._elements is None:
            res = [()]
            for n in self._factors:
                res = [r + (i,) for r in res for i in range(n)]
            self._elements = [GroupElement(self, r) for r in res]
        return list(self._elements)

    def nonidentity(self) -> list[GroupElement]:
        return self.elements()[1:]

    def element_named(self, name: str) -> GroupElement:
        if self._by_name is None:
            self._by_name = {g.name: g for g in self.elements()}
        try:
            return self._by_name[name.strip()]
        except KeyError:
            raise ValueError(f"no element {name!r} in {self.descriptor()}") from None

    def characters(self) -> list[Character]:
        return [Character(self, g.residues) for g in self.elements()]

    @property
    def trivial_character(self) -> Character:
        return Character(self, (0,) * len(self._factors))

    def dual_iso(self, g: GroupElement) -> Character:
        """Canonical isomorphism onto the character group."""
        self._check(g)
        return Character(self, g.residues)

    def dual_iso_inverse(self, chi: Character) -> GroupElement:
        if chi.group != self:
            raise ValueError("character from a different group")
        return GroupElement(self, chi.residues)

    def _check(self, g: GroupElement) -> None:
        if g.group != self:
            raise ValueError(
                f"element of {g.group.descriptor()} used in {self.descriptor()}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(("AbelianGroup", self._factors))

    def __repr__(self) -> str:
        return f"AbelianGroup({self._factors!r})"


class GroupElement:
    __slots__ = ("_group", "_residues")

    def __init__(self, group: AbelianGroup, residues) -> None:
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(group.factors):
            raise ValueError(f"need {len(group.factors)} residues, got {residues}")
        self._group = group
        self._residues = tuple(r % n for r, n in zip(residues, group.factors))

    @property
    def group(self) -> AbelianGroup:
        return self._group

    @property
    def residues(self) -> tuple[int, ...]:
        return self._residues

    @property
    def is_identity(self) -> bool:
        return all(r == 0 for r in self._residues)

    def __mul__(self, other: GroupElement) -> GroupElement:
        self._group._check(other)
        return GroupElement(
            self._group, tuple(a + b for a, b in zip(self._residues, other._residues))
        )

    def inverse(self) -> GroupElement:
        return GroupElement(self._group, tuple(-r for r in self._residues))

    def __pow__(self, exponent: int) -> GroupElement:
        return GroupElement(self._group, tuple(r * exponent for r in self._residues))

    def order(self) -> int:
        return lcm(
            *(n // gcd(n, r) for n, r in zip(self._group.factors, self._residues)), 1
        )

    @property
    def name(self) -> str:
        if self.is_identity:
            return "e"
        if len(self._residues) == 1:
            r = self._residues[0]
            return "g" if r == 1 else f"g{r}"
        parts = []
        for letter, r in zip(_FACTOR_LETTERS, self._residues):
            if r == 1:
                parts.append(letter)
            elif r:
                parts.append(f"{letter}{r}")
        return "".join(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (
            self._group.factors == other._group.factors
            and self._residues == other._residues
        )

    def __hash__(self) -> int:
        return hash(("GroupElement", self._group.factors, self._residues))

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"<{self.name} in {self._group.descriptor()}>"


class Character:
    """A homomorphism into the roots of unity, indexed by residues."""

    __slots__ = ("_group", "_residues")

    def __init__(self, group: AbelianGroup, residues) -> None:
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(group.factors):
            raise ValueError(f"need {len(group.factors)} residues, got {residues}")
        self._group = group
        self._residues = tuple(r % n for r, n in zip(residues, group.factors))

    @property
    def group(self) -> AbelianGroup:
        return self._group

    @property
    def residues(self) -> tuple[int, ...]:
        return self._residues

    @property
    def is_trivial(self) -> bool:
        return all(r == 0 for r in self._residues)

    def value(self, g: GroupElement) -> Cyclotomic:
        self._group._check(g)
        out = Cyclotomic.one()
        for n, r, s in zip(self._group.factors, self._residues, g.residues):
            if r and s:
                out = out * root_of_unity(n, r * s)
        return out

    __call__ = value

    def __mul__(self, other: Character) -> Character:
        if self._group != other._group:
            raise ValueError("characters of different groups")
        return Character(
            self._group, tuple(a + b for a, b in zip(self._residues, other._residues))
        )

    def inverse(self) -> Character:
        return Character(self._group, tuple(-r for r in self._residues))

    def __pow__(self, exponent: int) -> Character:
        return Character(self._group, tuple(r * exponent for r in self._residues))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return (
            self._group.factors == other._group.factors
            and self._residues == other._residues
        )

    def __hash__(self) -> int:
        return hash(("Character", self._group.factors, self._residues))

    def __repr__(self) -> str:
        return f"<character {self._residues} on {self._group.descriptor()}>"


def orthogonality_sum(chi: Character) -> Cyclotomic:
    """Sum of a character over the group: |G| for trivial, else 0."""
    out = Cyclotomic.zero()
    for g in chi.group.elements():
        out = out + chi.value(g)
    return out


def _partitions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def abelian_groups_of_order(n: int) -> list[AbelianGroup]:
    """All abelian groups of order n up to isomorphism, in invariant-factor form."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n == 1:
        return [AbelianGroup(())]
    primes = {}
    m = n
    d = 2
    while d * d <= m:
        while m % d == 0:
            primes[d] = primes.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        primes[m] = primes.get(m, 0) + 1
    choices = [[]]
    for p, e in sorted(primes.items()):
        choices = [c + [(p, part)] for c in choices for part in _partitions(e)]
    out = []
    for c in choices:
        width = max(len(part) for _, part in c)
        invariant = []
        for j in range(width):
            d_j = 1
            for p, part in c:
                if j < len(part):
                    d_j *= p ** part[j]
            invariant.append(d_j)
        # parts are listed largest first, so reverse for a divisibility chain
        out.append(AbelianGroup(tuple(reversed(invariant))))
    out.sort(key=lambda G: (len(G.factors), G.factors))
    return out
