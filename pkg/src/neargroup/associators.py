"""Associator data for near-group fusion rules with |G| = k + 1.

The noninvertible object m satisfies m x m = (sum of G) + k m, and a basis
choice turns all associativity morphisms into concrete matrices: diagonal
gamma_1/2/3(g), the k x k lambda(g), and the large mu indexed by group
elements followed by index pairs.  Everything is determined by a small
"primitive": a sign delta and unit scalars xi(i), c_eps(i), N(r, s); this
module builds the full tensors from a primitive, provides the standard
all-ones solution, the small worked examples, and JSON round-tripping.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import Cyclotomic, root_of_unity
from .groups import AbelianGroup, Character, GroupElement
from .matrix import Matrix
from .pi_structures import PiStructure

DATA_SCHEMA = "near-group-data@1"


def _unit(value) -> Cyclotomic:
    if isinstance(value, (int, Fraction)):
        value = Cyclotomic.from_rational(value)
    if not isinstance(value, Cyclotomic):
        raise TypeError(f"expected an exact scalar, got {type(value).__name__}")
    if value.is_zero():
        raise ValueError("primitive values must be invertible")
    return value


class IndexAlgebra:
    """The group law and permutation transported to character indices.

    Index 0 is the trivial character; 1..k enumerate the nontrivial
    characters in their canonical order.  star is the character product,
    circ is the product conjugated by the permutation, and both are total
    once the permutation is extended to fix index 0.
    """

    __slots__ = ("_group", "_chars", "_star", "_star_inv", "_pi", "_pi_inv")

    def __init__(self, group: AbelianGroup, pi: PiStructure, dual=None) -> None:
        if dual is None:
            dual = group.dual_iso
        self._group = group
        chars = group.characters()
        self._chars = chars
        index_of = {c: i for i, c in enumerate(chars)}
        elem_index = {g: index_of[dual(g)] for g in group.elements()}
        self._star = [[index_of[a * b] for b in chars] for a in chars]
        self._star_inv = [index_of[a.inverse()] for a in chars]
        self._pi = [0] * len(chars)
        for g in group.nonidentity():
            self._pi[elem_index[g]] = elem_index[pi(g)]
        self._pi_inv = [0] * len(chars)
        for i, j in enumerate(self._pi):
            self._pi_inv[j] = i

    @property
    def k(self) -> int:
        return len(self._chars) - 1

    def indices(self) -> range:
        """The nontrivial indices 1..k."""
        return range(1, len(self._chars))

    def char(self, i: int) -> Character:
        return self._chars[i]

    def star(self, i: int, j: int) -> int:
        return self._star[i][j]

    def star_inverse(self, i: int) -> int:
        return self._star_inv[i]

    def perm(self, i: int) -> int:
        return self._pi[i]

    def perm_inverse(self, i: int) -> int:
        return self._pi_inv[i]

    def circ(self, i: int, j: int) -> int:
        return self._pi[self._star[self._pi_inv[i]][self._pi_inv[j]]]

    def circ_inverse(self, i: int) -> int:
        return self._star_inv[self._pi[i]]

    def omega_index(self) -> int:
        """Index of the distinguished involution; 0 when the group is odd."""
        values = {
            self._star[self._star[i][self._pi[i]]][self._pi_inv[i]]
            for i in self.indices()
        }
        if not values:
            return 0
        if len(values) != 1:
            raise AssertionError("omega is not constant")  # pragma: no cover
        return values.pop()

    def n_domain(self) -> list[tuple[int, int]]:
        """All (r, s) with r star s nontrivial, in lexicographic order."""
        return [
            (r, s)
            for r in self.indices()
            for s in self.indices()
            if self._star[r][s] != 0
        ]


def build_index_algebra(group: AbelianGroup, pi: PiStructure, dual=None) -> IndexAlgebra:
    return IndexAlgebra(group, pi, dual)


class NearGroupPrimitive:
    """delta together with the unit scalars xi, c_eps and N."""

    __slots__ = ("delta", "xi", "c_eps", "n_func")

    def __init__(self, delta: int, xi, c_eps, n_func) -> None:
        if delta not in (1, -1):
            raise ValueError(f"delta must be +-1, got {delta}")
        self.delta = int(delta)
        self.xi = tuple(_unit(v) for v in xi)
        self.c_eps = tuple(_unit(v) for v in c_eps)
        self.n_func = {(int(r), int(s)): _unit(v) for (r, s), v in dict(n_func).items()}
        if len(self.xi) != len(self.c_eps):
            raise ValueError("xi and c_eps must have the same length")

    @property
    def k(self) -> int:
        return len(self.xi)

    @classmethod
    def all_ones(cls, algebra: IndexAlgebra, delta: int = 1) -> NearGroupPrimitive:
        k = algebra.k
        return cls(delta, (1,) * k, (1,) * k, {rs: 1 for rs in algebra.n_domain()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, NearGroupPrimitive):
            return NotImplemented
        return (
            self.delta == other.delta
            and self.xi == other.xi
            and self.c_eps == other.c_eps
            and self.n_func == other.n_func
        )

    def __repr__(self) -> str:
        return f"NearGroupPrimitive(delta={self.delta}, k={self.k})"


class NearGroupData:
    """Full associator package over a group, a permutation and a primitive.

    The alpha-type associators not listed here are identically 1 in this
    basis; the unit_flags attribute records that.
    """

    __slots__ = ("group", "pi", "algebra", "primitive", "unit_flags", "_chi", "_elem_pos")

    def __init__(
        self,
        group: AbelianGroup,
        pi: PiStructure,
        primitive: NearGroupPrimitive,
        algebra: IndexAlgebra | None = None,
    ) -> None:
        if pi.group != group:
            raise ValueError("permutation belongs to a different group")
        self.group = group
        self.pi = pi
        self.algebra = algebra if algebra is not None else build_index_algebra(group, pi)
        k = self.algebra.k
        if primitive.k != k:
            raise ValueError(f"primitive has k={primitive.k}, group needs k={k}")
        expected = set(self.algebra.n_domain())
        if set(primitive.n_func) != expected:
            raise ValueError("n_func domain must be exactly the pairs with r*s nontrivial")
        self.primitive = primitive
        self.unit_flags = {
            name: True for name in ("alpha", "alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3")
        }
        self._elem_pos = {g: i for i, g in enumerate(group.elements())}
        self._chi = {}
        for i in range(k + 1):
            chi = self.algebra.char(i)
            for g in group.elements():
                self._chi[(i, g.residues)] = chi.value(g)

    @property
    def k(self) -> int:
        return self.algebra.k

    @property
    def group_order(self) -> int:
        return self.group.order

    # -- scalar accessors (indices are 1-based; 0 is the trivial character) --

    def chi(self, i: int, g: GroupElement) -> Cyclotomic:
        return self._chi[(i, g.residues)]

    def chi_inv(self, i: int, g: GroupElement) -> Cyclotomic:
        return self._chi[(i, g.inverse().residues)]

    def xi(self, i: int) -> Cyclotomic:
        return self.primitive.xi[i - 1]

    def c_eps(self, i: int) -> Cyclotomic:
        return self.primitive.c_eps[i - 1]

    def n(self, r: int, s: int) -> Cyclotomic:
        return self.primitive.n_func[(r, s)]

    @property
    def delta(self) -> int:
        return self.primitive.delta

    def m_entry(self) -> Cyclotomic:
        """The constant entry of the group-by-group block of mu."""
        return Cyclotomic.from_rational(Fraction(self.delta, self.group.order))

    def r_eps(self, r: int) -> Cyclotomic:
        p = self.algebra.perm_inverse(r)
        return (self.group.order * self.xi(p) * self.c_eps(p)).inverse()

    def r_val(self, g: GroupElement, r: int) -> Cyclotomic:
        """Nonzero entry of row g in the R block, at column (r, r^{*-1})."""
        return self.chi_inv(self.algebra.perm_inverse(r), g) * self.r_eps(r)

    def c_val(self, g: GroupElement, i: int) -> Cyclotomic:
        """Nonzero entry of column g in the C block, at row (i, i^{o-1})."""
        return self.chi_inv(i, g) * self.c_eps(i)

    def lam_val(self, g: GroupElement, r: int) -> Cyclotomic:
        """Nonzero entry of column r of lambda(g), located at row perm(r)."""
        return self.xi(r) * self.chi(r, g)

    def gamma1_at(self, g: GroupElement, i: int) -> Cyclotomic:
        return self.chi(i, g)

    def gamma2_at(self, g: GroupElement, i: int) -> Cyclotomic:
        return self.chi_inv(self.algebra.perm(i), g)

    def gamma3_at(self, g: GroupElement, i: int) -> Cyclotomic:
        return self.chi(self.algebra.perm_inverse(i), g)

    # -- dense tensors --

    def gamma1(self, g: GroupElement) -> Matrix:
        return Matrix.diagonal([self.gamma1_at(g, i) for i in self.algebra.indices()])

    def gamma2(self, g: GroupElement) -> Matrix:
        return Matrix.diagonal([self.gamma2_at(g, i) for i in self.algebra.indices()])

    def gamma3(self, g: GroupElement) -> Matrix:
        return Matrix.diagonal([self.gamma3_at(g, i) for i in self.algebra.indices()])

    def lam(self, g: GroupElement) -> Matrix:
        k = self.k
        out = [[Cyclotomic.zero() for _ in range(k)] for _ in range(k)]
        for r in self.algebra.indices():
            out[self.algebra.perm(r) - 1][r - 1] = self.lam_val(g, r)
        return Matrix(out)

    def pairs(self) -> list[tuple[int, int]]:
        """Row/column order of the pair-indexed blocks."""
        k = self.k
        return [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]

    def pair_pos(self, i: int, j: int) -> int:
        return (i - 1) * self.k + (j - 1)

    def elem_pos(self, g: GroupElement) -> int:
        return self._elem_pos[g]

    def __eq__(self, other) -> bool:
        if not isinstance(other, NearGroupData):
            return NotImplemented
        return (
            self.group == other.group
            and self.pi == other.pi
            and self.primitive == other.primitive
        )

    def __repr__(self) -> str:
        return (
            f"NearGroupData({self.group.descriptor()}, pi={self.pi}, "
            f"delta={self.delta}, k={self.k})"
        )


def construct_from_primitive(
    group: AbelianGroup, pi: PiStructure, primitive: NearGroupPrimitive
) -> NearGroupData:
    return NearGroupData(group, pi, primitive)


def construct_standard(group: AbelianGroup, pi: PiStructure) -> NearGroupData:
    """The solution with delta = +1 and all primitive scalars equal to 1."""
    algebra = build_index_algebra(group, pi)
    return NearGroupData(group, pi, NearGroupPrimitive.all_ones(algebra), algebra)


def assemble_mu(data: NearGroupData) -> Matrix:
    """The full mu matrix: group slots first, then pair slots (i-major)."""
    elems = data.group.elements()
    pairs = data.pairs()
    n = len(elems) + len(pairs)
    zero = Cyclotomic.zero()
    out = [[zero for _ in range(n)] for _ in range(n)]
    m = data.m_entry()
    alg = data.algebra
    for a in range(len(elems)):
        for b in range(len(elems)):
            out[a][b] = m
    for gi, g in enumerate(elems):
        for ci, (r, s) in enumerate(pairs):
            if s == alg.star_inverse(r):
                out[gi][len(elems) + ci] = data.r_val(g, r)
    for ri, (i, j) in enumerate(pairs):
        for gi, g in enumerate(elems):
            if j == alg.circ_inverse(i):
                out[len(elems) + ri][gi] = data.c_val(g, i)
    for ri, (i, j) in enumerate(pairs):
        for ci, (r, s) in enumerate(pairs):
            if alg.star(r, s) == i and alg.circ(i, j) == r:
                out[len(elems) + ri][len(elems) + ci] = data.n(r, s)
    return Matrix(out)


def example_data(name: str, variant: str | None = None) -> NearGroupData:
    """The worked small examples; variant picks the unit scalar where several exist."""
    if name == "Z2k1":
        group = AbelianGroup.cyclic(2)
        pi = PiStructure.parse(group, "id")
        table = {
            None: Cyclotomic.one(),
            "1": Cyclotomic.one(),
            "zeta3": root_of_unity(3, 1),
            "zeta3^2": root_of_unity(3, 2),
        }
        if variant not in table:
            raise ValueError(f"unknown variant {variant!r} for Z2k1")
        xi = table[variant]
        prim = NearGroupPrimitive(1, (xi,), (1,), {})
        return construct_from_primitive(group, pi, prim)
    if name == "Z3k2":
        group = AbelianGroup.cyclic(3)
        pi = PiStructure.parse(group, "id")
        if variant in (None, "1", "+1"):
            xi = 1
        elif variant == "-1":
            xi = -1
        else:
            raise ValueError(f"unknown variant {variant!r} for Z3k2")
        prim = NearGroupPrimitive(xi, (xi, xi), (1, xi), {(1, 1): 1, (2, 2): xi})
        return construct_from_primitive(group, pi, prim)
    if name == "Z4k3":
        if variant is not None:
            raise ValueError("Z4k3 has a unique structure; no variant applies")
        group = AbelianGroup.cyclic(4)
        pi = PiStructure.parse(group, "(g g2 g3)")
        return construct_standard(group, pi)
    raise ValueError(f"unknown example {name!r}")


EXAMPLE_VARIANTS = {
    "Z2k1": ("1", "zeta3", "zeta3^2"),
    "Z3k2": ("1", "-1"),
    "Z4k3": (None,),
}


def data_to_obj(data: NearGroupData, include_matrices: bool = False) -> dict:
    obj = {
        "schema": DATA_SCHEMA,
        "group": data.group.descriptor(),
        "k": data.k,
        "pi": str(data.pi),
        "delta": data.delta,
        "xi": [v.to_obj() for v in data.primitive.xi],
        "c_eps": [v.to_obj() for v in data.primitive.c_eps],
        "n_func": {
            f"{r},{s}": v.to_obj() for (r, s), v in sorted(data.primitive.n_func.items())
        },
    }
    if include_matrices:
        mu = assemble_mu(data)
        obj["matrices"] = {
            "mu": [[mu[i, j].to_obj() for j in range(mu.cols)] for i in range(mu.rows)],
            "lambda": {
                g.name: [
                    [data.lam(g)[i, j].to_obj() for j in range(data.k)]
                    for i in range(data.k)
                ]
                for g in data.group.elements()
            },
        }
    return obj


def data_from_obj(obj: dict) -> NearGroupData:
    if obj.get("schema") != DATA_SCHEMA:
        raise ValueError(f"unsupported schema {obj.get('schema')!r}")
    group = AbelianGroup.parse_descriptor(obj["group"])
    pi = PiStructure.parse(group, obj["pi"])
    n_func = {}
    for key, value in obj["n_func"].items():
        r, s = key.split(",")
        n_func[(int(r), int(s))] = Cyclotomic.from_obj(value)
    prim = NearGroupPrimitive(
        int(obj["delta"]),
        [Cyclotomic.from_obj(v) for v in obj["xi"]],
        [Cyclotomic.from_obj(v) for v in obj["c_eps"]],
        n_func,
    )
    data = construct_from_primitive(group, pi, prim)
    if int(obj["k"]) != data.k:
        raise ValueError(f"k={obj['k']} does not match group {obj['group']}")
    return data
