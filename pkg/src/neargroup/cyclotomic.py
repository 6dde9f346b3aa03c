"""Exact arithmetic in cyclotomic fields.

Elements live in Q(zeta_N) for a stored order N, represented on the power
basis 1, zeta, ..., zeta^(phi(N)-1) reduced modulo the N-th cyclotomic
polynomial, with Fraction coefficients.  Equal elements at the same order
have identical coefficient tuples; elements at different orders are
compared after lifting to the lcm order.  All operations are pure and
values are immutable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def _polydiv_int(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer polynomials; den is monic.
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        out[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n)[:-1]:
        num = _polydiv_int(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    # Fold exponents mod n (zeta^n = 1), then reduce mod Phi_n.
    deg = _phi(n)
    folded = [Fraction(0)] * n
    for e, c in enumerate(coeffs):
        if c:
            folded[e % n] += c
    phi_poly = cyclotomic_polynomial(n)
    for e in range(n - 1, deg - 1, -1):
        c = folded[e]
        if c:
            folded[e] = Fraction(0)
            for i in range(deg):
                folded[e - deg + i] -= c * phi_poly[i]
    return tuple(folded[:deg])


def _as_fraction(x) -> Fraction | None:
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    return None


class Cyclotomic:
    """An exact element of Q(zeta_order) in canonical power-basis form."""

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs) -> None:
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        self._order = order
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != _phi(order):
            coeffs = list(_reduce(coeffs, order))
        self._coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def from_rational(cls, value, order: int = 1) -> Cyclotomic:
        c = [Fraction(value)] + [Fraction(0)] * (_phi(order) - 1)
        return cls(order, c)

    @classmethod
    def zero(cls, order: int = 1) -> Cyclotomic:
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> Cyclotomic:
        return cls.from_rational(1, order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self._coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self._coeffs[0]

    def is_one(self) -> bool:
        return self.is_rational() and self._coeffs[0] == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    def lift(self, order: int) -> Cyclotomic:
        """Rewrite at a multiple of the current order (same field element)."""
        if order == self._order:
            return self
        if order % self._order:
            raise ValueError(f"{order} is not a multiple of {self._order}")
        step = order // self._order
        out = [Fraction(0)] * (len(self._coeffs) * step)
        for e, c in enumerate(self._coeffs):
            out[e * step] = c
        return Cyclotomic(order, _reduce(out, order))

    def _pair(self, other) -> tuple[Cyclotomic, Cyclotomic] | None:
        r = _as_fraction(other)
        if r is not None:
            other = Cyclotomic.from_rational(r, 1)
        elif not isinstance(other, Cyclotomic):
            return None
        n = lcm(self._order, other._order)
        return self.lift(n), other.lift(n)

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a._order, [x + y for x, y in zip(a._coeffs, b._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self._order, [-c for c in self._coeffs])

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic(a._order, [x - y for x, y in zip(a._coeffs, b._coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        r = _as_fraction(other)
        if r is not None:
            return Cyclotomic(self._order, [c * r for c in self._coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.is_rational():
            return Cyclotomic(self._order, [c * other._coeffs[0] for c in self._coeffs])
        if self.is_rational():
            return Cyclotomic(other._order, [c * self._coeffs[0] for c in other._coeffs])
        a, b = self._pair(other)
        out = [Fraction(0)] * (len(a._coeffs) + len(b._coeffs) - 1)
        for i, ca in enumerate(a._coeffs):
            if ca:
                for j, cb in enumerate(b._coeffs):
                    if cb:
                        out[i + j] += ca * cb
        return Cyclotomic(a._order, _reduce(out, a._order))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self._coeffs[0], self._order)
        nonzero = [(e, c) for e, c in enumerate(self._coeffs) if c]
        if len(nonzero) == 1:
            e, c = nonzero[0]
            return root_of_unity(self._order, -e) * (1 / c)
        # Extended Euclid against the cyclotomic polynomial.
        n = self._order
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(n)]
        r0, r1 = phi_poly, list(self._coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            while r1 and r1[-1] == 0:
                r1.pop()
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        while r0 and r0[-1] == 0:
            r0.pop()
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (reduction bug)")
        inv_lead = 1 / r0[0]
        return Cyclotomic(n, _reduce([c * inv_lead for c in s0], n))

    def __truediv__(self, other):
        r = _as_fraction(other)
        if r is not None:
            if r == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / r)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        r = _as_fraction(other)
        if r is None:
            return NotImplemented
        return self.inverse() * r

    def __pow__(self, exponent: int) -> Cyclotomic:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a._coeffs == b._coeffs

    def __hash__(self) -> int:
        m = self.minimize()
        return hash((m._order, m._coeffs))

    def minimize(self) -> Cyclotomic:
        """Equal element at the smallest order dividing the current one."""
        out = self
        changed = True
        while changed:
            changed = False
            n = out._order
            for p in _prime_divisors(n):
                sub = _subfield_coords(out, n // p)
                if sub is not None:
                    out = Cyclotomic(n // p, sub)
                    changed = True
                    break
        return out

    def multiplicative_order(self) -> int | None:
        """Order as a root of unity, or None if not one."""
        root = self.as_root_of_unity()
        if root is None:
            return None
        n, j = root
        return n // gcd(n, j) if j else 1

    def as_root_of_unity(self) -> tuple[int, int] | None:
        """Return (n, j) with self = zeta_n^j in lowest form, or None."""
        m = self.minimize()
        if m.is_rational():
            if m._coeffs[0] == 1:
                return (1, 0)
            if m._coeffs[0] == -1:
                return (2, 1)
            return None
        n = m._order
        full = n if n % 2 == 0 else 2 * n
        target = m.lift(full)._coeffs
        w = Cyclotomic.one(full)
        z = root_of_unity(full, 1)
        for j in range(full):
            if w._coeffs == target:
                g = gcd(full, j)
                return (full // g, (j // g) % (full // g))
            w = w * z
        return None

    def to_obj(self) -> dict:
        return {
            "order": self._order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self._coeffs],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> Cyclotomic:
        coeffs = [Fraction(int(num), int(den)) for num, den in obj["coeffs"]]
        return cls(int(obj["order"]), coeffs)

    def render(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))

    @classmethod
    def parse(cls, text: str) -> Cyclotomic:
        return cls.from_obj(json.loads(text))

    def __str__(self) -> str:
        if self.is_rational():
            return str(self._coeffs[0])
        sym = f"z{self._order}"
        terms = []
        for e, c in enumerate(self._coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = sym if e == 1 else f"{sym}^{e}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self) -> str:
        return f"Cyclotomic({self._order}, {self})"


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] * inv_lead
        if c:
            q[shift] = c
            for i, d in enumerate(b):
                a[shift + i] -= c * d
    return q, a[: len(b) - 1] or [Fraction(0)]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


@lru_cache(maxsize=None)
def _prime_divisors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _subfield_coords(x: Cyclotomic, m: int) -> list[Fraction] | None:
    # Solve x = sum_i c_i * zeta_n^(i*(n/m)) for c in Q, if possible.
    n = x.order
    step = n // m
    dim = _phi(m)
    cols = []
    for i in range(dim):
        e = (i * step) % n
        cols.append(_reduce([Fraction(0)] * e + [Fraction(1)], n))
    # Gaussian elimination on the phi(n) x dim system.
    rows = _phi(n)
    aug = [[cols[j][r] for j in range(dim)] + [x.coeffs[r]] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(dim):
        pivot = next((i for i in range(r, rows) if aug[i][c]), None)
        if pivot is None:
            return None  # basis images are independent; must pivot every column
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if aug[i][dim]:
            return None
    return [aug[i][dim] for i in range(dim)]


def root_of_unity(n: int, j: int = 1) -> Cyclotomic:
    """The root zeta_n^j as an element of Q(zeta_n)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    j %= n
    coeffs = [Fraction(0)] * j + [Fraction(1)]
    return Cyclotomic(n, _reduce(coeffs, n))


def lift_to_common_order(a: Cyclotomic, b: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
    """Rewrite both elements in Q(zeta_lcm) without changing their values."""
    n = lcm(a.order, b.order)
    return a.lift(n), b.lift(n)
