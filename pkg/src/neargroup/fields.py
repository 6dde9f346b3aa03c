"""Concrete small finite fields F_q.

Elements are integers 0..q-1.  For prime q this is arithmetic mod q; for
prime powers the integer encodes polynomial coefficients in base p
(constant digit first) and multiplication is reduced by a fixed
irreducible polynomial, so every run enumerates the field the same way.
"""

from __future__ import annotations

from functools import lru_cache

# Fixed irreducible polynomials, constant coefficient first, monic.
_MODULI = {
    4: (1, 1, 1),          # x^2 + x + 1
    8: (1, 1, 0, 1),       # x^3 + x + 1
    9: (2, 2, 1),          # x^2 + 2x + 2
    16: (1, 1, 0, 0, 1),   # x^4 + x + 1
    25: (2, 1, 1),         # x^2 + x + 2
    27: (1, 2, 0, 1),      # x^3 + 2x + 1
}


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, alpha) with q = p^alpha, or None."""
    if q < 2:
        return None
    p = None
    m = q
    d = 2
    while d * d <= m:
        if m % d == 0:
            p = d
            while m % d == 0:
                m //= d
            break
        d += 1
    if p is None:
        p = m
        m = 1
    if m > 1:
        return None
    alpha = 0
    while q > 1:
        q //= p
        alpha += 1
    return p, alpha


class SmallField:
    """The field with q elements for prime q or q in the fixed table."""

    __slots__ = ("q", "p", "alpha", "_modulus")

    def __init__(self, q: int) -> None:
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        self.p, self.alpha = pp
        self.q = q
        if self.alpha == 1:
            self._modulus = None
        else:
            if q not in _MODULI:
                raise ValueError(f"no fixed polynomial for q={q}")
            self._modulus = _MODULI[q]

    def elements(self) -> range:
        return range(self.q)

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.alpha):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits) -> int:
        out = 0
        for d in reversed(list(digits)):
            out = out * self.p + d
        return out

    def add(self, a: int, b: int) -> int:
        if self.alpha == 1:
            return (a + b) % self.q
        return self._encode(
            (x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))
        )

    def neg(self, a: int) -> int:
        if self.alpha == 1:
            return (-a) % self.q
        return self._encode((-x) % self.p for x in self._digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.alpha == 1:
            return (a * b) % self.q
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.alpha - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        for deg in range(len(prod) - 1, self.alpha - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i in range(self.alpha):
                    prod[deg - self.alpha + i] = (
                        prod[deg - self.alpha + i] - c * self._modulus[i]
                    ) % self.p
        return self._encode(prod[: self.alpha])

    def power(self, a: int, e: int) -> int:
        if e < 0:
            return self.power(self.inverse(a), -e)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.power(a, self.q - 2)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group in integer encoding."""
        for a in range(1, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        raise AssertionError("no generator found")  # pragma: no cover

    def discrete_log(self, a: int) -> int:
        """Exponent of a with respect to the field's primitive element."""
        return _dlog_table(self.q)[a]

    def __repr__(self) -> str:
        return f"SmallField({self.q})"


@lru_cache(maxsize=None)
def _dlog_table(q: int) -> dict[int, int]:
    f = SmallField(q)
    g = f.primitive_element()
    table = {}
    x = 1
    for j in range(q - 1):
        table[x] = j
        x = f.mul(x, g)
    return table
