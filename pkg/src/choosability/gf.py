"""Exact arithmetic in finite fields GF(p^m) at desk scale.

Elements are plain integers in [0, q): the base-p digits of an element are
the coefficients of its polynomial representative (digit j is the
coefficient of x^j), so 0 and 1 are the additive and multiplicative
identities of every field. Extension fields reduce modulo the
lexicographically smallest monic irreducible polynomial, compared
coefficient by coefficient from the constant term up, which keeps every
derived artifact reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import math


class NotPrimePower(ValueError):
    """The requested field order is not p^m for a prime p."""


class ZeroHasNoOrder(ValueError):
    """The multiplicative order of the zero element was requested."""


class OrderUnavailable(ValueError):
    """No element of the requested multiplicative order exists."""


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p**m and p prime, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"field order must be at least 2, got {q}")
    p = q
    for d in range(2, math.isqrt(q) + 1):
        if q % d == 0:
            p = d
            break
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is divisible by two distinct primes")
    return p, m


def _poly_rem(f: list[int], g: tuple[int, ...], p: int) -> list[int]:
    """Remainder of f modulo the monic polynomial g, coefficients mod p.

    Polynomials are little-endian coefficient lists (constant term first).
    """
    r = [x % p for x in f]
    deg_g = len(g) - 1
    for i in range(len(r) - 1, deg_g - 1, -1):
        lead = r[i]
        if lead:
            for j in range(deg_g + 1):
                r[i - deg_g + j] = (r[i - deg_g + j] - lead * g[j]) % p
    return r[:deg_g]


def _monic_polys(p: int, degree: int):
    # ascending lexicographic order on (a_0, ..., a_{degree-1}), constant first
    for coeffs in itertools.product(range(p), repeat=degree):
        yield coeffs + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Irreducibility over GF(p) by trial division.

    Tries every monic divisor of degree at most deg(poly)/2; adequate for
    the desk-scale degrees this library works with.
    """
    degree = len(poly) - 1
    for d in range(1, degree // 2 + 1):
        for g in _monic_polys(p, d):
            if not any(_poly_rem(list(poly), g, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    for poly in _monic_polys(p, m):
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


class FiniteField:
    """Arithmetic context for GF(q), q = p^m, over integer-encoded elements.

    Prime fields compute directly modulo p. Extension fields build
    exponent/logarithm tables over a primitive element once at
    construction, so multiplication and inversion are table lookups. The
    tables are an internal optimization only; every result is determined
    by the modulus choice.

    Immutable after construction and safe for concurrent reads.
    """

    def __init__(self, q: int):
        p, m = factor_prime_power(q)
        self.q = q
        self.p = p
        self.m = m
        self.modulus: tuple[int, ...] | None = None
        self._exp: list[int] = []
        self._log: list[int] = []
        if m > 1:
            self.modulus = smallest_irreducible(p, m)
            self._build_tables()

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("FiniteField", self.q))

    def elements(self) -> range:
        return range(self.q)

    # -- encoding ----------------------------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        """Base-p digits of x, constant-term coefficient first."""
        self._check(x)
        out = []
        for _ in range(self.m):
            x, d = divmod(x, self.p)
            out.append(d)
        return tuple(out)

    def from_digits(self, digits) -> int:
        val = 0
        for d in reversed(list(digits)):
            val = val * self.p + d
        return val

    # -- arithmetic --------------------------------------------------------

    def _check(self, x: int) -> None:
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise ValueError(f"{x!r} is not an element of GF({self.q})")

    def add(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        p = self.p
        val, shift = 0, 1
        for _ in range(self.m):
            x, dx = divmod(x, p)
            y, dy = divmod(y, p)
            val += ((dx + dy) % p) * shift
            shift *= p
        return val

    def neg(self, x: int) -> int:
        self._check(x)
        if self.m == 1:
            return (-x) % self.p
        if self.p == 2:
            return x
        p = self.p
        val, shift = 0, 1
        for _ in range(self.m):
            x, dx = divmod(x, p)
            val += ((-dx) % p) * shift
            shift *= p
        return val

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if self.m == 1:
            return (x * y) % self.p
        if x == 0 or y == 0:
            return 0
        e = self._log[x] + self._log[y]
        if e >= self.q - 1:
            e -= self.q - 1
        return self._exp[e]

    def inv(self, x: int) -> int:
        self._check(x)
        if x == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            return pow(x, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        self._check(x)
        if e < 0:
            return self.pow(self.inv(x), -e)
        if x == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(x, e, self.p)
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    # -- multiplicative structure -------------------------------------------

    def element_order(self, x: int) -> int:
        """Smallest t >= 1 with x**t == 1; always divides q - 1."""
        self._check(x)
        if x == 0:
            raise ZeroHasNoOrder("0 is not in the multiplicative group")
        for d in _divisors(self.q - 1):
            if self.pow(x, d) == 1:
                return d
        raise AssertionError("unreachable: order divides q - 1")

    def element_of_order(self, c: int) -> int:
        """Smallest-index element of multiplicative order exactly c.

        Requires c | q - 1; the powers of the result form the unique
        subgroup of size c of the multiplicative group.
        """
        if c < 1 or (self.q - 1) % c != 0:
            raise OrderUnavailable(
                f"no element of order {c} in GF({self.q}): {c} does not divide {self.q - 1}"
            )
        for x in range(1, self.q):
            if self.element_order(x) == c:
                return x
        raise AssertionError("unreachable: cyclic group has elements of every dividing order")

    # -- internals -----------------------------------------------------------

    def _mul_raw(self, x: int, y: int) -> int:
        # table-free polynomial multiplication, used only while bootstrapping
        xd, yd = self.digits(x), self.digits(y)
        prod = [0] * (2 * self.m - 1)
        for i, xi in enumerate(xd):
            if xi:
                for j, yj in enumerate(yd):
                    prod[i + j] = (prod[i + j] + xi * yj) % self.p
        return self.from_digits(_poly_rem(prod, self.modulus, self.p))

    def _build_tables(self) -> None:
        order_needed = self.q - 1
        for g in range(2, self.q):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_raw(x, g)
            if len(exp) == order_needed:
                self._exp = exp
                log = [0] * self.q
                for i, val in enumerate(exp):
                    log[val] = i
                self._log = log
                return
        raise AssertionError(f"no primitive element found in GF({self.q})")
