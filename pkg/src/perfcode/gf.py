"""Small finite fields GF(p^k) with elements as coefficient tuples, constant term first."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .errors import BoundExceededError, HypothesisError
from .permgroup import is_prime

DEFAULT_FIELD_BOUND = 64


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise."""
    if q < 2:
        raise HypothesisError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise HypothesisError(f"{q} is not a prime power")
    return p, k


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m (both constant term first)."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _monic_polys(p: int, degree: int):
    """Monic polynomials of the given degree, lexicographic from the constant term."""
    for low in itertools.product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for f in _monic_polys(p, d):
            if not any(_poly_mod(poly, f, p)):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    return next(f for f in _monic_polys(p, k) if is_irreducible(f, p))


@dataclass(frozen=True)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def order(self) -> int:
        return self.q

    def __call__(self, value) -> FieldElement:
        """Element from an int (prime-field residue) or a coefficient sequence."""
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.k - 1)
        else:
            coeffs = tuple(c % self.p for c in value)
            if len(coeffs) != self.k:
                raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    @property
    def gen(self) -> FieldElement:
        """The class of x (equal to 0 in a prime field)."""
        return self((0, 1) + (0,) * (self.k - 2)) if self.k > 1 else self.zero

    @cached_property
    def elements(self) -> tuple[FieldElement, ...]:
        """All elements in canonical order: lexicographic on coefficients, constant term first."""
        return tuple(FieldElement(self, c) for c in itertools.product(range(self.p), repeat=self.k))

    def basis(self) -> list[FieldElement]:
        """1, x, ..., x^(k-1) as field elements."""
        return [self(tuple(int(i == j) for j in range(self.k))) for i in range(self.k)]


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    coeffs: tuple[int, ...]

    def _check(self, other: FieldElement) -> None:
        if other.field != self.field:
            raise ValueError("elements of different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        F = self.field
        if F.k == 1:
            return FieldElement(F, ((self.coeffs[0] * other.coeffs[0]) % F.p,))
        prod = [0] * (2 * F.k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FieldElement(F, tuple(_poly_mod(prod, F.modulus, F.p)))

    def __pow__(self, n: int) -> FieldElement:
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def __lt__(self, other: FieldElement) -> bool:
        return self.coeffs < other.coeffs

    def __repr__(self) -> str:
        if self.field.k == 1:
            return f"GF({self.field.p})({self.coeffs[0]})"
        return f"GF({self.field.q})({list(self.coeffs)})"


def build_field(q: int, bound: int = DEFAULT_FIELD_BOUND) -> FiniteField:
    p, k = prime_power(q)
    if q > bound:
        raise BoundExceededError(f"field order {q} exceeds bound {bound}")
    # prime fields carry the placeholder modulus x, which is never used
    modulus = smallest_irreducible(p, k) if k > 1 else (0, 1)
    return FiniteField(p, k, modulus)


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()
