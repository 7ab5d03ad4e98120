"""Arithmetic in Z_n: factorization, Euler's totient, units and non-units."""

from __future__ import annotations

import math
from dataclasses import dataclass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True)
class Factorization:
    """``n`` together with its prime-power decomposition.

    ``factors`` holds ``(prime, exponent)`` pairs with strictly increasing
    primes; it is empty exactly when ``n == 1``.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        product = 1
        previous = 1
        for p, e in self.factors:
            if e < 1 or p <= previous or not is_prime(p):
                raise ValueError(f"invalid factor {p}^{e} in factorization of {self.n}")
            product *= p**e
            previous = p
        if product != self.n:
            raise ValueError(f"factors multiply to {product}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def num_primes(self) -> int:
        return len(self.factors)

    @property
    def is_even(self) -> bool:
        return self.n % 2 == 0

    @property
    def two_is_unit(self) -> bool:
        return self.n % 2 == 1

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n: int) -> Factorization:
    """Trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    factors = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(n, tuple(factors))


def euler_phi(f: Factorization | int) -> int:
    if isinstance(f, int):
        f = factorize(f)
    result = 1
    for p, e in f.factors:
        result *= p ** (e - 1) * (p - 1)
    return result


@dataclass(frozen=True)
class ResidueClassification:
    n: int
    units: frozenset[int]
    nonunits: frozenset[int]

    def is_unit(self, x: int) -> bool:
        return x % self.n in self.units


def classify(n: int) -> ResidueClassification:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    units = frozenset(x for x in range(n) if math.gcd(x, n) == 1)
    return ResidueClassification(n, units, frozenset(range(n)) - units)
