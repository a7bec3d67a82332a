"""Exact arithmetic for the GL-order divisibility criteria.

``gamma(t, q)`` is the product (q**t - 1)(q**(t-1) - 1)...(q - 1), the part
of |GL(t, q)| that is coprime to q.  ``big_gamma(m)`` multiplies ``gamma``
over the prime factorization of m.  The central question "does p**s divide
big_gamma(m)?" is decided on p-adic valuations, summed term by term, so the
super-exponentially growing products never appear on the decision path; the
full products stay available for the divisibility property suites.

Everything here is pure, deterministic and exact (Python integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import isqrt


@dataclass(frozen=True)
class Factorization:
    """A positive integer as an ordered product of prime powers.

    ``parts`` holds (prime, exponent) pairs with strictly increasing primes
    and every exponent >= 1; ``value`` is their product.  ``value == 1``
    exactly when ``parts`` is empty.
    """

    value: int
    parts: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.parts)

    def is_prime_power(self) -> bool:
        return len(self.parts) == 1


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test.

    Desk scale: fine for the order ranges this package works at.  Not meant
    for cryptographic-size inputs.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    top = isqrt(n)
    while f <= top:
        if n % f == 0:
            return False
        f += 2
    return True


def _require_prime(p: int, role: str) -> None:
    if not is_prime(p):
        raise ValueError(f"{role} must be prime, got {p}")


@cache
def factorize(m: int) -> Factorization:
    """Prime factorization of m >= 1 by deterministic trial division.

    Returns parts in increasing prime order; factorize(1) has empty parts.
    """
    if m < 1:
        raise ValueError(f"cannot factorize {m}: need a positive integer")
    parts = []
    n = m
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            parts.append((f, e))
        f += 1 if f == 2 else 2
    if n > 1:
        parts.append((n, 1))
    return Factorization(value=m, parts=tuple(parts))


def divisors(m: int) -> list[int]:
    """All divisors of m >= 1 in increasing order, via the factorization."""
    divs = [1]
    for q, t in factorize(m).parts:
        qpow = [q**j for j in range(t + 1)]
        divs = [d * w for d in divs for w in qpow]
    return sorted(divs)


@cache
def gamma(t: int, q: int) -> int:
    """Product of (q**i - 1) for i = 1..t; by convention gamma(0, q) = 1.

    This is |GL(t, q)| with the q-power factor stripped.  q must be prime.
    """
    _require_prime(q, "q")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    out = 1
    for i in range(1, t + 1):
        out *= q**i - 1
    return out


def big_gamma(m: int) -> int:
    """Product of gamma(t_i, q_i) over the prime factorization of m.

    big_gamma(1) = 1 (empty factorization).
    """
    out = 1
    for q, t in factorize(m).parts:
        out *= gamma(t, q)
    return out


def padic_valuation(x: int, p: int) -> int:
    """Largest e with p**e dividing x, for x >= 1.

    x = 0 is rejected: the valuation would be infinite.
    """
    _require_prime(p, "p")
    if x < 1:
        raise ValueError(f"valuation undefined for {x}: need x >= 1")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def big_gamma_valuation(m: int, p: int) -> int:
    """p-adic valuation of big_gamma(m), without materializing the product.

    Each factor (q**j - 1) contributes its own valuation, so the sum is
    over j = 1..t_i for every prime power q_i**t_i in m.  Equals
    padic_valuation(big_gamma(m), p) but stays overflow-proof by
    construction.
    """
    _require_prime(p, "p")
    total = 0
    for q, t in factorize(m).parts:
        qj = 1
        for _ in range(t):
            qj *= q
            total += padic_valuation(qj - 1, p)
    return total
