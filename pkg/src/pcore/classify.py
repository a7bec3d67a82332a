"""Decision logic: what an order n = p**s * m guarantees about its groups.

The dichotomy runs on the valuation comparison s vs v_p(big_gamma(m)):

* s <= v_p(big_gamma(m)): a group of order n with trivial p-core exists
  (a witness), and when additionally p**s fails to divide big_gamma(m') for
  every proper divisor m' of m, that witness is the unique solvable one.
* s > v_p(big_gamma(m)): every solvable group of order n has a nontrivial
  normal p-subgroup; this covers all groups when m is a prime power (such
  groups are solvable by Burnside's two-prime theorem) or n is odd (Odd
  Order Theorem).  Those two classical theorems are consumed as facts, never
  re-derived, and no claim is made about nonsolvable groups outside them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import (
    big_gamma_valuation,
    divisors,
    factorize,
    is_prime,
    padic_valuation,
)


class Verdict(enum.Enum):
    NOT_APPLICABLE = "NOT_APPLICABLE"
    P_GROUP = "P_GROUP"
    FORCED_ALL_GROUPS = "FORCED_ALL_GROUPS"
    FORCED_SOLVABLE_ONLY = "FORCED_SOLVABLE_ONLY"
    WITNESS_EXISTS = "WITNESS_EXISTS"
    UNIQUE_SOLVABLE_WITNESS = "UNIQUE_SOLVABLE_WITNESS"


class Guarantee(enum.Enum):
    BURNSIDE_PQ = "BURNSIDE_PQ"
    ODD_ORDER = "ODD_ORDER"
    NONE = "NONE"


WITNESS_VERDICTS = frozenset({Verdict.WITNESS_EXISTS, Verdict.UNIQUE_SOLVABLE_WITNESS})
FORCED_VERDICTS = frozenset(
    {Verdict.P_GROUP, Verdict.FORCED_ALL_GROUPS, Verdict.FORCED_SOLVABLE_ONLY}
)


@dataclass(frozen=True)
class OrderDecomposition:
    """n = p**s * m with p not dividing m."""

    n: int
    p: int
    s: int
    m: int


@dataclass(frozen=True)
class Classification:
    decomposition: OrderDecomposition
    verdict: Verdict
    valuation_needed: int
    valuation_available: int
    solvability_guarantee: Guarantee

    @property
    def n(self) -> int:
        return self.decomposition.n

    @property
    def p(self) -> int:
        return self.decomposition.p


def decompose(n: int, p: int) -> OrderDecomposition:
    """Split n >= 1 into p**s * m with p coprime to m (s = 0 is allowed)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    s = padic_valuation(n, p)
    return OrderDecomposition(n=n, p=p, s=s, m=n // p**s)


def classify_order(n: int, p: int) -> Classification:
    """Classify the order n with respect to the prime p.

    Verdicts:

    * NOT_APPLICABLE: p does not divide n.
    * P_GROUP: n is a power of p, so the whole group is its own p-core.
    * WITNESS_EXISTS / UNIQUE_SOLVABLE_WITNESS: a group of order n with
      trivial p-core exists (unique among solvable groups in the second
      case).
    * FORCED_SOLVABLE_ONLY: every solvable group of order n has a
      nontrivial normal p-subgroup; nothing is asserted about nonsolvable
      groups (order 60 at p = 5 shows they can dodge).
    * FORCED_ALL_GROUPS: as above, strengthened to all groups because all
      groups of order n are known solvable (m prime power, or n odd).
    """
    deco = decompose(n, p)
    s, m = deco.s, deco.m
    available = big_gamma_valuation(m, p)
    guarantee = Guarantee.NONE
    if s == 0:
        verdict = Verdict.NOT_APPLICABLE
    elif m == 1:
        verdict = Verdict.P_GROUP
    elif s <= available:
        if all(
            s > big_gamma_valuation(d, p) for d in divisors(m) if d != m
        ):
            verdict = Verdict.UNIQUE_SOLVABLE_WITNESS
        else:
            verdict = Verdict.WITNESS_EXISTS
    else:
        if factorize(m).is_prime_power():
            verdict = Verdict.FORCED_ALL_GROUPS
            guarantee = Guarantee.BURNSIDE_PQ
        elif n % 2 == 1:
            verdict = Verdict.FORCED_ALL_GROUPS
            guarantee = Guarantee.ODD_ORDER
        else:
            verdict = Verdict.FORCED_SOLVABLE_ONLY
    return Classification(
        decomposition=deco,
        verdict=verdict,
        valuation_needed=s,
        valuation_available=available,
        solvability_guarantee=guarantee,
    )


def sieve(p: int, lo: int, hi: int) -> list[tuple[int, Classification]]:
    """Classify every order in [lo, hi] divisible by p, ordered by n."""
    if not (1 <= lo <= hi):
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    out = []
    for n in range(lo, hi + 1):
        c = classify_order(n, p)
        if c.decomposition.s > 0:
            out.append((n, c))
    return out
