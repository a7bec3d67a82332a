"""Exact linear algebra over prime fields and the groups GL(t, q).

Matrices are immutable residue grids over F_q (q prime).  Only prime
fields are supported: the automorphism groups realized elsewhere act on
products of elementary abelian groups, which are F_q vector spaces.

Determinants use Gaussian elimination mod q with the pivot fixed as the
first nonzero entry in column order, so every operation is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .arith import gamma, is_prime


@dataclass(frozen=True)
class GFMatrix:
    """A t x t matrix over the prime field F_q, entries reduced mod q."""

    q: int
    t: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"modulus must be prime, got {self.q}")
        if self.t < 1:
            raise ValueError(f"dimension must be >= 1, got {self.t}")
        if len(self.entries) != self.t or any(len(r) != self.t for r in self.entries):
            raise ValueError("entries must form a t x t grid")
        if any(not (0 <= x < self.q) for r in self.entries for x in r):
            raise ValueError("entries must be residues in [0, q)")

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def is_identity(self) -> bool:
        return all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.t)
            for j in range(self.t)
        )


def gf_matrix(q: int, rows) -> GFMatrix:
    """Build a GFMatrix from any nested sequence, reducing entries mod q."""
    reduced = tuple(tuple(int(x) % q for x in r) for r in rows)
    return GFMatrix(q=q, t=len(reduced), entries=reduced)


def identity_matrix(t: int, q: int) -> GFMatrix:
    return gf_matrix(q, [[1 if i == j else 0 for j in range(t)] for i in range(t)])


def _check_compatible(a: GFMatrix, b: GFMatrix) -> None:
    if a.q != b.q or a.t != b.t:
        raise ValueError(
            f"incompatible matrices: ({a.t}x{a.t} mod {a.q}) vs ({b.t}x{b.t} mod {b.q})"
        )


def mat_mul(a: GFMatrix, b: GFMatrix) -> GFMatrix:
    """Matrix product mod q."""
    _check_compatible(a, b)
    q, t = a.q, a.t
    rows = []
    for i in range(t):
        ai = a.entries[i]
        rows.append(
            tuple(sum(ai[k] * b.entries[k][j] for k in range(t)) % q for j in range(t))
        )
    return GFMatrix(q=q, t=t, entries=tuple(rows))


def mat_vec(a: GFMatrix, v: tuple[int, ...]) -> tuple[int, ...]:
    """Apply the matrix to a column vector of residues."""
    if len(v) != a.t:
        raise ValueError(f"vector length {len(v)} != dimension {a.t}")
    return tuple(
        sum(a.entries[i][k] * v[k] for k in range(a.t)) % a.q for i in range(a.t)
    )


def determinant(a: GFMatrix) -> int:
    """Determinant mod q via Gaussian elimination.

    Pivot choice is the first nonzero entry in column order, so the
    elimination path (and thus everything built on it) is deterministic.
    """
    q, t = a.q, a.t
    m = [list(r) for r in a.entries]
    det = 1
    for col in range(t):
        pivot = next((r for r in range(col, t) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det % q
        det = det * m[col][col] % q
        inv = pow(m[col][col], -1, q)
        for r in range(col + 1, t):
            if m[r][col]:
                factor = m[r][col] * inv % q
                m[r] = [(x - factor * y) % q for x, y in zip(m[r], m[col])]
    return det


def mat_inverse(a: GFMatrix) -> GFMatrix:
    """Inverse mod q; raises on a singular matrix."""
    q, t = a.q, a.t
    m = [list(r) + [1 if i == j else 0 for j in range(t)] for i, r in enumerate(a.entries)]
    for col in range(t):
        pivot = next((r for r in range(col, t) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular mod %d" % q)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
        inv = pow(m[col][col], -1, q)
        m[col] = [x * inv % q for x in m[col]]
        for r in range(t):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [(x - factor * y) % q for x, y in zip(m[r], m[col])]
    return gf_matrix(q, [row[t:] for row in m])


def matrix_order(a: GFMatrix) -> int:
    """Least k >= 1 with a**k = identity; requires an invertible matrix."""
    if determinant(a) == 0:
        raise ValueError("singular matrix has no multiplicative order")
    ident = identity_matrix(a.t, a.q)
    power = a
    k = 1
    while power != ident:
        power = mat_mul(power, a)
        k += 1
    return k


def gl_order(t: int, q: int) -> int:
    """Order of GL(t, q): q**(t(t-1)/2) * gamma(t, q)."""
    if t < 1:
        raise ValueError(f"dimension must be >= 1, got {t}")
    return q ** (t * (t - 1) // 2) * gamma(t, q)


def enumerate_gl(t: int, q: int, cap: int) -> list[GFMatrix]:
    """All invertible t x t matrices over F_q in lexicographic order.

    Ordering is on row-major entry tuples.  Refuses up front when
    gl_order(t, q) exceeds cap; callers must then use a generator-based
    construction instead of full enumeration.
    """
    total = gl_order(t, q)
    if total > cap:
        raise ValueError(
            f"GL({t},{q}) has order {total}, exceeding the enumeration cap {cap}"
        )
    out = []
    for flat in itertools.product(range(q), repeat=t * t):
        rows = tuple(flat[i * t : (i + 1) * t] for i in range(t))
        m = GFMatrix(q=q, t=t, entries=rows)
        if determinant(m) != 0:
            out.append(m)
    return out
