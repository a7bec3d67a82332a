"""Named small permutation groups used by the verification suites."""

from __future__ import annotations

from functools import cache

from .groupkit import PermGroup, group_from_generators


def cyclic(n: int) -> PermGroup:
    """C_n as the n-cycle on n points (C_1 is the trivial group)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return group_from_generators(1, [], name="C1")
    shift = tuple((i + 1) % n for i in range(n))
    return group_from_generators(n, [shift], name=f"C{n}")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting on the n-gon (n >= 3)."""
    if n < 3:
        raise ValueError("need n >= 3 for a dihedral action on the n-gon")
    rot = tuple((i + 1) % n for i in range(n))
    flip = tuple((n - i) % n for i in range(n))
    return group_from_generators(n, [rot, flip], name=f"D{n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return group_from_generators(1, [], name="S1")
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    return group_from_generators(n, [swap, cycle], name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        raise ValueError("n must be >= 3")
    cycle3 = (1, 2, 0) + tuple(range(3, n))
    if n % 2:
        full = tuple((i + 1) % n for i in range(n))
    else:
        full = (0,) + tuple(1 + (i + 1) % (n - 1) for i in range(n - 1))
    return group_from_generators(n, [cycle3, full], name=f"A{n}")


def quaternion8() -> PermGroup:
    """Q8 in its regular representation on 8 points."""
    x = (1, 2, 3, 0, 5, 6, 7, 4)
    y = (4, 7, 6, 5, 2, 1, 0, 3)
    return group_from_generators(8, [x, y], name="Q8")


def elementary_abelian(q: int, rank: int) -> PermGroup:
    """(C_q)**rank on q*rank points, one q-cycle per factor."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    degree = q * rank
    gens = []
    for r in range(rank):
        base = r * q
        images = list(range(degree))
        for i in range(q):
            images[base + i] = base + (i + 1) % q
        gens.append(tuple(images))
    return group_from_generators(degree, gens, name=f"C{q}^{rank}")


def frobenius20() -> PermGroup:
    """C5 : C4, the affine maps x -> ax + b on F_5."""
    shift = (1, 2, 3, 4, 0)
    double = (0, 2, 4, 1, 3)
    return group_from_generators(5, [shift, double], name="F20")


def direct_product(a: PermGroup, b: PermGroup, name: str | None = None) -> PermGroup:
    """Direct product acting on the disjoint union of the two point sets."""
    degree = a.degree + b.degree
    gens = [g + tuple(range(a.degree, degree)) for g in a.generators]
    gens += [
        tuple(range(a.degree)) + tuple(a.degree + x for x in g)
        for g in b.generators
    ]
    if name is None:
        name = f"{a.name or '?'}x{b.name or '?'}"
    return group_from_generators(degree, gens, name=name)


@cache
def named_catalog() -> dict[str, PermGroup]:
    """The named test catalog: a spread of cyclic, dihedral, symmetric,
    alternating, quaternion and product groups, all of order <= 200."""
    groups = [
        cyclic(2),
        cyclic(3),
        cyclic(4),
        cyclic(5),
        cyclic(6),
        cyclic(8),
        cyclic(9),
        cyclic(12),
        elementary_abelian(2, 2),
        elementary_abelian(2, 3),
        elementary_abelian(3, 2),
        symmetric(3),
        symmetric(4),
        alternating(4),
        alternating(5),
        dihedral(4),
        dihedral(5),
        dihedral(6),
        dihedral(10),
        quaternion8(),
        frobenius20(),
        direct_product(cyclic(2), alternating(4), name="C2xA4"),
        direct_product(cyclic(3), symmetric(3), name="C3xS3"),
        direct_product(symmetric(3), symmetric(3), name="S3xS3"),
    ]
    return {g.name: g for g in groups}
