"""Desk-scale permutation group engine.

Groups are given by generators acting on {0..d-1}.  Two tiers back the
operations: a deterministic stabilizer chain provides order and membership
for any group under the order cap (default 10**6), and an exhaustive
element table is materialized for groups under the table cap (default
10**5), enabling the brute-force subgroup machinery (normalizers,
centralizers, cores) that the verification suites audit directly.

Permutations are plain tuples: entry i is the image of point i.  The
composition convention is left-to-right: perm_mul(a, b) applies a first.

Everything is deterministic; all searches scan candidates in sorted order.
"""

from __future__ import annotations

import itertools
import math
from functools import cached_property

from .arith import factorize, padic_valuation

Perm = tuple[int, ...]

DEFAULT_ORDER_CAP = 10**6
DEFAULT_TABLE_CAP = 10**5


class CapExceededError(RuntimeError):
    """A group order, element table or poset grew past its configured cap."""


# ---------------------------------------------------------------------------
# permutation primitives


def check_permutation(images, degree: int | None = None) -> Perm:
    """Validate an image array as a bijection on {0..d-1} and return it."""
    p = tuple(int(x) for x in images)
    d = len(p) if degree is None else degree
    if len(p) != d or sorted(p) != list(range(d)):
        raise ValueError(f"not a permutation of 0..{d - 1}: {list(images)!r}")
    return p


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def perm_mul(a: Perm, b: Perm) -> Perm:
    """Compose left-to-right: the result applies a, then b."""
    return tuple(b[x] for x in a)


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_pow(a: Perm, n: int) -> Perm:
    if n < 0:
        return perm_pow(perm_inv(a), -n)
    out = identity_perm(len(a))
    base = a
    while n:
        if n & 1:
            out = perm_mul(out, base)
        base = perm_mul(base, base)
        n >>= 1
    return out


def perm_conj(a: Perm, g: Perm) -> Perm:
    """Conjugate of a by g: relabel a's points along g."""
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[g[i]] = g[x]
    return tuple(out)


def perm_order(a: Perm) -> int:
    """Order as the lcm of cycle lengths."""
    n = len(a)
    seen = [False] * n
    out = 1
    for i in range(n):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = a[j]
                length += 1
            out = math.lcm(out, length)
    return out


def _is_identity(a: Perm) -> bool:
    return all(i == x for i, x in enumerate(a))


# ---------------------------------------------------------------------------
# deterministic stabilizer chain (Schreier-Sims)


class _StabChain:
    """Textbook Schreier-Sims with deterministic processing order.

    One nested strong generating set: ``gens[l]`` holds every strong
    generator fixing the base points before level l, so gens[0] is the full
    set and gens[l+1] is a subset of gens[l].  Transversals map orbit points
    to words carrying the level's base point there.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.points: list[int] = []
        self.gens: list[list[Perm]] = []
        self.transversals: list[dict[int, Perm]] = []

    def order(self) -> int:
        out = 1
        for tr in self.transversals:
            out *= len(tr)
        return out

    def contains(self, g: Perm) -> bool:
        residue, _ = self._sift(0, g)
        return _is_identity(residue)

    def _sift(self, start: int, g: Perm) -> tuple[Perm, int]:
        for j in range(start, len(self.points)):
            d = g[self.points[j]]
            u = self.transversals[j].get(d)
            if u is None:
                return g, j
            g = perm_mul(g, perm_inv(u))
        return g, len(self.points)

    def _rebuild_orbit(self, i: int) -> None:
        b = self.points[i]
        tr = {b: identity_perm(self.degree)}
        queue = [b]
        while queue:
            pt = queue.pop(0)
            u = tr[pt]
            for s in self.gens[i]:
                img = s[pt]
                if img not in tr:
                    tr[img] = perm_mul(u, s)
                    queue.append(img)
        self.transversals[i] = tr

    def _record(self, residue: Perm, j: int) -> None:
        # residue fixes the base points before level j; it is a strong
        # generator for every level up to and including j
        if j == len(self.points):
            b = min(x for x in range(self.degree) if residue[x] != x)
            self.points.append(b)
            self.gens.append([])
            self.transversals.append({})
        for l in range(j + 1):
            self.gens[l].append(residue)

    def _install(self, g: Perm) -> None:
        residue, j = self._sift(0, g)
        if _is_identity(residue):
            return
        self._record(residue, j)
        self._complete_from(j)

    def _complete_from(self, start: int) -> None:
        i = start
        while i >= 0:
            deeper = self._process_level(i)
            i = i - 1 if deeper is None else deeper

    def _process_level(self, i: int) -> int | None:
        # check every Schreier generator of level i sifts to the identity
        # through the deeper levels; on failure record the residue and
        # report the deepest level needing reprocessing
        self._rebuild_orbit(i)
        tr = self.transversals[i]
        for d in sorted(tr):
            u = tr[d]
            for s in self.gens[i]:
                v = tr[s[d]]
                sch = perm_mul(perm_mul(u, s), perm_inv(v))
                residue, j = self._sift(i + 1, sch)
                if not _is_identity(residue):
                    self._record(residue, j)
                    return j
        return None

    @classmethod
    def build(cls, degree: int, generators) -> "_StabChain":
        chain = cls(degree)
        for g in generators:
            chain._install(g)
        return chain


# ---------------------------------------------------------------------------
# groups


class PermGroup:
    """Immutable permutation group on {0..degree-1} given by generators."""

    def __init__(
        self,
        degree: int,
        generators,
        *,
        name: str | None = None,
        order_cap: int = DEFAULT_ORDER_CAP,
        table_cap: int = DEFAULT_TABLE_CAP,
        _known_elements: frozenset[Perm] | None = None,
    ):
        if degree < 1:
            raise ValueError(f"degree must be >= 1, got {degree}")
        gens = []
        for g in generators:
            p = check_permutation(g, degree)
            if not _is_identity(p) and p not in gens:
                gens.append(p)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.name = name
        self.order_cap = order_cap
        self.table_cap = table_cap
        if _known_elements is not None:
            self.__dict__["element_set"] = _known_elements
        if self.order > order_cap:
            raise CapExceededError(
                f"group order {self.order} exceeds the order cap {order_cap}"
            )

    @cached_property
    def _chain(self) -> _StabChain:
        return _StabChain.build(self.degree, self.generators)

    @cached_property
    def order(self) -> int:
        if "element_set" in self.__dict__:
            return len(self.__dict__["element_set"])
        return self._chain.order()

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        """Exhaustive element table; raises CapExceededError above the cap."""
        if self.order > self.table_cap:
            raise CapExceededError(
                f"group order {self.order} exceeds the table cap {self.table_cap}"
            )
        return _close_elements(self.degree, self.generators)

    @cached_property
    def elements_sorted(self) -> tuple[Perm, ...]:
        return tuple(sorted(self.element_set))

    def __contains__(self, perm) -> bool:
        p = check_permutation(perm, self.degree)
        if "element_set" in self.__dict__:
            return p in self.element_set
        return self._chain.contains(p)

    def is_trivial(self) -> bool:
        return not self.generators

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def same_group_as(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self.order == other.order
            and self.is_subgroup_of(other)
        )

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<PermGroup{label} degree={self.degree} gens={len(self.generators)}>"


class Subgroup(PermGroup):
    """A PermGroup whose generators were checked to lie in a parent group."""

    def __init__(self, parent: PermGroup, generators, **kw):
        self.parent = parent
        gens = [check_permutation(g, parent.degree) for g in generators]
        for g in gens:
            if g not in parent:
                raise ValueError("subgroup generator not contained in parent group")
        kw.setdefault("order_cap", parent.order_cap)
        kw.setdefault("table_cap", parent.table_cap)
        super().__init__(parent.degree, gens, **kw)


def group_from_generators(
    degree: int,
    generators,
    *,
    name: str | None = None,
    order_cap: int = DEFAULT_ORDER_CAP,
    table_cap: int = DEFAULT_TABLE_CAP,
) -> PermGroup:
    """Build a PermGroup, validating every generator."""
    return PermGroup(
        degree, generators, name=name, order_cap=order_cap, table_cap=table_cap
    )


def _close_elements(degree: int, gens) -> frozenset[Perm]:
    ident = identity_perm(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _subgroup_from_elements(parent: PermGroup, elements: frozenset[Perm]) -> Subgroup:
    gens = minimal_generators(elements)
    return Subgroup(parent, gens, _known_elements=elements)


def trivial_subgroup(parent: PermGroup) -> Subgroup:
    return Subgroup(
        parent, [], _known_elements=frozenset({identity_perm(parent.degree)})
    )


def minimal_generators(elements: frozenset[Perm]) -> list[Perm]:
    """Greedy small generating set: scan sorted elements, keep what grows."""
    if len(elements) == 1:
        return []
    degree = len(next(iter(elements)))
    gens: list[Perm] = []
    span: frozenset[Perm] = frozenset({identity_perm(degree)})
    for x in sorted(elements):
        if x in span:
            continue
        gens.append(x)
        span = _close_elements(degree, gens)
        if len(span) == len(elements):
            break
    return gens


# ---------------------------------------------------------------------------
# subgroup machinery


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    return all(
        perm_mul(a, b) == perm_mul(b, a) for i, a in enumerate(gens) for b in gens[i:]
    )


def is_elementary_abelian(G: PermGroup, q: int) -> bool:
    """Abelian with every nontrivial element of order q."""
    if not is_abelian(G):
        return False
    return all(perm_order(x) == q for x in G.element_set if not _is_identity(x))


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(G: PermGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, by deterministic p-subgroup climbing.

    Starting from the trivial subgroup, repeatedly adjoin the
    lexicographically least p-power-order element of the current
    normalizer lying outside the subgroup.  Such an element extends the
    subgroup to a strictly larger p-group, and one always exists while the
    subgroup is smaller than p**v_p(|G|): a proper p-subgroup is proper in
    its normalizer's p-part.
    """
    target = p ** padic_valuation(G.order, p)
    current = trivial_subgroup(G)
    while current.order < target:
        scope = G if current.is_trivial() else normalizer(G, current)
        member = current.element_set
        extend = None
        for x in scope.elements_sorted:
            if x in member:
                continue
            if _is_p_power(perm_order(x), p):
                extend = x
                break
        if extend is None:
            raise RuntimeError("climbing stalled before the Sylow order")
        grown = _close_elements(G.degree, list(current.generators) + [extend])
        current = _subgroup_from_elements(G, grown)
    return current


def normalizer(G: PermGroup, H: Subgroup) -> Subgroup:
    """N_G(H), by scanning G's element table.

    g normalizes H iff it conjugates every generator of H into H:
    conjugation is an automorphism, so generator containment suffices.
    """
    hgens = H.generators
    hset = H.element_set
    keep = [
        g for g in G.elements_sorted if all(perm_conj(h, g) in hset for h in hgens)
    ]
    return _subgroup_from_elements(G, frozenset(keep))


def centralizer(G: PermGroup, H: Subgroup) -> Subgroup:
    """C_G(H): elements commuting with every generator of H."""
    hgens = H.generators
    keep = [
        g
        for g in G.elements_sorted
        if all(perm_mul(g, h) == perm_mul(h, g) for h in hgens)
    ]
    return _subgroup_from_elements(G, frozenset(keep))


def p_core(G: PermGroup, p: int) -> Subgroup:
    """O_p(G): the intersection of all conjugates of one Sylow p-subgroup.

    Iterates S := S intersect (S conjugated by g) over the generators of G
    until stable.  Every iterate is an intersection of Sylow conjugates and
    the stable set is conjugation-invariant, hence exactly the largest
    normal p-subgroup.
    """
    sylow = sylow_subgroup(G, p)
    core = set(sylow.element_set)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            conjugated = {perm_conj(x, g) for x in core}
            if conjugated != core:
                core &= conjugated
                changed = True
    return _subgroup_from_elements(G, frozenset(core))


def conjugacy_classes(G: PermGroup) -> list[frozenset[Perm]]:
    """Conjugacy classes, ordered by their least element."""
    remaining = set(G.element_set)
    classes = []
    while remaining:
        seed = min(remaining)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for g in G.generators:
                y = perm_conj(x, g)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        classes.append(frozenset(orbit))
        remaining -= orbit
    return sorted(classes, key=min)


def normal_closure(G: PermGroup, seeds) -> Subgroup:
    """Smallest normal subgroup of G containing the seed elements."""
    gens = [s for s in seeds if not _is_identity(s)]
    closure = _close_elements(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            for x in list(gens):
                c = perm_conj(x, g)
                if c not in closure:
                    gens.append(c)
                    closure = _close_elements(G.degree, gens)
                    changed = True
    return _subgroup_from_elements(G, closure)


def _commutator(a: Perm, b: Perm) -> Perm:
    return perm_mul(perm_mul(perm_inv(a), perm_inv(b)), perm_mul(a, b))


def derived_subgroup(G: PermGroup) -> Subgroup:
    """Commutator subgroup: normal closure of generator commutators."""
    seeds = [
        _commutator(a, b)
        for i, a in enumerate(G.generators)
        for b in G.generators[i + 1 :]
    ]
    return normal_closure(G, seeds)


def derived_series(G: PermGroup) -> list[PermGroup]:
    """Strictly descending commutator series, ending when it stabilizes."""
    series: list[PermGroup] = [G]
    current = G
    while current.order > 1:
        nxt = derived_subgroup(current)
        if nxt.order == current.order:
            break
        series.append(nxt)
        current = nxt
    return series


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order == 1


def fitting(G: PermGroup) -> Subgroup:
    """Fitting subgroup: generated by the q-cores over primes q dividing |G|."""
    gens: list[Perm] = []
    for q, _ in factorize(G.order).parts:
        gens.extend(p_core(G, q).generators)
    if not gens:
        return trivial_subgroup(G)
    return _subgroup_from_elements(G, _close_elements(G.degree, gens))


def _p_group_prime(P: PermGroup) -> int:
    fact = factorize(P.order)
    if len(fact.parts) != 1:
        raise ValueError(f"not a p-group: order {P.order}")
    return fact.parts[0][0]


def _frattini_base(P: PermGroup, p: int) -> Subgroup:
    # the subgroup generated by all p-th powers and all commutators; the
    # quotient by it is the largest elementary abelian quotient of P
    seeds = [perm_pow(x, p) for x in P.element_set]
    seeds += [
        _commutator(a, b)
        for i, a in enumerate(P.generators)
        for b in P.generators[i + 1 :]
    ]
    return normal_closure(P, [s for s in seeds if not _is_identity(s)])


def frattini_p(P: PermGroup) -> Subgroup:
    """Frattini subgroup of a p-group: intersection of the maximal subgroups.

    Maximal subgroups of a p-group are exactly its index-p subgroups, and
    each one contains every commutator and p-th power, so they are the
    preimages of the hyperplanes of the elementary abelian quotient by the
    subgroup those elements generate.  All hyperplanes are enumerated and
    their preimages intersected.
    """
    if P.order == 1:
        return trivial_subgroup(P)
    p = _p_group_prime(P)
    base = _frattini_base(P, p)
    coset_of, coords, rank = _coset_coordinates(P, base, p)
    if rank == 0:
        return _subgroup_from_elements(P, base.element_set)
    intersection = set(P.element_set)
    for chi in itertools.product(range(p), repeat=rank):
        if not any(chi):
            continue
        kernel = {
            x
            for x, key in coset_of.items()
            if sum(c * v for c, v in zip(chi, coords[key])) % p == 0
        }
        intersection &= kernel
    result = frozenset(intersection)
    # sanity: the hyperplanes of P/base intersect in the zero space
    assert result == base.element_set
    return _subgroup_from_elements(P, result)


def first_maximal_subgroup(P: PermGroup) -> Subgroup:
    """Deterministic index-p subgroup of a nontrivial p-group.

    Selected as the kernel preimage of the lexicographically least
    nontrivial functional on P modulo its Frattini subgroup; used for
    deterministic descent through maximal subgroups.
    """
    if P.order == 1:
        raise ValueError("the trivial group has no maximal subgroup")
    p = _p_group_prime(P)
    base = _frattini_base(P, p)
    coset_of, coords, rank = _coset_coordinates(P, base, p)
    assert rank >= 1
    # least nontrivial functional is (0, ..., 0, 1): kernel is "last
    # coordinate zero"
    keep = frozenset(x for x, key in coset_of.items() if coords[key][-1] == 0)
    assert len(keep) * p == P.order
    return _subgroup_from_elements(P, keep)


def _coset_coordinates(P: PermGroup, N: Subgroup, p: int):
    """F_p coordinates for the cosets of N in P when P/N is elementary abelian.

    Returns (element -> coset key, coset key -> coordinate tuple, rank).
    Coset keys are minimal coset elements; the basis is chosen greedily over
    the sorted keys, so coordinates are deterministic.
    """
    nset = N.element_set
    coset_of: dict[Perm, Perm] = {}
    keys: list[Perm] = []
    for x in P.elements_sorted:
        if x in coset_of:
            continue
        coset = sorted(perm_mul(x, n) for n in nset)
        key = coset[0]
        keys.append(key)
        for y in coset:
            coset_of[y] = key
    keys.sort()

    def mul_keys(a: Perm, b: Perm) -> Perm:
        return coset_of[perm_mul(a, b)]

    ident_key = coset_of[identity_perm(P.degree)]
    span: dict[Perm, tuple[int, ...]] = {ident_key: ()}
    rank = 0
    for key in keys:
        if key in span:
            continue
        rank += 1
        new_span: dict[Perm, tuple[int, ...]] = {}
        for known, vec in span.items():
            acc = known
            for c in range(p):
                new_span[acc] = vec + (c,)
                acc = mul_keys(acc, key)
        span = new_span
    coords = {k: v for k, v in span.items()}
    return coset_of, coords, rank


def coset_action(G: PermGroup, N: Subgroup) -> PermGroup:
    """Permutation image of G acting on the cosets of a normal subgroup N.

    Cosets are indexed by their minimal element in sorted order, giving a
    deterministic realization of the quotient G/N.
    """
    nset = N.element_set
    coset_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    for x in G.elements_sorted:
        if x in coset_of:
            continue
        coset = sorted(perm_mul(x, n) for n in nset)
        idx = len(reps)
        reps.append(coset[0])
        for y in coset:
            coset_of[y] = idx
    images = [
        tuple(coset_of[perm_mul(rep, g)] for rep in reps) for g in G.generators
    ]
    return PermGroup(
        max(1, len(reps)), images, order_cap=G.order_cap, table_cap=G.table_cap
    )


def quotient_p_core_check(G: PermGroup, p: int) -> bool:
    """True iff the p-core of G / O_p(G) is trivial.

    Always true in fact; the operation exists as a self-test of the core
    and quotient machinery.
    """
    core = p_core(G, p)
    if core.order == G.order:
        return True
    quotient = coset_action(G, core)
    assert quotient.order * core.order == G.order
    return p_core(quotient, p).order == 1
