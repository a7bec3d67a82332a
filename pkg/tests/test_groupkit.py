import pytest

from pcore.arith import factorize, padic_valuation
from pcore.catalog import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    frobenius20,
    named_catalog,
    quaternion8,
    symmetric,
)
from pcore.groupkit import (
    CapExceededError,
    PermGroup,
    Subgroup,
    centralizer,
    check_permutation,
    conjugacy_classes,
    coset_action,
    derived_series,
    first_maximal_subgroup,
    fitting,
    frattini_p,
    group_from_generators,
    identity_perm,
    is_abelian,
    is_elementary_abelian,
    is_solvable,
    normalizer,
    p_core,
    perm_conj,
    perm_inv,
    perm_mul,
    perm_order,
    perm_pow,
    quotient_p_core_check,
    sylow_subgroup,
    trivial_subgroup,
)


def perms_close(degree, gens):
    # independent exhaustive closure for cross-checking orders
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def brute_force_p_core(G, p):
    """Independent oracle: union of the conjugacy classes whose normal
    closure is a p-group."""
    keep = set()
    for cls in conjugacy_classes(G):
        closure = perms_close(G.degree, list(cls))
        # conjugation-stable completion of the subgroup generated by cls
        changed = True
        gens = sorted(cls)
        while changed:
            changed = False
            for g in G.generators:
                for x in list(gens):
                    c = perm_conj(x, g)
                    if c not in closure:
                        gens.append(c)
                        closure = perms_close(G.degree, gens)
                        changed = True
        size = len(closure)
        while size % p == 0:
            size //= p
        if size == 1:
            keep |= cls
    return keep


# ---------------------------------------------------------------------------
# primitives


def test_perm_primitives():
    a = (1, 2, 0)
    b = (1, 0, 2)
    assert perm_mul(a, perm_inv(a)) == identity_perm(3)
    assert perm_mul(a, b) != perm_mul(b, a)
    assert perm_pow(a, 3) == identity_perm(3)
    assert perm_pow(a, -1) == perm_inv(a)
    assert perm_order(a) == 3
    assert perm_order(identity_perm(5)) == 1
    # conjugation relabels points
    c = perm_conj(a, b)
    assert c == tuple(b[a[perm_inv(b)[i]]] for i in range(3))


def test_check_permutation_rejects():
    with pytest.raises(ValueError):
        check_permutation([0, 0, 1])
    with pytest.raises(ValueError):
        check_permutation([0, 1], degree=3)
    with pytest.raises(ValueError):
        check_permutation([1, 2, 3])


# ---------------------------------------------------------------------------
# group construction


def test_group_from_generators_examples():
    s3 = group_from_generators(3, [(1, 0, 2), (1, 2, 0)])
    assert s3.order == 6
    triv = group_from_generators(1, [])
    assert triv.order == 1 and triv.is_trivial()
    a5 = group_from_generators(5, [(1, 2, 3, 4, 0), (0, 1, 3, 4, 2)])
    assert a5.order == 60


def test_group_order_matches_exhaustive_closure():
    cases = [
        symmetric(4),
        alternating(5),
        dihedral(6),
        quaternion8(),
        frobenius20(),
        direct_product(symmetric(3), symmetric(3)),
        elementary_abelian(3, 2),
    ]
    for g in cases:
        assert g.order == len(perms_close(g.degree, g.generators))


def test_membership_agrees_with_element_table():
    for g in (symmetric(4), quaternion8(), dihedral(5)):
        table = g.element_set
        for x in sorted(table):
            assert x in g
        # a permutation outside the group
        outside = tuple(range(g.degree))
        for x in perms_close(g.degree, [(1, 0) + tuple(range(2, g.degree))]):
            if x not in table:
                outside = x
                break
        if outside != tuple(range(g.degree)):
            assert outside not in g


def test_order_cap_enforced():
    with pytest.raises(CapExceededError):
        group_from_generators(
            10,
            [(1, 0) + tuple(range(2, 10)), tuple((i + 1) % 10 for i in range(10))],
            order_cap=10**6,
        )  # S10 has order 3628800


def test_table_cap_enforced():
    s9_gens = [(1, 0) + tuple(range(2, 9)), tuple((i + 1) % 9 for i in range(9))]
    s9 = group_from_generators(9, s9_gens, table_cap=10**5)
    assert s9.order == 362880  # stabilizer chain side works
    with pytest.raises(CapExceededError):
        s9.element_set  # table side refuses


def test_subgroup_validation():
    s4 = symmetric(4)
    v4 = Subgroup(s4, [(1, 0, 3, 2), (2, 3, 0, 1)])
    assert v4.order == 4
    with pytest.raises(ValueError):
        Subgroup(alternating(4), [(1, 0, 2, 3)])  # odd permutation


# ---------------------------------------------------------------------------
# sylow subgroups


def test_sylow_examples():
    assert sylow_subgroup(symmetric(4), 2).order == 8
    assert sylow_subgroup(alternating(5), 5).order == 5
    q8 = quaternion8()
    assert sylow_subgroup(q8, 2).same_group_as(q8)


@pytest.mark.parametrize("name", sorted(named_catalog()))
def test_sylow_order_exact(name):
    G = named_catalog()[name]
    for p, _ in factorize(G.order).parts:
        syl = sylow_subgroup(G, p)
        assert syl.order == p ** padic_valuation(G.order, p)
        assert syl.is_subgroup_of(G)


def test_sylow_with_p_not_dividing():
    assert sylow_subgroup(symmetric(3), 5).order == 1


def test_sylow_deterministic():
    a = sylow_subgroup(symmetric(4), 2)
    b = sylow_subgroup(symmetric(4), 2)
    assert a.element_set == b.element_set


# ---------------------------------------------------------------------------
# normalizer / centralizer


def test_normalizer_examples():
    s3 = symmetric(3)
    syl2 = sylow_subgroup(s3, 2)
    n = normalizer(s3, syl2)
    assert n.same_group_as(syl2)
    assert centralizer(s3, trivial_subgroup(s3)).same_group_as(s3)
    a3 = Subgroup(s3, [(1, 2, 0)])
    assert centralizer(s3, a3).same_group_as(a3)


def test_normalizer_contains_subgroup():
    s4 = symmetric(4)
    for p in (2, 3):
        syl = sylow_subgroup(s4, p)
        n = normalizer(s4, syl)
        assert syl.is_subgroup_of(n)
        c = centralizer(s4, syl)
        assert c.is_subgroup_of(n)


# ---------------------------------------------------------------------------
# p-core


def test_p_core_examples():
    assert p_core(symmetric(4), 2).order == 4
    assert p_core(symmetric(3), 2).order == 1
    q8 = quaternion8()
    assert p_core(q8, 2).same_group_as(q8)


def test_p_core_is_normal():
    for G in (symmetric(4), alternating(4), dihedral(6), frobenius20()):
        for p, _ in factorize(G.order).parts:
            core = p_core(G, p)
            cset = core.element_set
            for g in G.generators:
                assert {perm_conj(x, g) for x in cset} == cset


@pytest.mark.parametrize("name", sorted(named_catalog()))
def test_p_core_matches_brute_force_oracle(name):
    G = named_catalog()[name]
    assert G.order <= 200
    for p, _ in factorize(G.order).parts:
        assert p_core(G, p).element_set == frozenset(brute_force_p_core(G, p))


# ---------------------------------------------------------------------------
# fitting / frattini


def test_fitting_examples():
    assert fitting(symmetric(4)).order == 4
    c12 = cyclic(12)
    assert fitting(c12).same_group_as(c12)
    assert fitting(symmetric(3)).order == 3


def test_frattini_examples():
    assert frattini_p(cyclic(4)).order == 2
    for p in (2, 3, 5):
        assert frattini_p(cyclic(p)).order == 1
    assert frattini_p(elementary_abelian(2, 2)).order == 1
    assert frattini_p(cyclic(8)).order == 4
    assert frattini_p(quaternion8()).order == 2


def test_frattini_rejects_non_p_group():
    with pytest.raises(ValueError):
        frattini_p(symmetric(3))


def test_frattini_quotient_elementary_abelian():
    for P in (cyclic(8), quaternion8(), sylow_subgroup(symmetric(4), 2)):
        p = factorize(P.order).parts[0][0]
        phi = frattini_p(P)
        q = coset_action(P, phi)
        assert is_elementary_abelian(q, p) or q.order == 1


def test_first_maximal_subgroup():
    for P in (cyclic(8), quaternion8(), elementary_abelian(2, 3)):
        m = first_maximal_subgroup(P)
        p = factorize(P.order).parts[0][0]
        assert m.order * p == P.order
    with pytest.raises(ValueError):
        first_maximal_subgroup(cyclic(1))


# ---------------------------------------------------------------------------
# derived series / solvability


def test_derived_series_examples():
    s3 = symmetric(3)
    series = derived_series(s3)
    assert [g.order for g in series] == [6, 3, 1]
    assert is_solvable(s3)
    c12 = cyclic(12)
    assert [g.order for g in derived_series(c12)] == [12, 1]
    a5 = alternating(5)
    assert [g.order for g in derived_series(a5)] == [60]
    assert not is_solvable(a5)


def test_solvability_across_catalog():
    for name, G in named_catalog().items():
        assert is_solvable(G) == (name != "A5")


# ---------------------------------------------------------------------------
# quotients


def test_coset_action_realizes_quotient():
    s4 = symmetric(4)
    v4 = p_core(s4, 2)
    q = coset_action(s4, v4)
    assert q.degree == 6 and q.order == 6
    assert not is_abelian(q)  # S4 / V4 is S3


def test_quotient_p_core_check_examples():
    assert quotient_p_core_check(symmetric(4), 2)
    assert quotient_p_core_check(cyclic(8), 2)
    assert quotient_p_core_check(symmetric(3), 3)


@pytest.mark.parametrize("name", sorted(named_catalog()))
def test_quotient_p_core_check_catalog(name):
    G = named_catalog()[name]
    for p, _ in factorize(G.order).parts:
        assert quotient_p_core_check(G, p)


# ---------------------------------------------------------------------------
# structural consequences on the catalog


def test_faithful_sylow_action_on_fitting():
    # for solvable groups with trivial p-core, a Sylow p-subgroup meets the
    # centralizer of the Fitting subgroup trivially
    for name, G in named_catalog().items():
        if not is_solvable(G):
            continue
        for p, _ in factorize(G.order).parts:
            if p_core(G, p).order != 1:
                continue
            f = fitting(G)
            c = centralizer(G, f)
            syl = sylow_subgroup(G, p)
            meet = syl.element_set & c.element_set
            assert meet == {identity_perm(G.degree)}


def is_minimal_normal(G, K):
    # no proper nontrivial subgroup of K normal in G; K's subgroups are
    # found by closing each element, then products (K is tiny here)
    from itertools import combinations

    elems = sorted(K.element_set)
    candidates = set()
    for r in (1, 2):
        for combo in combinations(elems, r):
            sub = frozenset(perms_close(G.degree, list(combo)))
            if 1 < len(sub) < K.order:
                candidates.add(sub)
    for sub in candidates:
        if all({perm_conj(x, g) for x in sub} == set(sub) for g in G.generators):
            return False
    return True


def test_gl_order_divisibility_consequence():
    # catalog groups of order p**s * q**t whose q-Sylow is normal,
    # elementary abelian and minimal normal, with a non-normal p-Sylow and
    # trivial p-core, must have p**s dividing gamma(t, q).  The trivial
    # p-core is a necessary side condition: it makes the conjugation action
    # on the p-Sylows faithful, so G/K embeds into Aut(K).  D6 (= C2 x S3)
    # meets every other hypothesis yet has 2**2 not dividing gamma(1, 3).
    from pcore.arith import gamma

    checked = 0
    for name, G in named_catalog().items():
        fact = factorize(G.order).parts
        if len(fact) != 2:
            continue
        for (p, s), (q, t) in (fact, fact[::-1]):
            syl_q = sylow_subgroup(G, q)
            if p_core(G, q).order != syl_q.order:
                continue  # q-Sylow not normal
            if not is_elementary_abelian(syl_q, q):
                continue
            if not is_minimal_normal(G, syl_q):
                continue
            syl_p = sylow_subgroup(G, p)
            if p_core(G, p).order == syl_p.order:
                continue  # p-Sylow normal
            if p_core(G, p).order != 1:
                continue  # conjugation action on the p-Sylows not faithful
            assert gamma(t, q) % p**s == 0, (name, p, s, q, t)
            checked += 1
    assert checked >= 3  # S3, D5, A4, F20 all qualify


def test_conjugacy_classes_partition():
    for G in (symmetric(4), quaternion8(), alternating(5)):
        classes = conjugacy_classes(G)
        union = set()
        for c in classes:
            assert not (union & c)
            union |= c
        assert union == set(G.element_set)
    assert len(conjugacy_classes(alternating(5))) == 5
