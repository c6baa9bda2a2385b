import itertools

import numpy as np
import pytest

from sga.errors import InvalidAction, OrderCapExceeded
from sga.groupid import parse_group
from sga.outgroups import out_recipe, recipe_subgroup_count, theorem_b_check
from sga.tables import (
    Cyclic,
    Dihedral,
    DirectProduct,
    FiniteGroupTable,
    GraphExtension,
    Metacyclic,
    Symmetric,
    Trivial,
    count_subgroups,
    cyclic_subgroups,
    enumerate_subgroups,
    generated_subgroup,
    is_isomorphic,
    realize,
)


def G(text):
    return parse_group(text)


def n_divisors(m):
    return sum(1 for d in range(1, m + 1) if m % d == 0)


# -- recipes for specific groups ---------------------------------------------

def test_recipe_examples():
    assert out_recipe(G("Alt(6)")) == DirectProduct(Cyclic(2), Cyclic(2))
    assert out_recipe(G("O+(8,5)")) == DirectProduct(Symmetric(4), Cyclic(1))
    assert out_recipe(G("PSU(3,5)")) == Symmetric(3)
    assert out_recipe(G("O+(8,4)")) == DirectProduct(Symmetric(3), Cyclic(2))
    assert out_recipe(G("O+(12,5)")) == DirectProduct(Dihedral(8), Cyclic(1))
    assert out_recipe(G("O+(12,4)")) == DirectProduct(Cyclic(2), Cyclic(2))


def test_psl3_presentation():
    # <x, y, z | x^3 = y^f = z^2 = 1, x^y = x^p, x^z = x^-1, [y, z] = 1>
    recipe = out_recipe(G("PSL(3,16)"))
    assert recipe == GraphExtension(Metacyclic(3, 4, 2), (-1, 1))
    g = realize(recipe)
    orders = g.element_orders()
    # x = index 1*f = 4, y = index 1, z = index |base| = 12
    x, y, z = 4, 1, 12
    assert (orders[x], orders[y], orders[z]) == (3, 4, 2)
    m, inv = g.mul, g.inverse
    assert m[m[inv[y], x], y] == m[x, x]          # y^-1 x y = x^2 (p = 2)
    assert m[m[inv[z], x], z] == inv[x]           # z inverts x
    assert m[y, z] == m[z, y]                     # z commutes with y
    assert generated_subgroup(g, [x, y, z]).all()


def test_inverting_both_generators_rejected_when_not_an_automorphism():
    # inverting the field generator too is not an automorphism for d=7, p=2
    with pytest.raises(InvalidAction):
        realize(GraphExtension(Metacyclic(7, 3, 2), (-1, -1)))
    # ... while it is one when p^2 = 1 mod d
    assert realize(GraphExtension(Metacyclic(3, 2, 2), (-1, -1))).n == 12


# -- realization ----------------------------------------------------------------

RECIPES = [
    Trivial(), Cyclic(1), Cyclic(6), Dihedral(8), Symmetric(3), Symmetric(4), Metacyclic(3, 2, 2),
    Metacyclic(7, 3, 2), DirectProduct(Cyclic(2), Cyclic(2)), DirectProduct(Dihedral(8), Cyclic(3)),
    GraphExtension(Cyclic(5), (-1,)), GraphExtension(Metacyclic(4, 2, 3), (-1, 1)),
    GraphExtension(Metacyclic(1, 5, 0), (-1, 1)),
]


@pytest.mark.parametrize("recipe", RECIPES, ids=str)
def test_realize_axioms(recipe):
    g = realize(recipe)
    assert g.n == recipe.order
    assert g.check_axioms() and g.is_latin()


def test_cyclic6():
    g = realize(Cyclic(6))
    x = 1
    p = g.identity
    for _ in range(6):
        p = g.mul[p, x]
    assert p == g.identity and g.element_orders()[x] == 6


def test_symmetric3_has_two_elements_of_order_3():
    assert int((realize(Symmetric(3)).element_orders() == 3).sum()) == 2


def test_metacyclic_is_s3():
    assert is_isomorphic(realize(Metacyclic(3, 2, 2)), realize(Symmetric(3)))
    assert not is_isomorphic(realize(Cyclic(6)), realize(Symmetric(3)))
    assert is_isomorphic(realize(DirectProduct(Cyclic(2), Cyclic(3))), realize(Cyclic(6)))
    assert is_isomorphic(realize(GraphExtension(Cyclic(4), (-1,))), realize(Dihedral(8)))


def test_realize_errors():
    with pytest.raises(InvalidAction):
        realize(Metacyclic(6, 2, 3))  # 3 is not a unit mod 6
    with pytest.raises(InvalidAction):
        realize(Metacyclic(7, 2, 2))  # 2 has order 3 mod 7, not dividing 2
    with pytest.raises(InvalidAction):
        realize(Dihedral(7))
    with pytest.raises(OrderCapExceeded):
        realize(Cyclic(20_001))
    with pytest.raises(OrderCapExceeded):
        realize(Cyclic(50), cap=10)


def test_from_mul_rejects_non_groups():
    with pytest.raises(InvalidAction):
        FiniteGroupTable.from_mul(np.zeros((3, 3), dtype=np.int64))


def test_non_associative_table_detected():
    mul = np.array([[0, 1, 2], [1, 0, 0], [2, 0, 0]])  # identity 0 but not a group
    t = FiniteGroupTable(mul, 0, np.array([0, 1, 2]))
    assert not t.check_axioms()


# -- subgroup counts -----------------------------------------------------------------

def test_divisor_law():
    for m in range(1, 201):
        assert count_subgroups(realize(Cyclic(m))) == n_divisors(m), m


@pytest.mark.parametrize("recipe,count", [
    (DirectProduct(Cyclic(2), Cyclic(2)), 5), (Symmetric(3), 6), (Symmetric(4), 30),
    (Dihedral(8), 10), (Metacyclic(3, 2, 2), 6), (DirectProduct(Cyclic(2), DirectProduct(Cyclic(2), Cyclic(2))), 16),
    (Metacyclic(7, 3, 2), 10),
])
def test_known_counts(recipe, count):
    assert count_subgroups(realize(recipe)) == count


def test_count_is_an_isomorphism_invariant():
    assert count_subgroups(realize(Metacyclic(3, 2, 2))) == count_subgroups(realize(Symmetric(3)))


def test_enumeration_matches_brute_force_on_small_groups():
    # every subset closed under the product is a subgroup; compare with a direct search
    for recipe in (Symmetric(3), Dihedral(8), DirectProduct(Cyclic(2), Cyclic(4))):
        g = realize(recipe)
        found = {frozenset(np.flatnonzero(s.mask)) for s in enumerate_subgroups(g)}
        brute = set()
        for r in range(g.n + 1):
            for subset in itertools.combinations(range(g.n), r):
                s = set(subset)
                if g.identity in s and all(g.mul[a, b] in s for a in s for b in s):
                    brute.add(frozenset(s))
        assert found == brute


def test_enumeration_cap():
    with pytest.raises(OrderCapExceeded):
        enumerate_subgroups(realize(Cyclic(30)), cap=20)


@pytest.mark.parametrize("recipe", [
    Symmetric(4), DirectProduct(Dihedral(8), Cyclic(2)), GraphExtension(Metacyclic(3, 4, 2), (-1, 1)),
    DirectProduct(Symmetric(3), Cyclic(2)), GraphExtension(Metacyclic(4, 2, 3), (-1, 1)),
], ids=str)
def test_every_subgroup_is_three_generated(recipe):
    g = realize(recipe)
    cyc = {tuple(np.flatnonzero(c.mask)): c.generators[0] for c in cyclic_subgroups(g)}
    for sub in enumerate_subgroups(g):
        reps = [x for elems, x in cyc.items() if sub.mask[list(elems)].all()]
        ok = any(
            generated_subgroup(g, combo).sum() == sub.order
            for r in range(0, 4)
            for combo in itertools.combinations(reps, r)
        )
        assert ok, (recipe, sub.order)


# -- the subgroup-count bound ---------------------------------------------------------

@pytest.mark.parametrize("name,count", [("PSU(3,5)", 6), ("Alt(6)", 5), ("Alt(5)", 2)])
def test_theorem_b_examples(name, count):
    res = theorem_b_check(G(name))
    assert res.passed and res.subgroup_count == count
    assert res.comparison.lo ** 3 <= res.comparison.hi ** 3


def test_theorem_b_evidence_o8p3():
    res = theorem_b_check(G("O+(8,3)"))
    assert res.out_order == 24 and res.subgroup_count == 30 and res.mindeg == 1080 and res.passed


def test_count_cache():
    a = recipe_subgroup_count(Symmetric(4))
    b = recipe_subgroup_count(Symmetric(4))
    assert a == b == 30
