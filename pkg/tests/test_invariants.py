from math import factorial

import pytest

from sga.errors import FormulaIntegrityError
from sga.groupid import TITS, Family, lie, linear, normalize, parse_group, sporadic
from sga.invariants import (
    exact_div,
    invariants,
    mindeg,
    order,
    out_order,
    sporadic_table,
    witnesses,
)
from sga.tables import realize
from sga.verify import candidates


def G(text):
    return parse_group(text)


# -- values quoted in the source text -----------------------------------------

@pytest.mark.parametrize("name,ell", [
    ("M12", 12), ("O'N", 122760), ("2F4(2)'", 1600), ("Alt(6)", 6), ("PSL(2,7)", 7),
    ("PSL(2,8)", 9), ("PSL(2,11)", 11), ("PSL(3,3)", 13), ("PSL(3,4)", 21), ("PSU(3,5)", 50),
    ("PSp(4,3)", 27), ("G2(3)", 351), ("G2(4)", 416), ("O+(8,2)", 120), ("O+(8,3)", 1080),
    ("PSL(2,13)", 14),
])
def test_pinned_mindeg(name, ell):
    assert mindeg(G(name)) == ell


def test_order_examples():
    assert order(G("Alt(5)")) == 60
    assert order(G("J3")) == 50_232_960
    assert order(G("PSL(3,4)")) == 20_160 == order(G("Alt(8)"))
    assert order(G("PSL(3,2)")) == 168


def test_twisted_b2():
    assert mindeg(G("2B2(8)")) == 65 == 8**2 + 1
    assert order(G("2B2(8)")) == 29120


@pytest.mark.parametrize("name,out", [("Alt(6)", 4), ("O+(8,3)", 24), ("PSL(3,4)", 12), ("Alt(7)", 2),
                                      ("PSU(3,5)", 6), ("PSp(4,4)", 4), ("PSL(2,8)", 3)])
def test_out_order(name, out):
    assert out_order(G(name)) == out


# -- standard orders, independent of the family formulas ---------------------

@pytest.mark.parametrize("name,size", [
    ("PSU(3,3)", 6048), ("PSU(4,3)", 3265920), ("PSp(6,2)", 1451520), ("O(7,3)", 4585351680),
    ("O+(8,2)", 174182400), ("O-(8,2)", 197406720), ("G2(3)", 4245696), ("G2(4)", 251596800),
    ("3D4(2)", 211341312), ("2F4(8)", 264905352699586176614400), ("2G2(27)", 10073444472),
    ("F4(2)", 3311126603366400), ("2E6(2)", 76532479683774853939200), ("E6(2)", 214841575522005575270400),
    ("PSL(2,16)", 4080), ("PSU(5,2)", 13685760),
])
def test_orders_against_atlas(name, size):
    assert order(G(name)) == size


def test_alternating_order():
    for n in range(5, 30):
        assert order(G(f"Alt({n})")) == factorial(n) // 2


# -- witnesses --------------------------------------------------------------------

def _has(ws, **kw):
    return any(all(getattr(w, k) == v for k, v in kw.items()) for w in ws)


def test_m12_witness():
    assert _has(witnesses(G("M12")), index=144, ordinary=True)


def test_psl53_witness():
    assert _has(witnesses(linear(5, 3)), structure="P1 parabolic", index=121, ordinary=False, class_count=2)


def test_sp62_witness():
    assert _has(witnesses(G("PSp(6,2)")), structure="O6-(2)", index=28, ordinary=True)


def test_witness_properties_over_sweep():
    seen = 0
    for cand in candidates(n_max=10, q_max=32):
        if cand.key is None:
            continue
        inv = invariants(cand.key)
        assert inv.order > inv.mindeg >= 5
        assert any(w.index == inv.mindeg for w in inv.witnesses)
        for w in inv.witnesses:
            assert inv.order % w.index == 0, (cand.label, w)
            assert w.index >= inv.mindeg
        seen += 1
    assert seen > 500


def test_min_index_ordinary_flag():
    assert invariants(G("Alt(7)")).min_index_ordinary
    assert not invariants(G("M12")).min_index_ordinary
    assert not invariants(linear(3, 8)).min_index_ordinary


# -- sporadic data: l(S) = |S:H| for the subgroup of least index -------------------

def _o(text):
    return order(G(text))


SPORADIC_MIN_SUBGROUP_ORDER = {
    "M11": 720, "M12": lambda: _o("M11"), "M22": lambda: _o("PSL(3,4)"), "M23": lambda: _o("M22"),
    "M24": lambda: _o("M23"), "J1": lambda: _o("PSL(2,11)"), "J2": lambda: _o("PSU(3,3)"),
    "J3": lambda: 2 * _o("PSL(2,16)"), "J4": lambda: 2**11 * _o("M24"), "Co1": lambda: _o("Co2"),
    "Co2": lambda: 2 * _o("PSU(6,2)"), "Co3": lambda: 2 * _o("McL"), "Fi22": lambda: 2 * _o("PSU(6,2)"),
    "Fi23": lambda: 2 * _o("Fi22"), "Fi24'": lambda: _o("Fi23"), "HS": lambda: _o("M22"),
    "McL": lambda: _o("PSU(4,3)"), "He": lambda: 2 * _o("PSp(4,4)"), "Ru": lambda: 2 * _o(TITS),
    "Suz": lambda: _o("G2(4)"), "O'N": lambda: 2 * _o("PSL(3,7)"), "HN": lambda: _o("Alt(12)"),
    "Ly": lambda: _o("G2(5)"), "Th": lambda: 3 * _o("3D4(2)"), "B": lambda: 2 * _o("2E6(2)") * 2,
    "M": lambda: 2 * _o("B"), TITS: lambda: 2 * _o("PSL(3,3)"),
}


@pytest.mark.parametrize("name", sorted(SPORADIC_MIN_SUBGROUP_ORDER))
def test_sporadic_mindeg_is_an_index(name):
    h = SPORADIC_MIN_SUBGROUP_ORDER[name]
    h = h() if callable(h) else h
    assert exact_div(order(sporadic(name)), h) == mindeg(sporadic(name))


def test_sporadic_table_complete():
    table = sporadic_table()
    assert len(table) == 27
    assert {n for n, r in table.items() if r.v is not None} == {"M12", "O'N", TITS}
    assert sum(1 for r in table.values() if r.out_order == 2) == 13


# -- formula discrepancies -------------------------------------------------------------

def test_even_q_orthogonal_printed_exponent_breaks_lagrange():
    q, t = 2, 4
    printed = (q**t - 1) * (q ** (t + 1) + 1) // (q - 1)
    assert order(G("O+(8,2)")) % printed != 0
    assert mindeg(G("O+(10,4)")) == (4**5 - 1) * (4**4 + 1) // 3


def test_twisted_f4_parabolic_exceeds_mindeg():
    for q in (8, 32, 128):
        parabolic = q**12 * (q**2 + 1) * (q - 1) ** 2
        assert parabolic > mindeg(lie(Family.TWISTED_F4, q))
        assert order(lie(Family.TWISTED_F4, q)) // parabolic == mindeg(lie(Family.TWISTED_F4, q))


def test_exact_div_guards():
    assert exact_div(12, 4) == 3
    with pytest.raises(FormulaIntegrityError):
        exact_div(13, 4)


# -- consistency --------------------------------------------------------------------------

def test_alias_invariants_match():
    for alias in ["PSL(2,9)", "PSL(4,2)", "PSL(2,4)", "PSL(2,5)", "PSL(3,2)", "PSp(4,3)"]:
        a = invariants(G(alias))
        b = invariants(normalize(G(alias)).key)
        assert a == b


def test_out_order_matches_realized_recipe():
    checked = 0
    for cand in candidates(n_max=12, q_max=128):
        if cand.key is None:
            continue
        inv = invariants(cand.key)
        if inv.out_order <= 500:
            assert realize(inv.out_recipe).n == inv.out_order, cand.label
            checked += 1
    assert checked > 1000


def test_mindeg_squared_below_order_small_range():
    for cand in candidates(n_max=8, q_max=16):
        if cand.key is not None:
            assert mindeg(cand.key) ** 2 < order(cand.key)


def test_e8_mindeg_uses_degree_30_factor():
    q = 2
    key = lie(Family.E8, q)
    assert mindeg(key) == (q**30 - 1) * (q**12 + 1) * (q**10 + 1) * (q**6 + 1) // (q - 1)
    printed = (q**20 - 1) * (q**12 + 1) * (q**10 + 1) * (q**6 + 1) // (q - 1)
    assert order(key) % printed != 0
    assert order(key) % mindeg(key) == 0
