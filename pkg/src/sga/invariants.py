"""Exact invariants of finite simple groups.

Every quantity is an exact integer.  Divisions inside formulas go through
:func:`exact_div`, which refuses to round, so a transcription error in a
formula surfaces as :class:`~sga.errors.FormulaIntegrityError` instead of a
silently wrong value.

Orders of the unitary, orthogonal, exceptional and twisted families use
the standard formulas from the classification literature.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import factorial, gcd, prod

from .errors import FormulaIntegrityError
from .groupid import TITS, Family, GroupKey, canonical_key


def exact_div(num: int, den: int, what: str = "formula") -> int:
    q, r = divmod(num, den)
    if r:
        raise FormulaIntegrityError(f"{what}: {num} is not divisible by {den}")
    return q


@dataclass(frozen=True)
class SporadicRecord:
    name: str
    order: int
    mindeg: int
    out_order: int
    v: int | None


@lru_cache(maxsize=None)
def sporadic_table() -> dict[str, SporadicRecord]:
    text = resources.files("sga").joinpath("data/sporadic.txt").read_text()
    table = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, order, mindeg, out, v = line.strip().split("|")
        table[name] = SporadicRecord(name, int(order), int(mindeg), int(out), None if v == "-" else int(v))
    return table


@dataclass(frozen=True)
class MaxSubgroupWitness:
    structure: str
    index: int
    ordinary: bool
    class_count: int = 1


@dataclass(frozen=True)
class Invariants:
    key: GroupKey
    order: int
    mindeg: int
    out_order: int
    out_recipe: object
    witnesses: tuple[MaxSubgroupWitness, ...]
    min_index_ordinary: bool


# -- orders ------------------------------------------------------------------

def raw_order(key: GroupKey) -> int:
    """|S| from the family formula, without isomorphism normalization."""
    fam = key.family
    if fam is Family.ALTERNATING:
        return factorial(key.n) // 2
    if fam is Family.SPORADIC:
        return sporadic_table()[key.name].order
    q, n = key.qq, key.n
    if fam is Family.LINEAR:
        num = q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(2, n + 1))
        return exact_div(num, gcd(n, q - 1), "order PSL")
    if fam is Family.UNITARY:
        num = q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(2, n + 1))
        return exact_div(num, gcd(n, q + 1), "order PSU")
    if fam is Family.SYMPLECTIC:
        m = n // 2
        num = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        return exact_div(num, gcd(2, q - 1), "order PSp")
    if fam is Family.ORTHOGONAL_ODD:
        m = (n - 1) // 2
        num = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        return exact_div(num, 2, "order O odd")
    if fam in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS):
        m = n // 2
        eps = 1 if fam is Family.ORTHOGONAL_PLUS else -1
        num = q ** (m * (m - 1)) * (q**m - eps) * prod(q ** (2 * i) - 1 for i in range(1, m))
        return exact_div(num, gcd(4, q**m - eps), "order O even")
    if fam is Family.G2:
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if fam is Family.F4:
        return q**24 * (q**12 - 1) * (q**8 - 1) * (q**6 - 1) * (q**2 - 1)
    if fam is Family.E6:
        num = q**36 * prod(q**i - 1 for i in (2, 5, 6, 8, 9, 12))
        return exact_div(num, gcd(3, q - 1), "order E6")
    if fam is Family.E7:
        num = q**63 * prod(q**i - 1 for i in (2, 6, 8, 10, 12, 14, 18))
        return exact_div(num, gcd(2, q - 1), "order E7")
    if fam is Family.E8:
        return q**120 * prod(q**i - 1 for i in (2, 8, 12, 14, 18, 20, 24, 30))
    if fam is Family.TWISTED_B2:
        return q**2 * (q**2 + 1) * (q - 1)
    if fam is Family.TWISTED_G2:
        return q**3 * (q**3 + 1) * (q - 1)
    if fam is Family.TWISTED_D4:
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if fam is Family.TWISTED_E6:
        num = q**36 * (q**12 - 1) * (q**9 + 1) * (q**8 - 1) * (q**6 - 1) * (q**5 + 1) * (q**2 - 1)
        return exact_div(num, gcd(3, q + 1), "order 2E6")
    if fam is Family.TWISTED_F4:
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    raise ValueError(f"no order formula for {key}")


def order(key: GroupKey) -> int:
    return raw_order(canonical_key(key))


# -- minimal-index maximal subgroups ------------------------------------------

W = MaxSubgroupWitness

_SPORADIC_MIN = {
    "M11": "M10", "M12": "M11", "M22": "L3(4)", "M23": "M22", "M24": "M23",
    "J1": "L2(11)", "J2": "U3(3)", "J3": "L2(16):2", "J4": "2^11:M24",
    "Co1": "Co2", "Co2": "U6(2):2", "Co3": "McL:2", "Fi22": "2.U6(2)",
    "Fi23": "2.Fi22", "Fi24'": "Fi23", "HS": "M22", "McL": "U4(3)",
    "He": "S4(4):2", "Ru": "2F4(2)", "Suz": "G2(4)", "O'N": "L3(7):2",
    "HN": "A12", "Ly": "G2(5)", "Th": "3D4(2):3", "B": "2.2E6(2):2",
    "M": "2.B", TITS: "L3(3):2",
}
# classes of least index fused by outer automorphisms
_SPORADIC_FUSED = {"M12": 2, "O'N": 2, TITS: 2}


def _gl_index(n: int, q: int) -> int:
    return exact_div(q**n - 1, q - 1, "points of PG(n-1,q)")


def _minimal_witnesses(key: GroupKey) -> list[MaxSubgroupWitness]:
    """Maximal subgroups of least index, with class counts."""
    fam = key.family
    if fam is Family.SPORADIC:
        rec = sporadic_table()[key.name]
        fused = _SPORADIC_FUSED.get(key.name)
        if fused:
            return [W(_SPORADIC_MIN[key.name], rec.mindeg, False, fused)]
        return [W(_SPORADIC_MIN[key.name], rec.mindeg, True)]
    if fam is Family.ALTERNATING:
        if key.n == 6:
            return [W("Alt(5)", 6, False, 2)]
        return [W(f"Alt({key.n - 1})", key.n, True)]

    q, n, p, f = key.qq, key.n, key.p, key.f
    if fam is Family.LINEAR:
        if n == 2:
            if q == 7:
                return [W("Sym(4)", 7, False, 2)]
            if q == 11:
                return [W("Alt(5)", 11, False, 2)]
            d = gcd(2, q - 1)
            return [W(f"Borel {q}:{(q - 1) // d}", q + 1, True)]
        return [W("P1 parabolic", _gl_index(n, q), False, 2)]
    if fam is Family.UNITARY:
        if (n, q) == (3, 5):
            return [W("Alt(7)", 50, False, 3)]
        if n == 3:
            return [W("P1 parabolic [q^3]:((q^2-1)/d)", q**3 + 1, True)]
        if n == 4:
            return [W("P2 parabolic [q^4].SL2(q^2):((q-1)/d)", (q**3 + 1) * (q + 1), True)]
        if n % 2 == 0 and q == 2:
            return [W(f"SU{n - 1}(2)", exact_div(2 ** (n - 1) * (2**n - 1), 3, "PSU(n,2)"), True)]
        s = (-1) ** n
        idx = exact_div((q**n - s) * (q ** (n - 1) + s), q * q - 1, "PSU mindeg")
        return [W("P1 parabolic [q^(2n-3)]:SU(n-2,q)", idx, True)]
    if fam is Family.SYMPLECTIC:
        if q == 2:
            return [W(f"O{n}-(2)", 2 ** (n // 2 - 1) * (2 ** (n // 2) - 1), True)]
        if n == 4 and p == 2:
            return [W("P1 parabolic E_q^3:GL2(q)", _gl_index(4, q), False, 2)]
        return [W("P1 parabolic [q^(n-1)]:((q-1).PSp(n-2,q))", _gl_index(n, q), True)]
    if fam is Family.ORTHOGONAL_ODD:
        t = (n - 1) // 2
        if q == 3:
            return [W(f"Omega{n - 1}-(3).2", exact_div(3**t * (3**t - 1), 2, "O(n,3)"), True)]
        return [W("P1 parabolic [q^(n-2)].((Omega(n-2,q) x (q-1)/2).2)", _gl_index(n - 1, q), True)]
    if fam is Family.ORTHOGONAL_PLUS:
        t = n // 2
        if q == 2:
            idx = 2 ** (t - 1) * (2**t - 1)
            if t == 4:
                return [W("Sp6(2)", idx, False, 3)]
            return [W(f"Omega{n - 1}(2)", idx, True)]
        if q == 3:
            idx = exact_div(3 ** (t - 1) * (3**t - 1), 2, "O+(n,3)")
            return [W(f"Omega{n - 1}(3).{gcd(t - 1, 2)}", idx, False, 6 if t == 4 else 2)]
        if t == 4:
            idx = exact_div((q**4 - 1) * (q**3 + 1), q - 1, "O8+ mindeg")
            return [W("P1 parabolic q^6.(Omega6+(q) x (q-1)/d).e", idx, False, 3)]
        return [W("P1 parabolic", _orth_even_index(t, q, 1), True)]
    if fam is Family.ORTHOGONAL_MINUS:
        return [W("P1 parabolic", _orth_even_index(n // 2, q, -1), True)]
    if fam is Family.G2:
        if q == 3:
            return [W("U3(3):2", 351, False, 2)]
        if q == 4:
            return [W("J2", 416, True)]
        idx = _gl_index(6, q)
        if p == 3:
            return [W("P1 parabolic", idx, False, 2)]
        return [W("P1 parabolic", idx, True), W("P2 parabolic", idx, True)]
    if fam is Family.F4:
        idx = exact_div((q**12 - 1) * (q**4 + 1), q - 1, "F4 mindeg")
        if p == 2:
            return [W("P1 parabolic (2^f.2^8f x 2^6f):(PSp6(q) x (q-1))", idx, False, 2)]
        return [W("P1 parabolic", idx, True), W("P4 parabolic", idx, True)]
    if fam is Family.E6:
        idx = exact_div((q**9 - 1) * (q**8 + q**4 + 1), q - 1, "E6 mindeg")
        return [W("P1 parabolic p^16f:(e.O10+(q) x (q-1)/e').e", idx, False, 2)]
    if fam is Family.E7:
        idx = exact_div((q**14 - 1) * (q**9 + 1) * (q**5 + 1), q - 1, "E7 mindeg")
        return [W("parabolic p^27f:(d'.(E6(q) x (q-1)/c).d')", idx, True)]
    if fam is Family.E8:
        # degree-30 factor: |E8(q):P8|; a degree-20 factor would not divide |S|
        idx = exact_div((q**30 - 1) * (q**12 + 1) * (q**10 + 1) * (q**6 + 1), q - 1, "E8 mindeg")
        return [W("parabolic (p^f.p^56f):(d.(E7(q) x (q-1)/d).d)", idx, True)]
    if fam is Family.TWISTED_B2:
        return [W("Borel (2^f.2^f):(q-1)", q**2 + 1, True)]
    if fam is Family.TWISTED_G2:
        return [W("Borel (3^f.3^f.3^f):(q-1)", q**3 + 1, True)]
    if fam is Family.TWISTED_D4:
        return [W("parabolic (p^f.p^8f):(d.(PSL2(q^3) x (q-1)/d).d)", (q**8 + q**4 + 1) * (q + 1), True)]
    if fam is Family.TWISTED_E6:
        idx = exact_div((q**12 - 1) * (q**6 - q**3 + 1) * (q**4 + 1), q - 1, "2E6 mindeg")
        return [W("parabolic (p^f.p^20f):(d.PSU6(q) x (q-1)/d').d'", idx, True)]
    if fam is Family.TWISTED_F4:
        return [W("parabolic (2^f.2^4f.2^5f):(2B2(q) x (q-1))", (q**6 + 1) * (q**3 + 1) * (q + 1), True)]
    raise ValueError(f"no minimal-index data for {key}")


def _orth_even_index(t: int, q: int, eps: int) -> int:
    # (q^t - eps)(q^(t-1) + eps)/(q-1): singular points of the quadric
    return exact_div((q**t - eps) * (q ** (t - 1) + eps), q - 1, "orthogonal mindeg")


def mindeg(key: GroupKey) -> int:
    """Least degree of a faithful transitive permutation representation."""
    return min(w.index for w in _minimal_witnesses(canonical_key(key)))


# -- outer automorphisms -------------------------------------------------------

def out_order(key: GroupKey) -> int:
    """|Out S| from the closed-form product d * f * g for each family."""
    key = canonical_key(key)
    fam = key.family
    if fam is Family.SPORADIC:
        return sporadic_table()[key.name].out_order
    if fam is Family.ALTERNATING:
        return 4 if key.n == 6 else 2
    q, n, p, f = key.qq, key.n, key.p, key.f
    if fam is Family.LINEAR:
        if n == 2:
            return gcd(2, q - 1) * f
        return gcd(n, q - 1) * f * 2
    if fam is Family.UNITARY:
        return gcd(n, q + 1) * 2 * f
    if fam is Family.SYMPLECTIC:
        if n == 4 and p == 2:
            return 2 * f
        return gcd(2, q - 1) * f
    if fam is Family.ORTHOGONAL_ODD:
        return 2 * f
    if fam is Family.ORTHOGONAL_PLUS:
        m = n // 2
        if m == 4:
            return gcd(2, q - 1) ** 2 * f * 6
        return gcd(4, q**m - 1) * f * 2
    if fam is Family.ORTHOGONAL_MINUS:
        return gcd(4, q ** (n // 2) + 1) * 2 * f
    if fam is Family.G2:
        return 2 * f if p == 3 else f
    if fam is Family.F4:
        return 2 * f if p == 2 else f
    if fam is Family.E6:
        return gcd(3, q - 1) * f * 2
    if fam is Family.E7:
        return gcd(2, q - 1) * f
    if fam in (Family.E8, Family.TWISTED_B2, Family.TWISTED_G2, Family.TWISTED_F4):
        return f
    if fam is Family.TWISTED_D4:
        return 3 * f
    if fam is Family.TWISTED_E6:
        return gcd(3, q + 1) * 2 * f
    raise ValueError(f"no Out formula for {key}")


def witnesses(key: GroupKey) -> list[MaxSubgroupWitness]:
    """Least-index witnesses, plus the guaranteed-index witness when one exists."""
    from .classification import Label, classify, extra_witnesses, v_witness

    key = canonical_key(key)
    found = list(_minimal_witnesses(key))
    if classify(key) is not Label.NEITHER:
        found.append(v_witness(key))
    found.extend(extra_witnesses(key))
    return found


def invariants(key: GroupKey) -> Invariants:
    from .outgroups import out_recipe

    key = canonical_key(key)
    ws = witnesses(key)
    ell = mindeg(key)
    return Invariants(
        key=key,
        order=order(key),
        mindeg=ell,
        out_order=out_order(key),
        out_recipe=out_recipe(key),
        witnesses=tuple(ws),
        min_index_ordinary=any(w.ordinary and w.index == ell for w in ws),
    )
