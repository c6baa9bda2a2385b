"""Membership in the classes X and Y, the guaranteed index v_S, and the
per-group summary of which core-free maximal indices are guaranteed.

The classes:

* X: PSL(3,q) with q > 3 and f odd; PSL(n,q) with n = 5 or n >= 7;
  PSp(4,2^f) with f >= 2.
* Y: M12, O'N, 2F4(2)', PSL(2,7), Alt(6), PSL(2,11), PSL(3,3), PSL(3,q0^2),
  PSL(4,q>2), PSL(6,q), PSU(3,5), O+(8,q), O+(n,3) with n >= 10, G2(3^f),
  F4(2^f), E6(q).

Y is tested first, so PSL(3,q) with q a square lands in Y.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt

from .errors import NotApplicable
from .groupid import TITS, Family, GroupKey, canonical_key
from .invariants import MaxSubgroupWitness, exact_div, mindeg, order, sporadic_table

W = MaxSubgroupWitness


class Label(enum.Enum):
    X = "X"
    Y = "Y"
    NEITHER = "Neither"

    def __str__(self) -> str:
        return self.value


ClassLabel = Label


def _in_y(key: GroupKey) -> bool:
    fam = key.family
    if fam is Family.SPORADIC:
        return key.name in ("M12", "O'N", TITS)
    if fam is Family.ALTERNATING:
        return key.n == 6
    if fam is Family.LINEAR:
        n, q = key.n, key.qq
        if n == 2:
            return q in (7, 11)
        if n == 3:
            return q == 3 or key.f % 2 == 0
        if n == 4:
            return q > 2
        return n == 6
    if fam is Family.UNITARY:
        return (key.n, key.qq) == (3, 5)
    if fam is Family.ORTHOGONAL_PLUS:
        return key.n == 8 or key.qq == 3
    if fam is Family.G2:
        return key.p == 3
    if fam is Family.F4:
        return key.p == 2
    return fam is Family.E6


def _in_x(key: GroupKey) -> bool:
    if key.family is Family.LINEAR:
        n = key.n
        if n == 3:
            return key.qq > 3 and key.f % 2 == 1
        return n == 5 or n >= 7
    return key.family is Family.SYMPLECTIC and key.n == 4 and key.p == 2 and key.f >= 2


def classify(key: GroupKey) -> Label:
    key = canonical_key(key)
    if _in_y(key):
        return Label.Y
    if _in_x(key):
        return Label.X
    return Label.NEITHER


# Small members of Y whose v comes from fixed data rather than a family formula.
_SMALL_V = {
    "Alt(6)": ("3^2:4", 10, True),
    "PSL(2,7)": ("Borel 7:3", 8, True),
    "PSL(2,11)": ("Borel 11:5", 12, True),
    "PSL(3,3)": ("13:3", 144, True),
    "PSL(3,4)": ("3^2:Q8", 280, True),
    "PSU(3,5)": ("5^(1+2):8", 126, True),
    "G2(3)": ("PSL(2,8):3", 2808, True),
    "O+(8,2)": ("P2 parabolic", 1575, True),
    "O+(8,3)": ("P2 parabolic", 36400, True),
}


def v_witness(key: GroupKey) -> MaxSubgroupWitness:
    """The maximal subgroup of guaranteed index v_S for a member of X or Y."""
    key = canonical_key(key)
    label = classify(key)
    if label is Label.NEITHER:
        raise NotApplicable(f"{key} lies in neither X nor Y; v_S is undefined")
    fam = key.family
    if fam is Family.SPORADIC:
        structure = {"M12": "L2(11)", "O'N": "7^(1+2):(3 x D8)", TITS: "2^2.[2^8]:S3"}[key.name]
        return W(structure, sporadic_table()[key.name].v, True)
    small = _SMALL_V.get(str(key))
    if small is not None:
        return W(*small)

    q, n, p, f = key.qq, key.n, key.p, key.f
    if fam is Family.LINEAR:
        if n == 3 and f % 2 == 0:
            q0 = isqrt(q)
            if gcd(3, q0 + 1) == 1:
                return W("PSU(3,q0) subfield", q0**3 * (q0**3 + 1) * (q0**2 + 1), True)
            return W("PGL(3,q0) subfield", q0**3 * (q0**3 - 1) * (q0**2 + 1), True)
        if n == 4:
            idx = exact_div((q**2 + 1) * (q**3 - 1), q - 1, "v PSL4")
            return W("P2 parabolic (stabiliser of a 2-space)", idx, True)
        if n == 6:
            idx = exact_div((q**5 - 1) * (q**4 - 1) * (q**3 + 1), (q - 1) ** 2 * (q + 1), "v PSL6")
            return W("P3 parabolic (stabiliser of a 3-space)", idx, True)
        idx = exact_div((q**n - 1) * (q ** (n - 1) - 1), (q - 1) ** 2, "v PSLn")
        return W("P(1,n-1) stabiliser of a point-hyperplane flag or antiflag", idx, False)
    if fam is Family.SYMPLECTIC:
        idx = exact_div((q**4 - 1) * (q + 1), q - 1, "v PSp4")
        return W("novelty [q^4]:(C_(q-1))^2 (Borel)", idx, False)
    if fam is Family.ORTHOGONAL_PLUS:
        if n == 8:
            idx = (q + 1) * (q**2 - q + 1) * (q**2 + 1) ** 2 * (q**2 + q + 1)
            return W("P2 parabolic", idx, True)
        t = n // 2
        idx = exact_div((3**t - 1) * (3 ** (t - 1) + 1), 2, "v O+(n,3)")
        return W("stabiliser of a nonsingular point of the other type", idx, True)
    if fam is Family.G2:
        return W("P1 parabolic", q**4 * (q**4 + q**2 + 1), True)
    if fam is Family.F4:
        if f % 2 == 1:
            idx = q**12 * (q**6 - 1) * (q**4 + 1) * (q**3 - 1) * (q + 1)
            return W("2F4(q)", idx, True)
        q0 = isqrt(q)
        idx = q0**24 * (q0**12 + 1) * (q0**8 + 1) * (q0**6 + 1) * (q0**2 + 1)
        return W("F4(q0) subfield", idx, True)
    if fam is Family.E6:
        idx = exact_div((q**12 - 1) * (q**4 + 1) * (q**9 - 1), (q**3 - 1) * (q - 1), "v E6")
        return W("P2 parabolic", idx, True)
    raise AssertionError(f"no v formula for {key}")  # pragma: no cover


def v_index(key: GroupKey) -> int:
    return v_witness(key).index


def extra_witnesses(key: GroupKey) -> list[MaxSubgroupWitness]:
    """Further subgroups quoted with explicit indices (informational only)."""
    key = canonical_key(key)
    fam = key.family
    out = []
    if fam is Family.F4 and key.p == 2:
        q = key.qq
        idx = q**18 * (q + 1) ** 2 * (q**2 - q + 1) ** 2 * (q**2 + 1) ** 2 * (q**4 - q**2 + 1) * (q**4 + 1)
        if order(key) % idx == 0:
            out.append(W("(SL3(q) o SL3(q)) type", idx, False))
    return out


@dataclass(frozen=True)
class TheoremAReport:
    key: GroupKey
    label: Label
    mindeg: int
    v_index: int | None
    clause: int
    guaranteed_indices: str

    def as_dict(self) -> dict:
        return {
            "key": str(self.key),
            "label": str(self.label),
            "mindeg": self.mindeg,
            "v": self.v_index,
            "clause": self.clause,
            "guaranteed": self.guaranteed_indices,
        }


def theorem_a_report(key: GroupKey) -> TheoremAReport:
    key = canonical_key(key)
    label = classify(key)
    ell = mindeg(key)
    if label is Label.NEITHER:
        return TheoremAReport(key, label, ell, None, 1,
                              f"every almost simple R with socle S has a core-free maximal subgroup of index {ell}")
    v = v_index(key)
    if label is Label.Y:
        return TheoremAReport(key, label, ell, v, 2,
                              f"every almost simple R has a core-free maximal subgroup of index {v}; "
                              f"R = S also has index {ell}")
    return TheoremAReport(key, label, ell, v, 3,
                          f"each almost simple R has two classes of core-free maximal subgroups of index {ell} "
                          f"(when R/S lies in the diagonal-field part of Out S) or one class of index {v}")
