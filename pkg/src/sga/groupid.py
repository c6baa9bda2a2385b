"""Identifiers for finite simple groups.

A :class:`GroupKey` names a group by family plus integer parameters.  Keys are
validated against the simplicity constraints of each family at construction,
and :func:`normalize` folds the finitely many exceptional isomorphisms onto
one representative so that downstream computations see a single name per
group.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import isqrt

from .errors import GroupSyntaxError, NotPrimePower, NotSimple


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _smallest_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return d
    return n


@dataclass(frozen=True, order=True)
class PrimePower:
    """A prime power ``q = p**f``."""

    p: int
    f: int
    q: int = field(init=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrimePower(f"{self.p} is not prime")
        if self.f < 1:
            raise NotPrimePower(f"exponent must be >= 1, got {self.f}")
        object.__setattr__(self, "q", self.p**self.f)

    def __int__(self) -> int:
        return self.q

    def __str__(self) -> str:
        return str(self.q)


def factor_prime_power(q: int) -> PrimePower:
    """Write ``q`` as ``p**f`` by trial division, or raise :class:`NotPrimePower`."""
    q = int(q)
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = _smallest_factor(q)
    m, f = q, 0
    while m % p == 0:
        m //= p
        f += 1
    if m != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return PrimePower(p, f)


class Family(enum.Enum):
    ALTERNATING = "Alt"
    SPORADIC = "Sporadic"
    LINEAR = "PSL"
    UNITARY = "PSU"
    SYMPLECTIC = "PSp"
    ORTHOGONAL_ODD = "O"
    ORTHOGONAL_PLUS = "O+"
    ORTHOGONAL_MINUS = "O-"
    G2 = "G2"
    F4 = "F4"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    TWISTED_B2 = "2B2"
    TWISTED_G2 = "2G2"
    TWISTED_D4 = "3D4"
    TWISTED_E6 = "2E6"
    TWISTED_F4 = "2F4"

    @property
    def has_rank(self) -> bool:
        return self in _RANKED

    @property
    def has_field(self) -> bool:
        return self not in (Family.ALTERNATING, Family.SPORADIC)


_RANKED = frozenset({
    Family.LINEAR, Family.UNITARY, Family.SYMPLECTIC,
    Family.ORTHOGONAL_ODD, Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS,
})
_FAMILY_RANK = {fam: i for i, fam in enumerate(Family)}

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL", "He",
    "Ru", "Suz", "O'N", "HN", "Ly", "Th", "B", "M", "2F4(2)'",
)
TITS = "2F4(2)'"
_SPORADIC_LOOKUP = {name.lower(): name for name in SPORADIC_NAMES}


@dataclass(frozen=True)
class GroupKey:
    """Family tag plus parameters; validated on construction."""

    family: Family
    n: int | None = None
    q: PrimePower | None = None
    name: str | None = None

    def __post_init__(self):
        _validate(self)

    @property
    def p(self) -> int:
        return self.q.p

    @property
    def f(self) -> int:
        return self.q.f

    @property
    def qq(self) -> int:
        """The field size as a plain integer."""
        return self.q.q

    def sort_key(self) -> tuple:
        return (
            _FAMILY_RANK[self.family],
            SPORADIC_NAMES.index(self.name) if self.name else 0,
            self.n or 0,
            self.q.q if self.q else 0,
        )

    def __lt__(self, other: "GroupKey") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return render(self)


def _require(cond: bool, constraint: str) -> None:
    if not cond:
        raise NotSimple(constraint)


def _validate(key: GroupKey) -> None:
    fam, n, q = key.family, key.n, key.q
    if fam is Family.SPORADIC:
        if key.name not in SPORADIC_NAMES:
            raise GroupSyntaxError(f"unknown sporadic group {key.name!r}")
        return
    if fam is Family.ALTERNATING:
        _require(isinstance(n, int) and n >= 5, "Alt(n) requires n >= 5")
        return
    if not isinstance(q, PrimePower):
        raise GroupSyntaxError(f"{fam.value} needs a PrimePower field size")
    if fam.has_rank and not isinstance(n, int):
        raise GroupSyntaxError(f"{fam.value} needs an integer dimension")
    qq = q.q
    if fam is Family.LINEAR:
        _require(n >= 2, "PSL(n,q) requires n >= 2")
        _require((n, qq) not in ((2, 2), (2, 3)), "PSL(2,2) and PSL(2,3) are solvable")
    elif fam is Family.UNITARY:
        _require(n >= 3, "PSU(n,q) requires n >= 3")
        _require((n, qq) != (3, 2), "PSU(3,2) is solvable")
    elif fam is Family.SYMPLECTIC:
        _require(n >= 4 and n % 2 == 0, "PSp(n,q) requires even n >= 4")
        _require((n, qq) != (4, 2), "PSp(4,2) is not simple")
    elif fam is Family.ORTHOGONAL_ODD:
        _require(n >= 7 and n % 2 == 1, "O(n,q) requires odd n >= 7")
        _require(q.p != 2, "O(n,q) with n odd requires q odd")
    elif fam in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS):
        _require(n >= 8 and n % 2 == 0, f"{fam.value}(n,q) requires even n >= 8")
    elif fam is Family.G2:
        _require(qq >= 3, "G2(q) requires q >= 3")
    elif fam is Family.TWISTED_B2:
        _require(q.p == 2 and q.f % 2 == 1 and q.f >= 3, "2B2(q) requires q = 2^f, f odd >= 3")
    elif fam is Family.TWISTED_G2:
        _require(q.p == 3 and q.f % 2 == 1 and q.f >= 3, "2G2(q) requires q = 3^f, f odd >= 3")
    elif fam is Family.TWISTED_F4:
        _require(q.p == 2 and q.f % 2 == 1 and q.f >= 3, "2F4(q) requires q = 2^f, f odd >= 3")


def alternating(n: int) -> GroupKey:
    return GroupKey(Family.ALTERNATING, n=n)


def sporadic(name: str) -> GroupKey:
    canon = _SPORADIC_LOOKUP.get(name.lower())
    if canon is None:
        raise GroupSyntaxError(f"unknown sporadic group {name!r}")
    return GroupKey(Family.SPORADIC, name=canon)


def lie(family: Family | str, *params: int) -> GroupKey:
    """Build a Lie-type key: ``lie("PSL", 3, 4)`` or ``lie(Family.G2, 5)``."""
    fam = family if isinstance(family, Family) else Family(family)
    if fam.has_rank:
        n, q = params
        return GroupKey(fam, n=n, q=factor_prime_power(q))
    (q,) = params
    return GroupKey(fam, q=factor_prime_power(q))


def linear(n: int, q: int) -> GroupKey:
    return lie(Family.LINEAR, n, q)


def unitary(n: int, q: int) -> GroupKey:
    return lie(Family.UNITARY, n, q)


def symplectic(n: int, q: int) -> GroupKey:
    return lie(Family.SYMPLECTIC, n, q)


_NAME_RANKED = re.compile(r"^(psl|psu|psp|o|o\+|o-)\((\d+),(\d+)\)$")
_NAME_EXCEPTIONAL = re.compile(r"^(g2|f4|e6|e7|e8|2b2|2g2|3d4|2e6|2f4)\((\d+)\)$")
_NAME_ALT = re.compile(r"^alt\((\d+)\)$")
_RANKED_TAGS = {"psl": "PSL", "psu": "PSU", "psp": "PSp", "o": "O", "o+": "O+", "o-": "O-"}


def parse_group(text: str) -> GroupKey:
    """Parse a group name such as ``PSL(3,4)``, ``2F4(8)`` or ``O'N``."""
    compact = re.sub(r"\s+", "", text).lower()
    if compact in _SPORADIC_LOOKUP:
        return GroupKey(Family.SPORADIC, name=_SPORADIC_LOOKUP[compact])
    if m := _NAME_ALT.match(compact):
        return alternating(int(m.group(1)))
    if m := _NAME_RANKED.match(compact):
        return lie(_RANKED_TAGS[m.group(1)], int(m.group(2)), int(m.group(3)))
    if m := _NAME_EXCEPTIONAL.match(compact):
        return lie(m.group(1).upper(), int(m.group(2)))
    raise GroupSyntaxError(f"cannot parse group name {text!r}")


def render(key: GroupKey) -> str:
    """Canonical text form; ``parse_group(render(k)) == k``."""
    fam = key.family
    if fam is Family.SPORADIC:
        return key.name
    if fam is Family.ALTERNATING:
        return f"Alt({key.n})"
    if fam.has_rank:
        return f"{fam.value}({key.n},{key.q.q})"
    return f"{fam.value}({key.q.q})"


@dataclass(frozen=True)
class CanonicalGroup:
    key: GroupKey
    aliases: tuple[GroupKey, ...]


@lru_cache(maxsize=None)
def isomorphism_table() -> dict[GroupKey, GroupKey]:
    """Alias -> representative, read from ``data/isomorphisms.txt``."""
    table = {}
    text = resources.files("sga").joinpath("data/isomorphisms.txt").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        alias, canon = line.split("|")
        table[parse_group(alias)] = parse_group(canon)
    return table


@lru_cache(maxsize=None)
def _alias_index() -> dict[GroupKey, tuple[GroupKey, ...]]:
    index: dict[GroupKey, list[GroupKey]] = {}
    for alias, canon in isomorphism_table().items():
        index.setdefault(canon, [canon]).append(alias)
    return {k: tuple(sorted(v)) for k, v in index.items()}


def canonical_key(key: GroupKey) -> GroupKey:
    return isomorphism_table().get(key, key)


def normalize(key: GroupKey) -> CanonicalGroup:
    canon = canonical_key(key)
    return CanonicalGroup(canon, _alias_index().get(canon, (canon,)))
