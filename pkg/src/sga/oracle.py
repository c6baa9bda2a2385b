"""Brute-force oracle for minimal degrees of tiny simple groups.

A group is given by permutation generators.  Its elements are materialized by
breadth-first closure, its Cayley table is built by vectorized composition,
and the least index of a proper subgroup is read off the complete subgroup
list produced by :func:`sga.tables.enumerate_subgroups`.  For a simple group
every proper subgroup is core-free, so this index is the minimal degree.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .errors import GroupSyntaxError, InvalidAction, OrderCapExceeded
from .groupid import GroupKey, parse_group
from .tables import FiniteGroupTable, enumerate_subgroups

MAX_DEGREE = 16
ELEMENT_CAP = 1_000


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidAction(f"{self.images} is not a permutation")
        if len(self.images) > MAX_DEGREE:
            raise InvalidAction(f"degree {len(self.images)} exceeds {MAX_DEGREE}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation on points ``0..degree-1``, e.g. ``(0 1 2)(3 4)``."""
        images = list(range(degree))
        compact = text.strip()
        if compact in ("", "()"):
            return cls(tuple(images))
        if re.sub(r"\([\d\s,]*\)", "", compact).strip():
            raise GroupSyntaxError(f"bad cycle notation {text!r}")
        for cyc in re.findall(r"\(([^)]*)\)", compact):
            pts = [int(t) for t in re.split(r"[\s,]+", cyc.strip()) if t]
            if any(x >= degree for x in pts) or len(set(pts)) != len(pts):
                raise GroupSyntaxError(f"bad cycle {cyc!r} for degree {degree}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))


@dataclass
class PermGroup:
    generators: list[Permutation]
    elements: np.ndarray  # shape (order, degree), row 0 is the identity
    degree: int
    _table: FiniteGroupTable | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return self.elements.shape[0]

    def cayley_table(self) -> FiniteGroupTable:
        """``table[i, j]`` is "apply element i, then element j"."""
        if self._table is None:
            self._table = FiniteGroupTable.from_mul(_cayley(self.elements, self.degree))
        return self._table


def _codes(perms: np.ndarray, degree: int) -> np.ndarray:
    weights = np.array([degree**i for i in range(degree)], dtype=np.uint64)
    return (perms.astype(np.uint64) * weights).sum(axis=-1, dtype=np.uint64)


def _cayley(elements: np.ndarray, degree: int) -> np.ndarray:
    codes = _codes(elements, degree)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    n = elements.shape[0]
    mul = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        # (apply i then j)(x) = j[i[x]]
        prods = elements[:, elements[i]]
        pos = np.searchsorted(sorted_codes, _codes(prods, degree))
        mul[i] = order[pos]
    return mul


def generate_elements(gens: list[Permutation], cap: int = ELEMENT_CAP, degree: int | None = None) -> PermGroup:
    if degree is None:
        degree = gens[0].degree if gens else 1
    if any(g.degree != degree for g in gens):
        raise InvalidAction("generators act on different degrees")
    identity = tuple(range(degree))
    seen = {identity}
    elements = [identity]
    gen_imgs = [g.images for g in gens]
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gen_imgs:
            y = tuple(g[x[i]] for i in range(degree))
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise OrderCapExceeded(f"group order exceeds cap {cap}")
    return PermGroup(list(gens), np.array(elements, dtype=np.int64), degree)


def min_corefree_index(g: PermGroup) -> int:
    """Least ``|G:H|`` over proper subgroups ``H`` (``G`` assumed simple)."""
    if g.order > ELEMENT_CAP:
        raise OrderCapExceeded(f"group order {g.order} exceeds cap {ELEMENT_CAP}")
    if g.order == 1:
        raise InvalidAction("the trivial group has no proper subgroups")
    subs = enumerate_subgroups(g.cayley_table(), cap=ELEMENT_CAP)
    return min(g.order // s.order for s in subs if s.order < g.order)


min_coreree_index = min_corefree_index


def subgroup_orders(g: PermGroup) -> list[int]:
    return sorted(s.order for s in enumerate_subgroups(g.cayley_table(), cap=ELEMENT_CAP))


@dataclass(frozen=True)
class OracleFixture:
    name: str
    degree: int
    generators: tuple[Permutation, ...]

    @property
    def key(self) -> GroupKey:
        return parse_group(self.name)

    def group(self) -> PermGroup:
        return generate_elements(list(self.generators), degree=self.degree)


@lru_cache(maxsize=None)
def oracle_fixtures() -> dict[str, OracleFixture]:
    text = resources.files("sga").joinpath("data/oracle_groups.txt").read_text()
    out = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, degree, *gens = line.strip().split("|")
        deg = int(degree)
        out[name] = OracleFixture(name, deg, tuple(Permutation.from_cycles(c, deg) for c in gens))
    return out


def oracle_fixture(name: str) -> OracleFixture:
    fixtures = oracle_fixtures()
    for fname, fx in fixtures.items():
        if fname.lower() == name.replace(" ", "").lower():
            return fx
    raise GroupSyntaxError(f"no oracle fixture named {name!r}; have {', '.join(fixtures)}")
