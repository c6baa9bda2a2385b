"""Explicit finite groups given by Cayley tables.

Small groups are described by a :data:`GroupRecipe` (a tree of constructors)
and turned into a :class:`FiniteGroupTable` by :func:`realize`.  Subgroups of
a table are enumerated by closing the trivial subgroup under joins with
cyclic subgroups of prime-power order; every subgroup is reached because it is
generated by its elements of prime-power order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, gcd
from typing import Union

import numpy as np

from . import _kernels
from .errors import InvalidAction, OrderCapExceeded

REALIZE_CAP = 10_000
ASSOCIATIVITY_CHECK_MAX = 500
SUBGROUP_CAP = 2_000
ISOMORPHISM_CAP = 24


@dataclass
class FiniteGroupTable:
    mul: np.ndarray
    identity: int
    inverse: np.ndarray

    @property
    def n(self) -> int:
        return self.mul.shape[0]

    def __len__(self) -> int:
        return self.n

    @classmethod
    def from_mul(cls, mul: np.ndarray) -> "FiniteGroupTable":
        """Wrap a multiplication table, locating identity and inverses."""
        mul = np.ascontiguousarray(mul, dtype=np.int64)
        n = mul.shape[0]
        idx = np.arange(n)
        ids = [e for e in range(n) if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx)]
        if not ids:
            raise InvalidAction("table has no two-sided identity")
        e = ids[0]
        rows, cols = np.nonzero(mul == e)
        inverse = np.full(n, -1, dtype=np.int64)
        inverse[rows] = cols
        if (inverse < 0).any():
            raise InvalidAction("table has an element without inverse")
        return cls(mul, e, inverse)

    def is_closed(self) -> bool:
        return self.mul.min() >= 0 and self.mul.max() < self.n

    def is_latin(self) -> bool:
        n = self.n
        rows_ok = all(np.unique(r).size == n for r in self.mul)
        cols_ok = all(np.unique(c).size == n for c in self.mul.T)
        return rows_ok and cols_ok

    def check_axioms(self) -> bool:
        """Closure, identity, inverses and associativity, checked on the table."""
        n = self.n
        idx = np.arange(n)
        e = self.identity
        return (
            self.is_closed()
            and np.array_equal(self.mul[e], idx)
            and np.array_equal(self.mul[:, e], idx)
            and bool((self.mul[idx, self.inverse] == e).all())
            and bool((self.mul[self.inverse, idx] == e).all())
            and bool(_kernels.is_associative(self.mul))
        )

    def element_orders(self) -> np.ndarray:
        return _kernels.element_orders(self.mul, self.identity)


# -- recipes -----------------------------------------------------------------

@dataclass(frozen=True)
class Trivial:
    @property
    def order(self) -> int:
        return 1

    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Cyclic:
    m: int

    @property
    def order(self) -> int:
        return self.m

    def __str__(self):
        return f"C{self.m}"


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of the given order ``2m``."""

    size: int

    @property
    def order(self) -> int:
        return self.size

    def __str__(self):
        return f"D{self.size}"


@dataclass(frozen=True)
class Symmetric:
    k: int

    @property
    def order(self) -> int:
        return factorial(self.k)

    def __str__(self):
        return f"Sym({self.k})"


@dataclass(frozen=True)
class Metacyclic:
    """``<x, y | x^d, y^f, y^-1 x y = x^a>``."""

    d: int
    f: int
    a: int

    @property
    def order(self) -> int:
        return self.d * self.f

    def __str__(self):
        return f"[C{self.d}]C{self.f}(a={self.a % self.d if self.d > 1 else 0})"


@dataclass(frozen=True)
class DirectProduct:
    left: "GroupRecipe"
    right: "GroupRecipe"

    @property
    def order(self) -> int:
        return self.left.order * self.right.order

    def __str__(self):
        return f"({self.left} x {self.right})"


@dataclass(frozen=True)
class GraphExtension:
    """Split extension of ``base`` by an involution ``z``.

    ``exponents`` gives ``z g z^-1 = g^e`` for each generator ``g`` of the
    base (one entry for :class:`Cyclic`, two for :class:`Metacyclic`).
    """

    base: Union[Cyclic, Metacyclic]
    exponents: tuple[int, ...]

    @property
    def order(self) -> int:
        return 2 * self.base.order

    def __str__(self):
        return f"{self.base}:2{list(self.exponents)}"


GroupRecipe = Union[Trivial, Cyclic, Dihedral, Symmetric, Metacyclic, DirectProduct, GraphExtension]


def _cyclic_mul(m: int) -> np.ndarray:
    i = np.arange(m)
    return (i[:, None] + i[None, :]) % m


def _dihedral_mul(size: int) -> np.ndarray:
    if size < 2 or size % 2:
        raise InvalidAction(f"dihedral order must be even and >= 2, got {size}")
    m = size // 2
    idx = np.arange(size)
    e, i = idx // m, idx % m
    sign = np.where(e == 1, -1, 1)
    ni = (i[:, None] + sign[:, None] * i[None, :]) % m
    ne = (e[:, None] + e[None, :]) % 2
    return ne * m + ni


def _symmetric_mul(k: int) -> np.ndarray:
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(perms):
        for j, b in enumerate(perms):
            mul[i, j] = index[tuple(a[b[x]] for x in range(k))]
    return mul


def _metacyclic_mul(d: int, f: int, a: int) -> np.ndarray:
    if d < 1 or f < 1:
        raise InvalidAction("metacyclic parameters must be positive")
    a %= d
    if d > 1 and (gcd(a, d) != 1 or pow(a, f, d) != 1):
        raise InvalidAction(f"exponent {a} is not a unit of order dividing {f} mod {d}")
    b = pow(a, -1, d) if d > 1 else 0
    bpow = np.array([pow(b, j, d) if d > 1 else 0 for j in range(f)], dtype=np.int64)
    idx = np.arange(d * f)
    i, j = idx // f, idx % f
    ni = (i[:, None] + i[None, :] * bpow[j][:, None]) % d
    nj = (j[:, None] + j[None, :]) % f
    return ni * f + nj


def _graph_sigma(base: Union[Cyclic, Metacyclic], exponents: tuple[int, ...]) -> np.ndarray:
    if isinstance(base, Cyclic):
        (e,) = exponents
        return (np.arange(base.m) * e) % base.m
    if isinstance(base, Metacyclic):
        e1, e2 = exponents
        idx = np.arange(base.d * base.f)
        i, j = idx // base.f, idx % base.f
        return ((i * e1) % base.d) * base.f + (j * e2) % base.f
    raise InvalidAction(f"graph extension of {base} is not supported")


def _graph_mul(recipe: GraphExtension) -> np.ndarray:
    base = _mul_for(recipe.base)
    nb = base.shape[0]
    sigma = _graph_sigma(recipe.base, recipe.exponents)
    if np.unique(sigma).size != nb:
        raise InvalidAction(f"{recipe}: generator images are not a bijection")
    if not np.array_equal(sigma[base], base[np.ix_(sigma, sigma)]):
        raise InvalidAction(f"{recipe}: generator images do not define an automorphism")
    if not np.array_equal(sigma[sigma], np.arange(nb)):
        raise InvalidAction(f"{recipe}: automorphism is not an involution")
    twisted = (np.arange(nb), sigma)
    n = 2 * nb
    idx = np.arange(n)
    eps, g = idx // nb, idx % nb
    mul = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        h = twisted[eps[a]][g]
        mul[a] = ((eps[a] + eps) % 2) * nb + base[g[a], h]
    return mul


def _mul_for(recipe: GroupRecipe) -> np.ndarray:
    if isinstance(recipe, Trivial):
        return np.zeros((1, 1), dtype=np.int64)
    if isinstance(recipe, Cyclic):
        if recipe.m < 1:
            raise InvalidAction("cyclic order must be positive")
        return _cyclic_mul(recipe.m)
    if isinstance(recipe, Dihedral):
        return _dihedral_mul(recipe.size)
    if isinstance(recipe, Symmetric):
        if not 1 <= recipe.k <= 4:
            raise InvalidAction("Symmetric(k) supports 1 <= k <= 4")
        return _symmetric_mul(recipe.k)
    if isinstance(recipe, Metacyclic):
        return _metacyclic_mul(recipe.d, recipe.f, recipe.a)
    if isinstance(recipe, DirectProduct):
        a, b = _mul_for(recipe.left), _mul_for(recipe.right)
        na, nb = a.shape[0], b.shape[0]
        prod = a[:, None, :, None] * nb + b[None, :, None, :]
        return prod.reshape(na * nb, na * nb)
    if isinstance(recipe, GraphExtension):
        return _graph_mul(recipe)
    raise TypeError(f"not a group recipe: {recipe!r}")


def realize(recipe: GroupRecipe, cap: int = REALIZE_CAP) -> FiniteGroupTable:
    """Cayley table for a recipe, with the group axioms checked for small orders."""
    if recipe.order > cap:
        raise OrderCapExceeded(f"{recipe} has order {recipe.order} > cap {cap}")
    table = FiniteGroupTable.from_mul(_mul_for(recipe))
    if table.n <= ASSOCIATIVITY_CHECK_MAX and not _kernels.is_associative(table.mul):
        raise InvalidAction(f"{recipe} does not define an associative product")
    return table


# -- subgroups ---------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    mask: np.ndarray
    generators: tuple[int, ...]

    @property
    def order(self) -> int:
        return int(self.mask.sum())

    def elements(self) -> np.ndarray:
        return np.flatnonzero(self.mask)


def _key(mask: np.ndarray) -> bytes:
    return np.packbits(mask).tobytes()


def _is_prime_power(k: int) -> bool:
    if k < 2:
        return False
    p = next(d for d in range(2, k + 1) if k % d == 0)
    while k % p == 0:
        k //= p
    return k == 1


def generated_subgroup(g: FiniteGroupTable, gens) -> np.ndarray:
    seed = np.zeros(g.n, dtype=np.bool_)
    seed[g.identity] = True
    return _kernels.closure(g.mul, np.asarray(list(gens), dtype=np.int64), seed)


def cyclic_subgroups(g: FiniteGroupTable, prime_power_only: bool = False) -> list[Subgroup]:
    orders = g.element_orders()
    seen: dict[bytes, Subgroup] = {}
    for x in np.argsort(orders, kind="stable"):
        x = int(x)
        if prime_power_only and not _is_prime_power(int(orders[x])):
            continue
        mask = generated_subgroup(g, [x])
        seen.setdefault(_key(mask), Subgroup(mask, (x,)))
    return list(seen.values())


def enumerate_subgroups(g: FiniteGroupTable, cap: int = SUBGROUP_CAP) -> list[Subgroup]:
    """Every subgroup of ``g``, trivial and whole group included."""
    if g.n > cap:
        raise OrderCapExceeded(f"subgroup enumeration capped at order {cap}, got {g.n}")
    atoms = cyclic_subgroups(g, prime_power_only=True)
    trivial = np.zeros(g.n, dtype=np.bool_)
    trivial[g.identity] = True
    found = {_key(trivial): Subgroup(trivial, ())}
    queue = [found[_key(trivial)]]
    pos = 0
    while pos < len(queue):
        h = queue[pos]
        pos += 1
        for atom in atoms:
            c = atom.generators[0]
            if h.mask[c]:
                continue
            gens = h.generators + (c,)
            mask = _kernels.closure(g.mul, np.asarray(gens, dtype=np.int64), h.mask)
            key = _key(mask)
            if key not in found:
                sub = Subgroup(mask, gens)
                found[key] = sub
                queue.append(sub)
    return queue


def count_subgroups(g: FiniteGroupTable, cap: int = SUBGROUP_CAP) -> int:
    return len(enumerate_subgroups(g, cap))


def _generating_set(g: FiniteGroupTable) -> list[int]:
    gens: list[int] = []
    mask = generated_subgroup(g, gens)
    orders = g.element_orders()
    for x in np.argsort(-orders, kind="stable"):
        if not mask.all() and not mask[x]:
            gens.append(int(x))
            mask = generated_subgroup(g, gens)
    return gens


def is_isomorphic(g: FiniteGroupTable, h: FiniteGroupTable, cap: int = ISOMORPHISM_CAP) -> bool:
    """Exhaustive isomorphism test for tables of order at most ``cap``."""
    if g.n != h.n:
        return False
    if g.n > cap:
        raise OrderCapExceeded(f"isomorphism search capped at order {cap}")
    og, oh = g.element_orders(), h.element_orders()
    if sorted(og) != sorted(oh):
        return False
    gens = _generating_set(g)
    choices = [np.flatnonzero(oh == og[x]) for x in gens]

    def extend(images) -> bool:
        phi = {g.identity: h.identity}
        frontier = [g.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s, t in zip(gens, images):
                    y, img = int(g.mul[x, s]), int(h.mul[phi[x], t])
                    if y in phi:
                        if phi[y] != img:
                            return False
                    else:
                        phi[y] = img
                        nxt.append(y)
            frontier = nxt
        return len(set(phi.values())) == g.n

    return any(extend(imgs) for imgs in itertools.product(*choices))
