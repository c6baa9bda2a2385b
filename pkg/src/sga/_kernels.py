"""Cayley-table kernels with a numba path and a pure-numpy path.

The numba path is used when numba imports and ``SGA_DISABLE_NUMBA`` is unset
(or ``0``).  Both paths expose the same three functions and are checked
against each other in the test-suite; ``benchmarks/bench_kernels.py`` times
them side by side.

All tables are ``int64`` arrays with ``table[a, b]`` the index of ``a*b``.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np


def _np_closure(table, gens, seed):
    mask = seed.copy()
    gens = np.asarray(gens, dtype=np.int64)
    if gens.size == 0:
        return mask
    frontier = np.flatnonzero(mask)
    while frontier.size:
        prod = table[np.ix_(frontier, gens)].ravel()
        fresh = np.unique(prod[~mask[prod]])
        mask[fresh] = True
        frontier = fresh
    return mask


def _np_is_associative(table):
    n = table.shape[0]
    for x in range(n):
        # (x*y)*z against x*(y*z) for every y, z
        if not np.array_equal(table[table[x]], table[x][table]):
            return False
    return True


def _np_element_orders(table, identity):
    n = table.shape[0]
    idx = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    power = idx.copy()
    for k in range(1, n + 1):
        hit = (power == identity) & (orders == 0)
        orders[hit] = k
        if orders.all():
            break
        power = table[power, idx]
    return orders


numpy_impl = SimpleNamespace(
    name="numpy",
    closure=_np_closure,
    is_associative=_np_is_associative,
    element_orders=_np_element_orders,
)


def _build_numba_impl():
    import numba

    @numba.njit(cache=True)
    def closure(table, gens, seed):
        n = table.shape[0]
        mask = seed.copy()
        queue = np.empty(n, dtype=np.int64)
        tail = 0
        for i in range(n):
            if mask[i]:
                queue[tail] = i
                tail += 1
        head = 0
        while head < tail:
            x = queue[head]
            head += 1
            for k in range(gens.shape[0]):
                y = table[x, gens[k]]
                if not mask[y]:
                    mask[y] = True
                    queue[tail] = y
                    tail += 1
        return mask

    @numba.njit(cache=True)
    def is_associative(table):
        n = table.shape[0]
        for x in range(n):
            for y in range(n):
                xy = table[x, y]
                for z in range(n):
                    if table[xy, z] != table[x, table[y, z]]:
                        return False
        return True

    @numba.njit(cache=True)
    def element_orders(table, identity):
        n = table.shape[0]
        orders = np.zeros(n, dtype=np.int64)
        for x in range(n):
            p = x
            k = 1
            while p != identity:
                p = table[p, x]
                k += 1
                if k > n:
                    k = -1
                    break
            orders[x] = k
        return orders

    def closure_any(table, gens, seed):
        return closure(table, np.asarray(gens, dtype=np.int64), seed)

    return SimpleNamespace(
        name="numba",
        closure=closure_any,
        is_associative=is_associative,
        element_orders=element_orders,
    )


def _numba_requested() -> bool:
    return os.environ.get("SGA_DISABLE_NUMBA", "0").strip().lower() in ("", "0", "false", "no")


try:
    numba_impl = _build_numba_impl()
except ImportError:  # pragma: no cover - depends on the environment
    numba_impl = None

active = numba_impl if (numba_impl is not None and _numba_requested()) else numpy_impl

closure = active.closure
is_associative = active.is_associative
element_orders = active.element_orders
BACKEND = active.name
