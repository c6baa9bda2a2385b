"""Exact decisions about base-2 logarithms of integers.

Nothing here uses floating point to reach a verdict.  ``a <= k log2(l)`` is
the integer comparison ``2**a <= l**k``.  For the cube of a logarithm we
enclose ``log2(l)`` in a dyadic interval by repeated squaring on scaled
integers with outward rounding, and tighten until the answer is forced.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def log2_bracket(x: int, bits: int = 32) -> tuple[Fraction, Fraction]:
    """Return ``(lo, hi)`` with ``lo <= log2(x) <= hi`` and ``hi - lo <= 2**-bits``.

    The interval is degenerate when ``x`` is a power of two.
    """
    if x < 1:
        raise ValueError("log2_bracket needs a positive integer")
    e = x.bit_length() - 1
    if _is_power_of_two(x):
        return Fraction(e), Fraction(e)
    prec = bits + 32
    while True:
        m = _fraction_bits(x, e, bits, prec)
        if m is not None:
            return Fraction(e) + Fraction(m, 1 << bits), Fraction(e) + Fraction(m + 1, 1 << bits)
        prec *= 2


def _fraction_bits(x: int, e: int, bits: int, prec: int) -> int | None:
    # y = x / 2^e in (1, 2), held as an integer interval [lo, hi] scaled by 2^prec
    one = 1 << prec
    two = one << 1
    num = x << prec
    lo = num >> e
    hi = lo + (1 if num & ((1 << e) - 1) else 0)
    m = 0
    for _ in range(bits):
        lo = (lo * lo) >> prec
        hi = -((-hi * hi) >> prec)
        m <<= 1
        if lo >= two:
            m |= 1
            lo >>= 1
            hi = -((-hi) >> 1)
        elif hi >= two:
            return None  # cannot tell which side of 2; need more precision
        if hi - lo > one:
            return None
    return m


@dataclass(frozen=True)
class LogComparison:
    """Verdict for ``lhs <= rhs_multiplier * log2(rhs_base)``."""

    lhs: int
    rhs_base: int
    rhs_multiplier: int
    verdict: bool

    def __bool__(self) -> bool:
        return self.verdict


def compare_linear_log(a: int, ell: int, k: int = 1) -> LogComparison:
    if ell < 2 or a < 0 or k < 1:
        raise ValueError("need ell >= 2, a >= 0, k >= 1")
    return LogComparison(a, ell, k, (1 << a) <= ell**k)


def cmp_linear_log(a: int, ell: int, k: int = 1) -> bool:
    """``a <= k*log2(ell)`` decided as ``2**a <= ell**k``."""
    return compare_linear_log(a, ell, k).verdict


@dataclass(frozen=True)
class CubedLogComparison:
    """Verdict for ``s <= log2(ell)**3`` with the bracket of ``log2(ell)`` used."""

    s: int
    ell: int
    verdict: bool
    lo: Fraction
    hi: Fraction

    def __bool__(self) -> bool:
        return self.verdict

    @property
    def cube_estimate(self) -> float:
        return float((self.lo + self.hi) / 2) ** 3


def cmp_cubed_log(s: int, ell: int) -> CubedLogComparison:
    if ell < 2 or s < 1:
        raise ValueError("need ell >= 2 and s >= 1")
    if _is_power_of_two(ell):
        e = ell.bit_length() - 1
        return CubedLogComparison(s, ell, s <= e**3, Fraction(e), Fraction(e))
    bits = 16
    while True:
        lo, hi = log2_bracket(ell, bits)
        if s <= lo**3:
            return CubedLogComparison(s, ell, True, lo, hi)
        # log2(ell) is irrational here, so it lies strictly below hi
        if s >= hi**3:
            return CubedLogComparison(s, ell, False, lo, hi)
        bits *= 2


def log_ratio_bracket(num: int, den: int, width: Fraction = Fraction(1, 10**4)) -> tuple[Fraction, Fraction]:
    """Bracket ``log(num)/log(den)`` (base irrelevant) to the given width."""
    if den < 2 or num < 1:
        raise ValueError("need den >= 2 and num >= 1")
    bits = 24
    while True:
        a_lo, a_hi = log2_bracket(num, bits)
        b_lo, b_hi = log2_bracket(den, bits)
        lo, hi = a_lo / b_hi, a_hi / b_lo
        if hi - lo <= width:
            return lo, hi
        bits *= 2
