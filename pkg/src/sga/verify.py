"""Sweeps of the degree and Out(S) inequalities over parameter ranges.

Clauses:

``A4a``  l(S)^2 < |S|
``A4b``  |Out S| <= 3 log2 l(S)
``A5``   |Out S| <= log2 l(S), outside a list of excluded groups
``A23``  v_S <= l(S)^2 for members of X and Y
``B``    number of subgroups of Out S <= (log2 l(S))^3

All verdicts are integer comparisons; floats only appear in messages.
"""
from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .classification import Label, classify, v_index
from .errors import GroupError, NotApplicable, NotPrime
from .exactlog import cmp_cubed_log, compare_linear_log, log2_bracket, log_ratio_bracket
from .groupid import (
    SPORADIC_NAMES,
    Family,
    GroupKey,
    PrimePower,
    canonical_key,
    is_prime,
    linear,
    normalize,
    sporadic,
)
from .invariants import mindeg, order, out_order
from .outgroups import out_recipe, recipe_subgroup_count

CLAUSES = ("A4a", "A4b", "A5", "A23", "B")
B_OUT_CAP = 500

DEFAULT_N_MAX = {
    Family.ALTERNATING: 200,
    Family.LINEAR: 12,
    Family.UNITARY: 12,
    Family.SYMPLECTIC: 20,
    Family.ORTHOGONAL_ODD: 20,
    Family.ORTHOGONAL_PLUS: 20,
    Family.ORTHOGONAL_MINUS: 20,
}
DEFAULT_Q_MAX = 1024
E_SERIES_Q_MAX = 64
_E_SERIES = (Family.E6, Family.E7, Family.E8, Family.TWISTED_E6)
_N_START = {
    Family.ALTERNATING: (5, 1),
    Family.LINEAR: (2, 1),
    Family.UNITARY: (3, 1),
    Family.SYMPLECTIC: (4, 2),
    Family.ORTHOGONAL_ODD: (7, 2),
    Family.ORTHOGONAL_PLUS: (8, 2),
    Family.ORTHOGONAL_MINUS: (8, 2),
}


def prime_powers(limit: int) -> list[PrimePower]:
    out = []
    for p in range(2, limit + 1):
        if is_prime(p):
            f, q = 1, p
            while q <= limit:
                out.append(PrimePower(p, f))
                f += 1
                q *= p
    return sorted(out, key=lambda pp: pp.q)


# -- clause evaluation ----------------------------------------------------------

@dataclass(frozen=True)
class ClauseResult:
    passed: bool
    lhs: str
    rhs: str


def _fmt_log(x: int) -> str:
    lo, hi = log2_bracket(x, 20)
    return f"{float((lo + hi) / 2):.4f}"


def _a4a(key: GroupKey) -> ClauseResult:
    ell, size = mindeg(key), order(key)
    return ClauseResult(ell * ell < size, f"l^2={ell * ell}", f"|S|={size}")


def _a4b(key: GroupKey) -> ClauseResult:
    out, ell = out_order(key), mindeg(key)
    ok = compare_linear_log(out, ell, 3).verdict
    return ClauseResult(ok, f"|Out|={out}", f"3*log2({ell})={3 * float(_fmt_log(ell)):.4f}")


def _a5(key: GroupKey) -> ClauseResult:
    out, ell = out_order(key), mindeg(key)
    ok = compare_linear_log(out, ell, 1).verdict
    return ClauseResult(ok, f"|Out|={out}", f"log2({ell})={_fmt_log(ell)}")


def _a23(key: GroupKey) -> ClauseResult:
    v, ell = v_index(key), mindeg(key)
    return ClauseResult(v <= ell * ell, f"v={v}", f"l^2={ell * ell}")


def _b(key: GroupKey) -> ClauseResult:
    count = recipe_subgroup_count(out_recipe(key))
    ell = mindeg(key)
    cmp = cmp_cubed_log(count, ell)
    return ClauseResult(cmp.verdict, f"subgroups={count}", f"log2({ell})^3~{cmp.cube_estimate:.4f}")


_EVALUATORS: dict[str, Callable[[GroupKey], ClauseResult]] = {
    "A4a": _a4a, "A4b": _a4b, "A5": _a5, "A23": _a23, "B": _b,
}


def refined_bound_exclusion(key: GroupKey) -> str | None:
    """Reason why ``key`` is exempt from the refined bound, or ``None``.

    The exemption is isomorphism-invariant, so every alias is inspected.
    PSU(5,3^f) is exempted in full.
    """
    for k in normalize(key).aliases:
        fam = k.family
        if fam is Family.ALTERNATING and k.n == 6:
            return "Alt(6)"
        if fam is Family.LINEAR:
            n, q, p = k.n, k.qq, k.p
            if n >= 3 and p in (2, 3, 5, 7) and math.gcd(n, q - 1) > 1:
                return "PSL(n,q): n>=3, p in {2,3,5,7}, gcd(n,q-1)>1"
            if n == 2 and p == 3:
                return "PSL(2,3^f)"
        if fam is Family.UNITARY:
            n, q, p, f = k.n, k.qq, k.p, k.f
            if n == 3 and p == 3:
                return "PSU(3,3^f)"
            if n == 3 and q == 5:
                return "PSU(3,5)"
            if n >= 4 and p == 2 and f > 1 and math.gcd(n, q + 1) > 1:
                return "PSU(n,2^f): n>=4, f>1, gcd(n,q+1)>1"
            if n == 5 and p == 3:
                return "PSU(5,3^f) (excluded in full)"
        if fam is Family.ORTHOGONAL_PLUS and k.n == 8 and k.p in (3, 5, 7, 11, 13):
            return "O+(8,q), p in {3,5,7,11,13}"
    return None


def skip_reason(clause: str, key: GroupKey) -> str | None:
    """Why ``clause`` does not apply to ``key`` (``None`` when it does)."""
    if clause == "A23" and classify(key) is Label.NEITHER:
        return "not in X or Y"
    if clause == "B" and out_order(key) > B_OUT_CAP:
        return f"|Out| > {B_OUT_CAP}"
    if clause == "A5" and refined_bound_exclusion(key):
        return "excluded from refined bound"
    return None


def evaluate(clause: str, key: GroupKey) -> ClauseResult:
    if clause not in _EVALUATORS:
        raise ValueError(f"unknown clause {clause!r}; choose from {', '.join(CLAUSES)}")
    return _EVALUATORS[clause](canonical_key(key))


# -- candidate enumeration ------------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    label: str
    key: GroupKey | None
    error: str | None = None


def parse_family(name: str) -> Family:
    lookup = {f.value.lower(): f for f in Family}
    lookup.update({f.name.lower(): f for f in Family})
    lookup.update({"linear": Family.LINEAR, "unitary": Family.UNITARY, "symplectic": Family.SYMPLECTIC,
                   "alternating": Family.ALTERNATING, "sporadic": Family.SPORADIC,
                   "orthogonal": Family.ORTHOGONAL_ODD, "psp": Family.SYMPLECTIC})
    try:
        return lookup[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None


def candidates(families: Iterable[Family] | None = None, n_max: int | None = None,
               q_max: int | None = None) -> Iterator[Candidate]:
    """Every parameter combination in range, including invalid ones.

    Invalid combinations come back with ``error`` set so that callers can
    tally them; nothing is silently dropped.
    """
    fams = list(Family) if families is None else list(families)
    q_cap = DEFAULT_Q_MAX if q_max is None else q_max
    for fam in fams:
        if fam is Family.SPORADIC:
            for name in SPORADIC_NAMES:
                yield Candidate(name, sporadic(name))
            continue
        if fam is Family.ALTERNATING:
            top = DEFAULT_N_MAX[fam] if n_max is None else n_max
            for n in range(5, top + 1):
                yield Candidate(f"Alt({n})", GroupKey(fam, n=n))
            continue
        qs = prime_powers(min(q_cap, E_SERIES_Q_MAX) if fam in _E_SERIES else q_cap)
        if fam.has_rank:
            start, step = _N_START[fam]
            top = DEFAULT_N_MAX[fam] if n_max is None else n_max
            params = [(n, pp) for n in range(start, top + 1, step) for pp in qs]
        else:
            params = [(None, pp) for pp in qs]
        for n, pp in params:
            label = f"{fam.value}({n},{pp.q})" if n is not None else f"{fam.value}({pp.q})"
            try:
                yield Candidate(label, GroupKey(fam, n=n, q=pp))
            except GroupError as exc:
                yield Candidate(label, None, str(exc))


# -- sweeps ------------------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    key: str
    clause: str
    lhs: str
    rhs: str


@dataclass
class GroupRecord:
    """One canonical group with the verdict of each evaluated clause."""

    key: GroupKey
    clauses: dict[str, bool | None]
    details: dict[str, ClauseResult] = field(default_factory=dict)

    def as_dict(self) -> dict:
        label = classify(self.key)
        return {
            "key": str(self.key),
            "order": order(self.key),
            "mindeg": mindeg(self.key),
            "out_order": out_order(self.key),
            "label": str(label),
            "v": None if label is Label.NEITHER else v_index(self.key),
            "clauses": dict(self.clauses),
        }


@dataclass
class SweepReport:
    clauses: tuple[str, ...]
    families: tuple[str, ...]
    n_max: int | None
    q_max: int | None
    candidates: int = 0
    passed: int = 0
    failures: list[Failure] = field(default_factory=list)
    skipped: Counter = field(default_factory=Counter)
    pass_counts: Counter = field(default_factory=Counter)
    excluded: list[tuple[str, str, bool]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def failed(self) -> int:
        return len({f.key for f in self.failures})

    @property
    def skipped_total(self) -> int:
        return sum(self.skipped.values())

    @property
    def all_pass(self) -> bool:
        return not self.failures

    @property
    def excluded_would_pass(self) -> int:
        return sum(1 for *_, ok in self.excluded if ok)

    def summary(self) -> dict:
        return {
            "clauses": list(self.clauses),
            "families": list(self.families),
            "n_max": self.n_max,
            "q_max": self.q_max,
            "candidates": self.candidates,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped_total,
            "skip_reasons": dict(self.skipped),
            "pass_counts": dict(self.pass_counts),
            "excluded": len(self.excluded),
            "excluded_would_pass": self.excluded_would_pass,
            "failures": [f.__dict__ for f in self.failures],
            "all_pass": self.all_pass,
            "wall_time": round(self.wall_time, 3),
        }


def iter_sweep(clauses: str | Iterable[str], families: Iterable[Family] | None = None,
               n_max: int | None = None, q_max: int | None = None,
               report: SweepReport | None = None) -> Iterator[GroupRecord]:
    """Evaluate clauses group by group, updating ``report`` as it goes.

    Each candidate is tallied exactly once: as passed, failed, or skipped with
    a reason.  Aliases of a group already seen are skipped.
    """
    clauses = (clauses,) if isinstance(clauses, str) else tuple(clauses)
    for c in clauses:
        if c not in _EVALUATORS:
            raise ValueError(f"unknown clause {c!r}; choose from {', '.join(CLAUSES)}")
    if report is None:
        report = SweepReport(clauses, (), n_max, q_max)
    seen: set[GroupKey] = set()
    start = time.perf_counter()
    for cand in candidates(families, n_max, q_max):
        report.candidates += 1
        if cand.key is None:
            report.skipped[f"invalid parameters: {cand.error}"] += 1
            continue
        key = canonical_key(cand.key)
        if key in seen:
            report.skipped["alias of a group already checked"] += 1
            continue
        seen.add(key)
        verdicts: dict[str, bool | None] = {}
        details: dict[str, ClauseResult] = {}
        reasons = []
        for c in clauses:
            reason = skip_reason(c, key)
            if reason is not None:
                verdicts[c] = None
                reasons.append(reason)
                if c == "A5":
                    report.excluded.append((str(key), refined_bound_exclusion(key), _a5(key).passed))
                continue
            res = _EVALUATORS[c](key)
            verdicts[c], details[c] = res.passed, res
            if res.passed:
                report.pass_counts[c] += 1
            else:
                report.failures.append(Failure(str(key), c, res.lhs, res.rhs))
        evaluated = [v for v in verdicts.values() if v is not None]
        if not evaluated:
            report.skipped[reasons[0]] += 1
        elif all(evaluated):
            report.passed += 1
        report.wall_time = time.perf_counter() - start
        yield GroupRecord(key, verdicts, details)
    report.wall_time = time.perf_counter() - start


def sweep(clauses: str | Iterable[str], families: Iterable[Family] | None = None,
          n_max: int | None = None, q_max: int | None = None) -> SweepReport:
    clauses = (clauses,) if isinstance(clauses, str) else tuple(clauses)
    fams = None if families is None else tuple(families)
    report = SweepReport(clauses, tuple(f.value for f in fams) if fams else ("all",), n_max, q_max)
    for _ in iter_sweep(clauses, fams, n_max, q_max, report):
        pass
    return report


# -- remarks and ratio reports ---------------------------------------------------

@dataclass(frozen=True)
class PslN2Evidence:
    n: int
    index: int
    mindeg: int
    exponent: int
    bound: int
    passed: bool

    def __bool__(self) -> bool:
        return self.passed


def remark_psl_n2(n: int) -> PslN2Evidence:
    """Index of the normaliser GL1(2^n):n of a Singer cycle in PSL(n,2)
    against l(S)^((n-1)/2)."""
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")
    if not 5 <= n <= 31:
        raise NotApplicable("the check covers primes 5 <= n <= 31")
    top = 1 << n
    num = math.prod(top - (1 << i) for i in range(1, n))
    index, rem = divmod(num, n)
    if rem:
        raise ArithmeticError(f"|S:M| is not an integer for n={n}")
    if order(linear(n, 2)) != index * (top - 1) * n:
        raise ArithmeticError(f"|S:M| * |M| != |S| for n={n}")
    ell = mindeg(linear(n, 2))
    exponent = (n - 1) // 2
    bound = ell**exponent
    return PslN2Evidence(n, index, ell, exponent, bound, index > bound)


@dataclass(frozen=True)
class TightnessRow:
    f: int
    mindeg: int
    out_order: int
    lo: Fraction
    hi: Fraction

    @property
    def estimate(self) -> float:
        return float((self.lo + self.hi) / 2)


def tightness_report(m: int, f_max: int, bits: int = 40) -> list[TightnessRow]:
    """``log2(l)/|Out|`` for PSL(m, 2^f) at each ``f <= f_max`` with ``m | 2^f - 1``.

    Here ``l = (2^(mf)-1)/(2^f-1)`` and ``|Out| = 2mf``; the ratios tend to
    ``(m-1)/(2m)``.
    """
    if m < 3:
        raise ValueError("m must be at least 3")
    rows = []
    for f in range(1, f_max + 1):
        if ((1 << f) - 1) % m:
            continue
        ell = ((1 << (m * f)) - 1) // ((1 << f) - 1)
        out = 2 * m * f
        lo, hi = log2_bracket(ell, bits)
        rows.append(TightnessRow(f, ell, out, lo / out, hi / out))
    return rows


def tightness_limit(m: int) -> Fraction:
    return Fraction(m - 1, 2 * m)


def exponent_ratio(key: GroupKey, width: Fraction = Fraction(1, 10**4)) -> tuple[Fraction, Fraction]:
    """Bracket of ``log|S| / log l(S)`` of width at most ``width``."""
    key = canonical_key(key)
    return log_ratio_bracket(order(key), mindeg(key), width)
