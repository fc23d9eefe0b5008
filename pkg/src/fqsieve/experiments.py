"""Desk-scale counting experiments: empirical square-free fractions over
primes, the sieve split into small-prime-clean and large-square sets,
remainder counts over all monic polynomials, progression deviation checks,
and degree/field scans with reproducible CSV and JSON output.

Enumerations are partitioned by index range; partial tallies are plain
integer tuples combined in partition order, so serial and threaded runs
produce byte-identical output.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .bivariate import BiPoly, require_admissible
from .config import DEFAULTS, default_weil_slack
from .density import DensityEstimate, squarefree_density
from .errors import BudgetExceededError, InadmissibleError, ParseError
from .finitefield import FiniteField, field_from_order
from .polyring import (
    Poly,
    count_primes_ap,
    distinct_degree_profile,
    enumerate_monic,
    enumerate_primes,
    euler_phi,
    is_squarefree,
    poly_gcd,
    primes_up_to,
    repeated_radical,
)


@dataclass
class SieveCounts:
    """Per-(degree, cutoff) counts over primes of that degree."""

    n: int
    M: Optional[int] = None
    primes_total: Optional[int] = None
    squarefree_hits: Optional[int] = None
    p_prime_count: Optional[int] = None  # no small prime square divides f(a)
    p_doubleprime_count: Optional[int] = None  # some large square divides
    bad_middle: Optional[int] = None
    bad_large: Optional[int] = None


@dataclass(frozen=True)
class ScanRow:
    n: int
    primes: int
    hits: int
    fraction: float
    c_trunc: float
    c_lower: float
    c_upper: float
    deviation: float
    log_ref: float


@dataclass(frozen=True)
class QScanRow:
    q: int
    n: int
    primes: Optional[int]
    hits: Optional[int]
    fraction: Optional[float]
    error: Optional[str] = None


@dataclass(frozen=True)
class WeilCheck:
    n: int
    modulus: str
    max_deviation: float
    bound: float
    passed: bool
    slack: float


def _check_budget(field: FiniteField, n: int, budget: Optional[int]) -> int:
    budget = budget or DEFAULTS.enumeration_budget
    if field.q**n > budget:
        raise BudgetExceededError(
            f"enumerating q^n = {field.q ** n} polynomials exceeds the"
            f" budget {budget}"
        )
    return budget


def _combine_partitions(
    total: int, threads: int, worker: Callable[[int, int], tuple]
) -> tuple:
    """Run worker over index sub-ranges and sum the integer tuples in fixed
    partition order (associative and exact, so thread count never changes
    the result)."""
    if threads <= 1 or total < 4 * threads:
        return worker(0, total)
    bounds = []
    step = (total + threads - 1) // threads
    for lo in range(0, total, step):
        bounds.append((lo, min(lo + step, total)))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda se: worker(se[0], se[1]), bounds))
    return tuple(sum(col) for col in zip(*parts))


# ---------------------------------------------------------------------------


def _is_squarefree_value(v: Poly) -> bool:
    return (not v.is_zero()) and is_squarefree(v)


def empirical_density(
    f: BiPoly,
    n: int,
    *,
    budget: Optional[int] = None,
    threads: int = 1,
) -> SieveCounts:
    """Count primes of degree n whose f-value is square-free."""
    require_admissible(f)
    _check_budget(f.field, n, budget)
    primes = enumerate_primes(f.field, n, budget)

    def worker(lo, hi):
        hits = 0
        for P in primes[lo:hi]:
            if _is_squarefree_value(f.evaluate(P.poly)):
                hits += 1
        return (hits,)

    (hits,) = _combine_partitions(len(primes), threads, worker)
    return SieveCounts(n=n, primes_total=len(primes), squarefree_hits=hits)


def _square_prime_flags(
    v: Poly, M: int, n: int, small_primes: Sequence
) -> tuple[bool, bool, bool]:
    """(some P^2 | v with deg P < M,
        some P^2 | v with M <= 2 deg P <= n,
        some P^2 | v with 2 deg P > n)."""
    if v.is_zero():
        return bool(small_primes), 2 * M <= n, True
    small = False
    for P in small_primes:
        if (v % P.square).is_zero():
            small = True
            break
    rad = repeated_radical(v)
    if rad.degree == 0:
        return small, False, False
    for P in small_primes:
        while rad.degree >= P.degree:
            quo, rem = divmod(rad, P.poly)
            if rem.is_zero():
                rad = quo
            else:
                break
    if rad.degree == 0:
        return small, False, False
    middle = large = False
    for d, _part in distinct_degree_profile(rad):
        if 2 * d <= n:
            middle = True
        else:
            large = True
    return small, middle, large


def sieve_split_counts(
    f: BiPoly,
    n: int,
    M: int,
    *,
    budget: Optional[int] = None,
    threads: int = 1,
) -> SieveCounts:
    """Counts of the small-prime-clean set (no square of a prime of degree
    below M divides f(a)) and the large-square set (some prime of degree at
    least M contributes a square), over primes a of degree n."""
    require_admissible(f)
    if not 1 <= M <= n:
        raise ValueError("need 1 <= M <= n")
    _check_budget(f.field, n, budget)
    primes = enumerate_primes(f.field, n, budget)
    small_primes = primes_up_to(f.field, M - 1) if M > 1 else []

    def worker(lo, hi):
        hits = clean = big = 0
        for a in primes[lo:hi]:
            v = f.evaluate(a.poly)
            if _is_squarefree_value(v):
                hits += 1
            small, middle, large = _square_prime_flags(v, M, n, small_primes)
            if not small:
                clean += 1
            if middle or large:
                big += 1
        return hits, clean, big

    hits, clean, big = _combine_partitions(len(primes), threads, worker)
    return SieveCounts(
        n=n,
        M=M,
        primes_total=len(primes),
        squarefree_hits=hits,
        p_prime_count=clean,
        p_doubleprime_count=big,
    )


def remainder_counts(
    f: BiPoly,
    n: int,
    M: int,
    *,
    budget: Optional[int] = None,
    threads: int = 1,
) -> tuple[SieveCounts, float, float]:
    """Over all monic a of degree n: counts with a prime square divisor of
    f(a) in the middle degree range [M, n/2] and above n/2, plus the ratios
    against q^n/(M q^M) and q^(n/2) respectively."""
    require_admissible(f)
    if M < 1:
        raise ValueError("M must be at least 1")
    budget = _check_budget(f.field, n, budget)
    field = f.field
    q = field.q
    small_primes = primes_up_to(field, M - 1) if M > 1 else []
    total = q**n

    def worker(lo, hi):
        mid_count = large_count = 0
        for a in enumerate_monic(field, n, lo, hi):
            v = f.evaluate(a)
            if _is_squarefree_value(v):
                continue
            _small, middle, large = _square_prime_flags(
                v, M, n, small_primes
            )
            if middle:
                mid_count += 1
            if large:
                large_count += 1
        return mid_count, large_count

    mid_count, large_count = _combine_partitions(total, threads, worker)
    counts = SieveCounts(n=n, M=M, bad_middle=mid_count, bad_large=large_count)
    ratio_middle = mid_count * M * q**M / q**n
    ratio_large = large_count / q ** (n * (field.p - 1) / field.p)
    return counts, ratio_middle, ratio_large


def weil_check(
    n: int,
    modulus: Poly,
    *,
    slack: Optional[float] = None,
    budget: Optional[int] = None,
) -> WeilCheck:
    """Max deviation of prime counts in coprime progressions from the
    equidistributed main term, against the square-root bound."""
    if modulus.degree < 1:
        raise ValueError("modulus must have positive degree")
    field = modulus.field
    _check_budget(field, n, budget)
    deg_q = int(modulus.degree)
    if slack is None:
        slack = default_weil_slack(deg_q)
    q = field.q
    counts: dict = {}
    for P in enumerate_primes(field, n, budget):
        r = (P.poly % modulus).coeffs
        counts[r] = counts.get(r, 0) + 1
    main = Fraction(q**n, n * euler_phi(modulus))
    max_dev = 0.0
    from .localcounts import residues

    for A in residues(field, deg_q):
        if A.is_zero() or poly_gcd(modulus, A).degree != 0:
            continue
        dev = float(abs(counts.get(A.coeffs, 0) - main))
        if dev > max_dev:
            max_dev = dev
    bound = slack * deg_q * math.sqrt(q**n) / n
    return WeilCheck(
        n=n,
        modulus=str(modulus),
        max_deviation=max_dev,
        bound=bound,
        passed=max_dev <= bound,
        slack=slack,
    )


# ---------------------------------------------------------------------------


def default_cutoff(field: FiniteField, n: int) -> int:
    """Largest M with q^M <= n/9, floored at 1."""
    M = 0
    while field.q ** (M + 1) <= n / 9:
        M += 1
    return max(M, 1)


def scan(
    f: BiPoly,
    n_min: int,
    n_max: int,
    M: Optional[int] = None,
    *,
    budget: Optional[int] = None,
    threads: int = 1,
    tail_extension: Optional[int] = None,
) -> list[ScanRow]:
    """Empirical fraction per degree against one truncated density estimate."""
    require_admissible(f)
    if n_min < 1 or n_max < n_min:
        raise ValueError("need 1 <= n_min <= n_max")
    if M is None:
        M = default_cutoff(f.field, n_max)
    est = squarefree_density(f, M, budget=budget, tail_extension=tail_extension)
    q = f.field.q
    rows = []
    for n in range(n_min, n_max + 1):
        counts = empirical_density(f, n, budget=budget, threads=threads)
        fraction = counts.squarefree_hits / counts.primes_total
        log_ref = math.log(q) / math.log(n) if n > 1 else float("inf")
        rows.append(
            ScanRow(
                n=n,
                primes=counts.primes_total,
                hits=counts.squarefree_hits,
                fraction=fraction,
                c_trunc=est.truncated_value,
                c_lower=est.lower,
                c_upper=est.upper,
                deviation=abs(fraction - est.truncated_value),
                log_ref=log_ref,
            )
        )
    return rows


def qscan(
    expression: str,
    q_list: Sequence[int],
    n: int,
    *,
    budget: Optional[int] = None,
    threads: int = 1,
) -> list[QScanRow]:
    """Fraction of degree-n primes with square-free value, per field size.

    The expression is re-parsed over each field; sizes where it fails to
    parse or is inadmissible are reported with the error and skipped.
    """
    rows = []
    for q in q_list:
        try:
            field = field_from_order(q)
            f = BiPoly.from_string(field, expression)
            counts = empirical_density(f, n, budget=budget, threads=threads)
        except (InadmissibleError, ParseError, ValueError) as exc:
            rows.append(
                QScanRow(
                    q=q, n=n, primes=None, hits=None, fraction=None,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
            continue
        rows.append(
            QScanRow(
                q=q,
                n=n,
                primes=counts.primes_total,
                hits=counts.squarefree_hits,
                fraction=counts.squarefree_hits / counts.primes_total,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# output


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


SCAN_CSV_HEADER = "n,primes,hits,fraction,c_trunc,c_lower,c_upper,deviation,log_ref"


def scan_rows_to_csv(rows: Sequence[ScanRow]) -> str:
    lines = [SCAN_CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    r.n, r.primes, r.hits, r.fraction, r.c_trunc,
                    r.c_lower, r.c_upper, r.deviation, r.log_ref,
                )
            )
        )
    return "\n".join(lines) + "\n"


def scan_rows_to_json(rows: Sequence[ScanRow]) -> str:
    out = []
    for r in rows:
        out.append(
            {
                "n": r.n,
                "primes": r.primes,
                "hits": r.hits,
                "fraction": _round12(r.fraction),
                "c_trunc": _round12(r.c_trunc),
                "c_lower": _round12(r.c_lower),
                "c_upper": _round12(r.c_upper),
                "deviation": _round12(r.deviation),
                "log_ref": _round12(r.log_ref),
            }
        )
    return json.dumps(out, indent=2) + "\n"


QSCAN_CSV_HEADER = "q,n,primes,hits,fraction,error"


def qscan_rows_to_csv(rows: Sequence[QScanRow]) -> str:
    lines = [QSCAN_CSV_HEADER]
    for r in rows:
        err = "" if r.error is None else r.error.replace(",", ";")
        lines.append(
            ",".join(
                [_fmt(r.q), _fmt(r.n), _fmt(r.primes), _fmt(r.hits),
                 _fmt(r.fraction), err]
            )
        )
    return "\n".join(lines) + "\n"


def qscan_rows_to_json(rows: Sequence[QScanRow]) -> str:
    out = []
    for r in rows:
        out.append(
            {
                "q": r.q,
                "n": r.n,
                "primes": r.primes,
                "hits": r.hits,
                "fraction": _round12(r.fraction),
                "error": r.error,
            }
        )
    return json.dumps(out, indent=2) + "\n"


def _round12(x: Optional[float]) -> Optional[float]:
    if x is None:
        return None
    if math.isinf(x):
        return x
    return float(f"{x:.12g}")
