"""Named verification suites behind the CLI `verify` subcommand.

Each suite re-derives a structural fact by direct computation at desk scale
and reports one line per check.  Frozen reference constants (progression
slack, remainder ratios) were measured with the same code paths before being
pinned here and in the configuration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .bivariate import BiPoly
from .experiments import remainder_counts, sieve_split_counts, weil_check
from .finitefield import FiniteField, field_from_order
from .localcounts import (
    count_roots_mod_prime,
    count_roots_mod_prime_square,
)
from .bivariate import uniform_root_bound
from .parsing import parse_bipoly, parse_poly
from .polyring import (
    Poly,
    count_primes,
    enumerate_monic,
    enumerate_primes,
    frobenius_decompose,
    frobenius_recompose,
    is_irreducible,
    primes_up_to,
)

SUITES = (
    "hensel",
    "explicit-formula",
    "weil",
    "frobenius",
    "sieve",
    "remainder",
)

_RNG_SEED = 0x5EED5

# Ratios measured for x^3 + t over F_2 at the smallest reference degree
# (n = 10).  Later degrees must stay within twice these.  The large-range
# ratio really is zero there: lifted roots mod P^2 land at odd degrees only
# for this input, so even-degree scans see no large square divisor.
REMAINDER_REFERENCE = {
    "middle": {2: 0.390625, 3: 1.171875},
    "large": {2: 0.0, 3: 0.0},
}


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _default_f(q: int = 2) -> BiPoly:
    return parse_bipoly("x^3 + t", field_from_order(q))


def suite_hensel(
    f: Optional[BiPoly] = None, budget: Optional[int] = None
) -> list[Check]:
    f = f or _default_f()
    out = []
    bound = uniform_root_bound(f)
    for P in primes_up_to(f.field, 5, budget):
        r2 = count_roots_mod_prime_square(
            f, P, budget=budget, use_lift_shortcut=False, checked=False
        )
        if P.degree >= 3:
            r1 = count_roots_mod_prime(f, P, checked=False)
            out.append(
                Check(
                    f"lift-equality deg {P.degree} P={P}",
                    r2 == r1,
                    f"mod P^2: {r2}, mod P: {r1}",
                )
            )
        out.append(
            Check(
                f"uniform-bound P={P}",
                r2 <= bound,
                f"{r2} <= {bound}",
            )
        )
    return out


def suite_explicit_formula(budget: Optional[int] = None) -> list[Check]:
    out = []
    for q in (2, 3, 4, 5, 9):
        field = field_from_order(q)
        for n in range(1, 13):
            lhs = sum(
                d * count_primes(field, d) for d in range(1, n + 1) if n % d == 0
            )
            out.append(
                Check(
                    f"degree-sum q={q} n={n}",
                    lhs == q**n,
                    f"{lhs} == {q ** n}",
                )
            )
    for q in (2, 3):
        field = field_from_order(q)
        for n in range(1, 11):
            enumerated = len(enumerate_primes(field, n, budget))
            out.append(
                Check(
                    f"enumeration q={q} n={n}",
                    enumerated == count_primes(field, n),
                    f"enumerated {enumerated}",
                )
            )
    return out


def suite_weil(
    q: int = 2,
    n_max: int = 14,
    slack: Optional[float] = None,
    budget: Optional[int] = None,
) -> list[Check]:
    field = field_from_order(q)
    moduli = [
        parse_poly("t", field),
        parse_poly("t+1", field),
        parse_poly("t^2+t+1", field),
    ]
    out = []
    for modulus in moduli:
        for n in range(1, n_max + 1):
            chk = weil_check(n, modulus, slack=slack, budget=budget)
            out.append(
                Check(
                    f"progression Q={modulus} n={n}",
                    chk.passed,
                    f"deviation {chk.max_deviation:.6g}"
                    f" <= bound {chk.bound:.6g}",
                )
            )
    return out


def suite_frobenius(
    samples: int = 1000, n_max: int = 32, qs=(2, 3, 4)
) -> list[Check]:
    rng = random.Random(_RNG_SEED)
    out = []
    for q in qs:
        field = field_from_order(q)
        p = field.p
        for n in range(1, n_max + 1):
            ok = True
            detail = ""
            for k in range(samples):
                if k % 2 == 0:
                    coeffs = [rng.randrange(q) for _ in range(n)] + [1]
                else:
                    coeffs = [rng.randrange(q) for _ in range(n + 1)]
                a = Poly(field, coeffs)
                parts = frobenius_decompose(a)
                if frobenius_recompose(parts, field) != a:
                    ok, detail = False, f"roundtrip failed on {a}"
                    break
                if any(part.degree > n // p for part in parts):
                    ok, detail = False, f"degree bound failed on {a}"
                    break
                if a.is_monic() and a.degree == n:
                    b = n % p
                    ab = parts[b]
                    if not (ab.is_monic() and ab.degree == n // p):
                        ok, detail = False, f"monic component failed on {a}"
                        break
            out.append(Check(f"decomposition q={q} n={n}", ok, detail))
    return out


def suite_sieve(
    f: Optional[BiPoly] = None,
    budget: Optional[int] = None,
    threads: int = 1,
) -> list[Check]:
    f = f or _default_f()
    out = []
    for n in (8, 10, 12):
        for M in (2, 3, 4):
            c = sieve_split_counts(f, n, M, budget=budget, threads=threads)
            lo = c.p_prime_count - c.p_doubleprime_count
            ok = lo <= c.squarefree_hits <= c.p_prime_count
            out.append(
                Check(
                    f"sandwich n={n} M={M}",
                    ok,
                    f"{lo} <= {c.squarefree_hits} <= {c.p_prime_count}",
                )
            )
    return out


def suite_remainder(
    f: Optional[BiPoly] = None,
    budget: Optional[int] = None,
    threads: int = 1,
) -> list[Check]:
    f = f or _default_f()
    out = []
    for n in (10, 12, 14):
        for M in (2, 3):
            _counts, ratio_mid, ratio_large = remainder_counts(
                f, n, M, budget=budget, threads=threads
            )
            if n == 10:
                out.append(
                    Check(
                        f"reference-ratio n={n} M={M}",
                        ratio_mid == REMAINDER_REFERENCE["middle"][M]
                        and ratio_large == REMAINDER_REFERENCE["large"][M],
                        f"middle {ratio_mid:.6g}, large {ratio_large:.6g}",
                    )
                )
                continue
            cap_mid = 2 * REMAINDER_REFERENCE["middle"][M]
            cap_large = 2 * REMAINDER_REFERENCE["large"][M]
            out.append(
                Check(
                    f"middle-ratio n={n} M={M}",
                    ratio_mid <= cap_mid,
                    f"ratio {ratio_mid:.6g} <= {cap_mid:.6g}",
                )
            )
            out.append(
                Check(
                    f"large-ratio n={n} M={M}",
                    ratio_large <= cap_large,
                    f"ratio {ratio_large:.6g} <= {cap_large:.6g}",
                )
            )
    return out


def run_suite(
    name: str,
    *,
    f: Optional[BiPoly] = None,
    slack: Optional[float] = None,
    budget: Optional[int] = None,
    threads: int = 1,
) -> list[Check]:
    if name == "hensel":
        return suite_hensel(f, budget)
    if name == "explicit-formula":
        return suite_explicit_formula(budget)
    if name == "weil":
        return suite_weil(slack=slack, budget=budget)
    if name == "frobenius":
        return suite_frobenius()
    if name == "sieve":
        return suite_sieve(f, budget, threads)
    if name == "remainder":
        return suite_remainder(f, budget, threads)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
