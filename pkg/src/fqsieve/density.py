"""The truncated density product with a certified interval for its infinite
completion, and the finite positivity test.

The density of primes P with square-free f(P) is the product over all prime
moduli of (1 - rho/phi(P^2)), where rho counts coprime residues C mod P^2
with f(C) = 0.  Factors are exact rationals, so the zero test is an integer
comparison, never a float threshold.

Tail certification.  Let d0 = max(deg discriminant, deg leading coeff).
For deg P > d0 every root mod P^2 is a unique lift of a simple root mod P,
so rho is at most deg_x f there; combined with exact prime counts per degree
this bounds the omitted log-mass.  The interval is computed as

    upper = product over deg P < M,
    lower = upper * (exact factors for M <= deg P < M + E)
                  * exp(-K * T),

where E extra degrees are computed exactly (cheap, all on the lifting
shortcut), T sums deg_x(f) * count_primes(i) / (q^(2i) - q^i) over the
remaining degrees (exact counts up to a horizon, a closed geometric bound
beyond), and K = 1/(1 - x_max) with x_max = B/(q^(2M) - q^M) accounts for
-log(1-x) <= x/(1-x_max).  B is the uniform per-prime bound
max(deg_x f, q^(2 d0)).  Certification requires M > d0; otherwise a factor
in the tail could vanish and no positive lower bound exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bivariate import BiPoly, hensel_threshold, require_admissible, uniform_root_bound
from .config import DEFAULTS
from .errors import BudgetExceededError, CertificationError
from .finitefield import FiniteField
from .localcounts import count_unit_roots_mod_prime_square, residues
from .polyring import Poly, PrimeMod, count_primes, primes_up_to


@dataclass(frozen=True)
class DensityEstimate:
    """Truncated product with certified bounds for the infinite product."""

    truncated_value: float
    M: int
    lower: float
    upper: float
    B: int
    positive: bool
    culprit: Optional[PrimeMod]

    def to_json_dict(self) -> dict:
        return {
            "truncated_value": self.truncated_value,
            "lower": self.lower,
            "upper": self.upper,
            "M": self.M,
            "B": self.B,
            "positive": self.positive,
            "culprit": None if self.culprit is None else str(self.culprit),
        }


def _local_factor(f: BiPoly, P: PrimeMod, budget) -> Fraction:
    q = f.field.q
    phi2 = q ** (2 * P.degree) - q**P.degree
    rho = count_unit_roots_mod_prime_square(f, P, budget=budget, checked=False)
    return Fraction(phi2 - rho, phi2)


def _tail_log_bound(field: FiniteField, rho_bound: int, start: int) -> float:
    """Upper bound on sum over deg P >= start of rho_bound/(q^(2 deg)-q^deg),
    using exact prime counts up to a horizon and a closed geometric bound
    for the rest."""
    q = field.q
    if rho_bound == 0:
        return 0.0
    terms = []
    i = start
    horizon_end = start + DEFAULTS.tail_horizon
    while i < horizon_end:
        denom = q ** (2 * i) - q**i
        term = rho_bound * count_primes(field, i) / denom
        if term == 0.0:
            break
        terms.append(term)
        i += 1
    else:
        # closed form for sum_{i >= I} 1/(i (q^i - 1)), valid termwise
        terms.append(rho_bound * q / (i * (q - 1) * (q**i - 1)))
    # tiny inflation absorbs the rounding of the exact terms to doubles
    return math.fsum(terms) * (1.0 + 1e-12)


def squarefree_density(
    f: BiPoly,
    M: int,
    *,
    budget: Optional[int] = None,
    tail_extension: Optional[int] = None,
) -> DensityEstimate:
    """Truncated density product over deg P < M with a certified interval.

    Raises CertificationError when the cutoff cannot certify the tail (M at
    or below the lifting threshold, or a uniform-bound factor could reach 1).
    A vanishing factor short-circuits: the infinite product is then exactly
    zero and the culprit prime is reported.
    """
    require_admissible(f)
    if M < 1:
        raise ValueError("the cutoff must be at least 1")
    field = f.field
    q = field.q
    d0 = hensel_threshold(f)
    B = uniform_root_bound(f)

    product = Fraction(1)
    for P in primes_up_to(field, M - 1) if M > 1 else []:
        factor = _local_factor(f, P, budget)
        if factor == 0:
            return DensityEstimate(
                truncated_value=0.0,
                M=M,
                lower=0.0,
                upper=0.0,
                B=B,
                positive=False,
                culprit=P,
            )
        product *= factor
    truncated = float(product)

    if M <= d0:
        raise CertificationError(
            f"cutoff {M} is at or below the lifting threshold {d0}: a tail"
            f" factor could vanish, so no positive lower bound exists;"
            f" raise the cutoff above {d0}"
        )
    x_max = Fraction(B, q ** (2 * M) - q**M)
    if x_max >= 1:
        raise CertificationError(
            f"uniform bound {B} reaches the residue count at cutoff {M};"
            f" raise the cutoff"
        )

    extension = (
        DEFAULTS.tail_extension if tail_extension is None else tail_extension
    )
    ext_product = Fraction(1)
    if extension:
        for P in primes_up_to(field, M + extension - 1):
            if P.degree < M:
                continue
            factor = _local_factor(f, P, budget)
            assert factor > 0, "vanishing factor above the lifting threshold"
            ext_product *= factor

    dx = int(f.deg_x) if f.deg_x >= 1 else 0
    tail = _tail_log_bound(field, dx, M + extension)
    K = 1.0 / (1.0 - float(x_max))
    lower = float(product * ext_product) * math.exp(-K * tail)
    return DensityEstimate(
        truncated_value=truncated,
        M=M,
        lower=lower,
        upper=truncated,
        B=B,
        positive=True,
        culprit=None,
    )


@dataclass(frozen=True)
class PositivityRecord:
    prime: PrimeMod
    witness: Optional[Poly]  # coprime residue with f not 0 mod P^2
    is_culprit: bool


@dataclass(frozen=True)
class PositivityReport:
    positive: bool
    records: list[PositivityRecord]

    @property
    def culprit(self) -> Optional[PrimeMod]:
        for rec in self.records:
            if rec.is_culprit:
                return rec.prime
        return None


def positivity_check(
    f: BiPoly, *, budget: Optional[int] = None
) -> PositivityReport:
    """Finite test for a nonzero density.

    Only primes up to the lifting threshold can produce a vanishing factor
    (above it, roots mod P^2 are lifts of at most deg_x f simple roots and
    cannot exhaust the coprime residues), so it is enough to search each such
    prime for one coprime residue C with f(C) not 0 mod P^2.
    """
    require_admissible(f)
    budget = budget or DEFAULTS.residue_scan_budget
    d0 = hensel_threshold(f)
    field = f.field
    records = []
    positive = True
    for P in primes_up_to(field, d0) if d0 >= 1 else []:
        n_residues = field.q ** (2 * P.degree)
        if n_residues > budget:
            raise BudgetExceededError(
                f"positivity scan mod {P}^2 needs {n_residues} residues"
                f" (budget {budget})"
            )
        P2 = P.square
        witness = None
        for r in residues(field, 2 * P.degree):
            if (r % P.poly).is_zero():
                continue
            if not f.evaluate_mod(r, P2).is_zero():
                witness = r
                break
        if witness is None:
            records.append(PositivityRecord(P, None, True))
            positive = False
            break
        records.append(PositivityRecord(P, witness, False))
    return PositivityReport(positive=positive, records=records)
