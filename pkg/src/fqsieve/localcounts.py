"""Root counts of f modulo a prime P and modulo P^2, unique lifting of
simple roots, and the coprime-restricted count that feeds the density
product.

Counting mod P uses an exhaustive residue scan for small primes and, beyond
the scan threshold, the degree of gcd(f mod P, X^|P| - X) computed with
modular exponentiation in (F_q[t]/P)[X] modulo f.  Counting mod P^2 takes
the lifting shortcut when deg P exceeds max(deg discriminant, deg leading
coefficient); below that it scans all residues, guarded by a work budget.
A prime dividing the leading coefficient is not an error: counting proceeds
over the honest reduction, which may drop degree or vanish (a vanishing
reduction mod P^2 contributes every residue).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .bivariate import BiPoly, hensel_threshold, require_admissible, uniform_root_bound
from .config import DEFAULTS
from .errors import BudgetExceededError
from .finitefield import FiniteField
from .polyring import (
    Poly,
    PrimeMod,
    _mod,
    _mul,
    _strip,
    inverse_mod,
    poly_gcd,
    primes_up_to,
)


@dataclass(frozen=True)
class LocalCount:
    """Per-prime record of local root counts."""

    prime: PrimeMod
    roots_mod_p: int
    roots_mod_p_squared: int
    unit_roots: int
    via_hensel: bool


def residues(field: FiniteField, degree_below: int) -> Iterator[Poly]:
    """All polynomials of degree < degree_below (including 0), odometer order."""
    q = field.q
    for code in range(q**degree_below):
        c = code
        coeffs = []
        for _ in range(degree_below):
            c, r = divmod(c, q)
            coeffs.append(r)
        yield Poly(field, coeffs)


def _roots_by_scan(f: BiPoly, modulus: Poly, degree_below: int) -> int:
    count = 0
    for r in residues(f.field, degree_below):
        if f.evaluate_mod(r, modulus).is_zero():
            count += 1
    return count


def _roots_by_modexp(f: BiPoly, P: PrimeMod) -> int:
    """Number of roots of f in F_q[t]/(P) as deg gcd(f mod P, X^|P| - X)."""
    F = f.field
    Pc = P.poly.coeffs
    fbar = [c % P.poly for c in f.xcoeffs]
    while fbar and fbar[-1].is_zero():
        fbar.pop()
    if not fbar:
        return F.q**P.degree
    if len(fbar) == 1:
        return 0
    if len(fbar) == 2:
        return 1  # a linear polynomial over a field has exactly one root
    fcs = [c.coeffs for c in fbar]

    # arithmetic in K[X], K = F_q[t]/(P); elements are code lists mod P
    def k_mul(a, b):
        return _mod(F, _mul(F, a, b), Pc)

    def k_inv(a):
        return inverse_mod(Poly(F, a), P.poly).coeffs

    def kx_strip(v):
        while v and not v[-1]:
            v.pop()
        return v

    def kx_mul(aa, bb):
        out = [() for _ in range(len(aa) + len(bb) - 1)]
        for i, ca in enumerate(aa):
            if ca:
                for j, cb in enumerate(bb):
                    if cb:
                        out[i + j] = tuple(
                            _strip(
                                [
                                    F.add(x, y)
                                    for x, y in _zip_pad(
                                        out[i + j], k_mul(ca, cb)
                                    )
                                ]
                            )
                        )
        return kx_strip(list(out))

    def kx_mod(aa, mm):
        aa = list(aa)
        inv_lead = k_inv(mm[-1])
        dm = len(mm) - 1
        while len(aa) > dm:
            c = k_mul(aa[-1], inv_lead)
            if c:
                shift = len(aa) - 1 - dm
                for j in range(dm):
                    if mm[j]:
                        aa[shift + j] = tuple(
                            _strip(
                                [
                                    F.sub(x, y)
                                    for x, y in _zip_pad(
                                        aa[shift + j], k_mul(c, mm[j])
                                    )
                                ]
                            )
                        )
            aa.pop()
            kx_strip(aa)
            if not aa:
                break
        return aa

    def kx_gcd(aa, bb):
        aa, bb = list(aa), list(bb)
        while bb:
            aa, bb = bb, kx_mod(aa, bb)
        return aa

    x_poly = [(), (1,)]
    # X^(q^deg P) mod fbar by square and multiply
    e = F.q**P.degree
    result = [(1,)]
    acc = kx_mod(list(x_poly), fcs)
    while e:
        if e & 1:
            result = kx_mod(kx_mul(result, acc), fcs)
        acc = kx_mod(kx_mul(acc, acc), fcs)
        e >>= 1
    diff = list(result)
    while len(diff) < 2:
        diff.append(())
    diff[1] = tuple(_strip([F.sub(x, y) for x, y in _zip_pad(diff[1], (1,))]))
    kx_strip(diff)
    g = kx_gcd(fcs, diff)
    return len(g) - 1 if g else len(fcs) - 1


def _zip_pad(a, b):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def count_roots_mod_prime(
    f: BiPoly,
    P: PrimeMod,
    *,
    scan_max_degree: Optional[int] = None,
    checked: bool = True,
) -> int:
    """|{a : deg a < deg P, f(a) = 0 mod P}|."""
    if checked:
        require_admissible(f)
    limit = scan_max_degree or DEFAULTS.mod_p_scan_max_degree
    if P.degree <= limit:
        return _roots_by_scan(f, P.poly, P.degree)
    return _roots_by_modexp(f, P)


def count_roots_mod_prime_square(
    f: BiPoly,
    P: PrimeMod,
    *,
    budget: Optional[int] = None,
    use_lift_shortcut: bool = True,
    checked: bool = True,
) -> int:
    """|{b : deg b < 2 deg P, f(b) = 0 mod P^2}|."""
    if checked:
        require_admissible(f)
    if use_lift_shortcut and P.degree > hensel_threshold(f):
        return count_roots_mod_prime(f, P, checked=False)
    budget = budget or DEFAULTS.residue_scan_budget
    n_residues = f.field.q ** (2 * P.degree)
    if n_residues > budget:
        raise BudgetExceededError(
            f"scanning {n_residues} residues mod {P}^2 exceeds the budget"
            f" {budget}; raise it explicitly to proceed"
        )
    return _roots_by_scan(f, P.square, 2 * P.degree)


def hensel_lift(f: BiPoly, P: PrimeMod, c: Poly) -> Poly:
    """The unique d mod P^2 with f(d) = 0 mod P^2 and d = c mod P.

    Requires deg P > max(deg discriminant, deg leading coefficient) and
    f(c) = 0 mod P; then df/dx(c) is invertible mod P and
    d = c - f(c) * (df/dx(c))^-1.
    """
    require_admissible(f)
    if P.degree <= hensel_threshold(f):
        raise ValueError(
            f"deg {P} = {P.degree} does not exceed the lifting threshold"
            f" {hensel_threshold(f)}"
        )
    if not f.evaluate_mod(c, P.poly).is_zero():
        raise ValueError(f"{c} is not a root of f mod {P}")
    deriv = f.derivative("x").evaluate_mod(c, P.poly)
    if deriv.is_zero():
        raise RuntimeError(
            "internal contract violation: simple root with vanishing"
            " derivative above the lifting threshold"
        )
    h = inverse_mod(deriv, P.poly)
    P2 = P.square
    d = (c - f.evaluate_mod(c, P2) * h) % P2
    assert f.evaluate_mod(d, P2).is_zero()
    return d


def count_unit_roots_mod_prime_square(
    f: BiPoly,
    P: PrimeMod,
    *,
    budget: Optional[int] = None,
    checked: bool = True,
) -> int:
    """Roots of f mod P^2 among residues coprime to P.

    This is the local factor numerator of the density product.  Above the
    lifting threshold every root mod P^2 is the unique lift of a root mod P,
    and the lift of c is coprime to P exactly when c is nonzero, so the
    count is (roots mod P) minus one when 0 is a root.
    """
    if checked:
        require_admissible(f)
    if P.degree > hensel_threshold(f):
        r = count_roots_mod_prime(f, P, checked=False)
        zero_is_root = f.coefficient(0) % P.poly
        return r - 1 if zero_is_root.is_zero() else r
    budget = budget or DEFAULTS.residue_scan_budget
    n_residues = f.field.q ** (2 * P.degree)
    if n_residues > budget:
        raise BudgetExceededError(
            f"scanning {n_residues} residues mod {P}^2 exceeds the budget"
            f" {budget}"
        )
    P2 = P.square
    count = 0
    for r in residues(f.field, 2 * P.degree):
        if (r % P.poly).is_zero():
            continue
        if f.evaluate_mod(r, P2).is_zero():
            count += 1
    return count


def unit_root_count_general(f: BiPoly, modulus: Poly) -> int:
    """Brute-force count of coprime residues C mod an arbitrary modulus with
    f(C) = 0.  Test oracle for the prime-square fast paths; no
    multiplicativity in the modulus is assumed anywhere."""
    if modulus.degree < 1:
        raise ValueError("modulus must have positive degree")
    count = 0
    for r in residues(f.field, int(modulus.degree)):
        if r.is_zero():
            continue  # gcd(D, 0) = D is never trivial here
        if poly_gcd(modulus, r).degree != 0:
            continue
        if f.evaluate_mod(r, modulus).is_zero():
            count += 1
    return count


def local_root_profile(
    f: BiPoly,
    max_degree: int,
    *,
    budget: Optional[int] = None,
    scan_max_degree: Optional[int] = None,
) -> list[LocalCount]:
    """One LocalCount per prime of degree <= max_degree, ordered by degree
    then enumeration order."""
    require_admissible(f)
    threshold = hensel_threshold(f)
    bound = uniform_root_bound(f)
    out = []
    for P in primes_up_to(f.field, max_degree):
        fast = P.degree > threshold
        r1 = count_roots_mod_prime(
            f, P, scan_max_degree=scan_max_degree, checked=False
        )
        r2 = count_roots_mod_prime_square(f, P, budget=budget, checked=False)
        rho = count_unit_roots_mod_prime_square(
            f, P, budget=budget, checked=False
        )
        assert 0 <= rho <= r2 <= f.field.q ** (2 * P.degree)
        assert r2 <= bound
        out.append(
            LocalCount(
                prime=P,
                roots_mod_p=r1,
                roots_mod_p_squared=r2,
                unit_roots=rho,
                via_hensel=fast,
            )
        )
    return out
