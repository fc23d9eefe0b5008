"""The ring F_q[t]: arithmetic, gcd, irreducibility, square-freeness,
factorization, prime enumeration and counting, and the characteristic-p
decomposition into p-th-power components.

Polynomials are dense tuples of element codes, low degree first, with no
trailing zeros; the zero polynomial is the empty tuple and its degree is a
sentinel below every integer.  Enumeration of monic polynomials is in
odometer order over coefficient vectors (low-degree coefficient varies
fastest), so streams, partitions and emitted tables are reproducible.

Prime enumeration is backed by a product sieve per degree: every composite
monic of degree n is a prime of degree at most n/2 times a monic cofactor,
so marking those products leaves exactly the primes.  The per-polynomial
irreducibility test (used to certify user input and as a cross-check) is
Rabin's: t^(q^n) = t mod a together with gcd(t^(q^(n/r)) - t, a) = 1 for
every prime r dividing n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .config import DEFAULTS
from .errors import BudgetExceededError
from .finitefield import FieldElement, FiniteField

NEG_INF = float("-inf")


# ---------------------------------------------------------------------------
# kernels on raw code lists (low degree first, stripped)


def _strip(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _add(F, a, b):
    add = F.add
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, cb in enumerate(b):
        out[i] = add(out[i], cb)
    return _strip(out)


def _sub(F, a, b):
    sub = F.sub
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ca = a[i] if i < len(a) else 0
        cb = b[i] if i < len(b) else 0
        out.append(sub(ca, cb))
    return _strip(out)


def _neg(F, a):
    neg = F.neg
    return [neg(c) for c in a]


def _mul(F, a, b):
    if not a or not b:
        return []
    add = F.add
    mul = F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = add(out[i + j], mul(ca, cb))
    return _strip(out)


def _divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], list(a)
    add, sub, mul = F.add, F.sub, F.mul
    inv_lead = F.inv(b[-1])
    rem = list(a)
    db = len(b) - 1
    quo = [0] * (len(a) - db)
    for top in range(len(a) - 1, db - 1, -1):
        c = rem[top]
        if c:
            c = mul(c, inv_lead)
            quo[top - db] = c
            for j in range(db):
                if b[j]:
                    rem[top - db + j] = sub(rem[top - db + j], mul(c, b[j]))
        rem[top] = 0
    return quo and _strip(quo), _strip(rem[:db])


def _mod(F, a, b):
    return _divmod(F, a, b)[1]


def _gcd(F, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(F, a, b)
    if not a:
        return a
    inv_lead = F.inv(a[-1])
    mul = F.mul
    return [mul(c, inv_lead) for c in a]


def _xgcd(F, a, b):
    """Returns (g, s, t) with s*a + t*b = g, g monic (or empty)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, rem = _divmod(F, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _sub(F, s0, _mul(F, q, s1))
        t0, t1 = t1, _sub(F, t0, _mul(F, q, t1))
    if r0:
        c = F.inv(r0[-1])
        mul = F.mul
        r0 = [mul(x, c) for x in r0]
        s0 = [mul(x, c) for x in s0]
        t0 = [mul(x, c) for x in t0]
    return r0, s0, t0


def _modpow(F, base, e, mod):
    if len(mod) < 2:
        if not mod:
            raise ZeroDivisionError("zero modulus")
        return []
    result = [1]
    acc = _mod(F, base, mod)
    while e:
        if e & 1:
            result = _mod(F, _mul(F, result, acc), mod)
        acc = _mod(F, _mul(F, acc, acc), mod)
        e >>= 1
    return result


def _derivative(F, a):
    if len(a) < 2:
        return []
    p = F.p
    out = []
    for k in range(1, len(a)):
        r = k % p
        if r == 0 or a[k] == 0:
            out.append(0)
        else:
            c = a[k]
            acc = c
            for _ in range(r - 1):
                acc = F.add(acc, c)
            out.append(acc)
    return _strip(out)


def _pth_power(F, a):
    """a^p via the coefficientwise Frobenius: exponents stretch by p."""
    if not a:
        return []
    p = F.p
    out = [0] * ((len(a) - 1) * p + 1)
    for k, c in enumerate(a):
        if c:
            out[k * p] = F.pow_code(c, p)
    return out


def _pth_root(F, a):
    """Inverse of ``_pth_power``; requires every exponent divisible by p."""
    if not a:
        return []
    p = F.p
    frob_root = F.frob_root
    out = [0] * ((len(a) - 1) // p + 1)
    for k, c in enumerate(a):
        if c:
            if k % p:
                raise ValueError("not a p-th power")
            out[k // p] = frob_root(c)
    return out


def _code_of(q, coeffs):
    c = 0
    for x in reversed(coeffs):
        c = c * q + x
    return c


# ---------------------------------------------------------------------------


class Poly:
    """An element of F_q[t]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Sequence[int]):
        cs = list(coeffs)
        _strip(cs)
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field, cs) -> "Poly":
        p = object.__new__(cls)
        p.field = field
        p.coeffs = tuple(cs)
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls._raw(field, ())

    @classmethod
    def one(cls, field) -> "Poly":
        return cls._raw(field, (1,))

    @classmethod
    def variable(cls, field) -> "Poly":
        """The generator t."""
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field, value) -> "Poly":
        code = _scalar_code(field, value)
        return cls._raw(field, (code,) if code else ())

    @classmethod
    def from_elements(cls, field, elems: Sequence[FieldElement]) -> "Poly":
        for e in elems:
            if e.field != field:
                raise ValueError("field mismatch in coefficient list")
        return cls(field, [e.code for e in elems])

    @classmethod
    def from_string(cls, field, text: str) -> "Poly":
        from .parsing import parse_poly

        return parse_poly(text, field)

    @classmethod
    def monomial(cls, field, degree: int, coeff_code: int = 1) -> "Poly":
        if coeff_code == 0:
            return cls.zero(field)
        return cls._raw(field, (0,) * degree + (coeff_code,))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self):
        """Degree, or a sentinel below every integer for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def abs_value(self) -> int:
        """q^degree, with |0| = 0."""
        return self.field.q ** (len(self.coeffs) - 1) if self.coeffs else 0

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return FieldElement(self.field, self.coeffs[-1])

    def coefficient(self, k: int) -> FieldElement:
        code = self.coeffs[k] if 0 <= k < len(self.coeffs) else 0
        return FieldElement(self.field, code)

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        if self.coeffs[-1] == 1:
            return self
        inv = self.field.inv(self.coeffs[-1])
        mul = self.field.mul
        return Poly._raw(self.field, tuple(mul(c, inv) for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly._raw(self.field, tuple(_derivative(self.field, self.coeffs)))

    def shift(self, k: int) -> "Poly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def code(self) -> int:
        """Odometer index among polynomials of the same degree."""
        return _code_of(self.field.q, self.coeffs[:-1]) if self.coeffs else 0

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (FieldElement, int)):
            return Poly.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._raw(
            self.field, tuple(_add(self.field, list(self.coeffs), other.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._raw(
            self.field, tuple(_sub(self.field, self.coeffs, other.coeffs))
        )

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Poly._raw(self.field, tuple(_neg(self.field, self.coeffs)))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._raw(
            self.field, tuple(_mul(self.field, self.coeffs, other.coeffs))
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = Poly.one(self.field)
        acc = self
        while e:
            if e & 1:
                out = out * acc
            acc = acc * acc
            e >>= 1
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, r = _divmod(self.field, self.coeffs, other.coeffs)
        return Poly._raw(self.field, tuple(q or ())), Poly._raw(
            self.field, tuple(r)
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._raw(
            self.field, tuple(_mod(self.field, self.coeffs, other.coeffs))
        )

    def __eq__(self, other):
        if isinstance(other, (FieldElement, int)):
            other = Poly.constant(self.field, other)
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- text ----------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly(F_{self.field.q}, {self})"


def _scalar_code(field, value) -> int:
    if isinstance(value, FieldElement):
        if value.field != field:
            raise ValueError("field mismatch")
        return value.code
    if isinstance(value, int):
        return value % field.p
    raise TypeError(f"cannot coerce {value!r} into F_{field.q}")


def format_poly(a: Poly, var: str = "t") -> str:
    """Canonical text: descending powers, zero terms and unit factors omitted."""
    F = a.field
    if not a.coeffs:
        return "0"
    terms = []
    for k in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[k]
        if c == 0:
            continue
        cs = F.format_code(c)
        if k == 0:
            terms.append(cs)
            continue
        power = var if k == 1 else f"{var}^{k}"
        if c == 1:
            terms.append(power)
        elif "+" in cs:
            terms.append(f"({cs})*{power}")
        else:
            terms.append(f"{cs}*{power}")
    return " + ".join(terms)


# ---------------------------------------------------------------------------
# gcd family


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.field != b.field:
        raise ValueError("polynomials over different fields")
    return Poly._raw(a.field, tuple(_gcd(a.field, a.coeffs, b.coeffs)))


def poly_xgcd(a: Poly, b: Poly):
    """(g, s, t) with s*a + t*b = g and g monic."""
    g, s, t = _xgcd(a.field, a.coeffs, b.coeffs)
    return (
        Poly._raw(a.field, tuple(g)),
        Poly._raw(a.field, tuple(s)),
        Poly._raw(a.field, tuple(t)),
    )


def poly_modpow(base: Poly, e: int, mod: Poly) -> Poly:
    if mod.is_zero():
        raise ZeroDivisionError("zero modulus")
    if mod.degree < 1:
        raise ValueError("modulus must have positive degree")
    if e < 0:
        raise ValueError("negative exponent")
    return Poly._raw(
        base.field, tuple(_modpow(base.field, base.coeffs, e, mod.coeffs))
    )


def inverse_mod(a: Poly, mod: Poly) -> Poly:
    """Inverse of a modulo ``mod``; requires gcd(a, mod) = 1."""
    g, s, _ = _xgcd(a.field, a.coeffs, mod.coeffs)
    if len(g) != 1:
        raise ValueError("element not invertible modulo the given polynomial")
    return Poly._raw(a.field, tuple(_mod(a.field, s, mod.coeffs)))


# ---------------------------------------------------------------------------
# irreducibility and square-freeness


def _int_prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _moebius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def _divisors(n: int):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def is_irreducible(a: Poly) -> bool:
    """Rabin's irreducibility test."""
    n = a.degree
    if a.is_zero() or n < 1:
        raise ValueError("irreducibility is only defined for positive degree")
    if n == 1:
        return True
    F = a.field
    q = F.q
    mod = a.monic().coeffs
    t_poly = [0, 1]
    # frobenius powers t^(q^i) mod a for i = 1..n
    checkpoints = {n // r for r in _int_prime_factors(n)}
    h = list(t_poly)
    for i in range(1, n + 1):
        h = _modpow(F, h, q, mod)
        if i in checkpoints:
            g = _gcd(F, _sub(F, h, t_poly), mod)
            if len(g) != 1:
                return False
    return h == t_poly or _strip(_sub(F, h, t_poly)) == []


def is_squarefree(a: Poly) -> bool:
    """True iff no prime square divides a.

    The derivative criterion is valid because every irreducible in F_q[t] is
    separable: a nonconstant polynomial with vanishing derivative is a p-th
    power, and otherwise gcd(a, a') collects exactly the repeated part.
    """
    if a.is_zero():
        raise ValueError("square-freeness is undefined for 0")
    if a.degree == 0:
        return True
    d = a.derivative()
    if d.is_zero():
        return False
    return poly_gcd(a, d).degree == 0


class PrimeMod:
    """A certified monic irreducible, usable as a modulus."""

    __slots__ = ("poly", "degree", "_square")

    def __init__(self, poly: Poly, _certified: bool = False):
        if not _certified:
            if not poly.is_monic():
                raise ValueError("prime polynomials are monic")
            if not is_irreducible(poly):
                raise ValueError(f"{poly} is reducible")
        self.poly = poly
        self.degree = len(poly.coeffs) - 1
        self._square = None

    @property
    def square(self) -> Poly:
        if self._square is None:
            self._square = self.poly * self.poly
        return self._square

    @property
    def field(self) -> FiniteField:
        return self.poly.field

    @property
    def norm(self) -> int:
        """|P| = q^deg P."""
        return self.poly.field.q**self.degree

    def __eq__(self, other):
        return isinstance(other, PrimeMod) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"PrimeMod({self.poly!r})"


# ---------------------------------------------------------------------------
# enumeration and the prime table


def enumerate_monic(
    field: FiniteField,
    n: int,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[Poly]:
    """All monic polynomials of degree n in odometer order.

    ``start``/``stop`` select a sub-range of the q^n odometer codes so scans
    can be partitioned into disjoint chunks.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    q = field.q
    total = q**n
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError("bad enumeration range")
    for code in range(start, stop):
        c = code
        coeffs = []
        for _ in range(n):
            c, r = divmod(c, q)
            coeffs.append(r)
        coeffs.append(1)
        yield Poly._raw(field, tuple(coeffs))


def count_primes(field: FiniteField, n: int) -> int:
    """Number of monic irreducibles of degree n, by Moebius inversion of
    the degree-sum identity sum_{d | n} d*count(d) = q^n."""
    if n < 1:
        raise ValueError("degree must be positive")
    q = field.q
    total = sum(_moebius(d) * q ** (n // d) for d in _divisors(n))
    assert total % n == 0 and total >= 0
    return total // n


class _PrimeTable:
    """Per-field cache of monic irreducibles by degree, built with a
    product sieve: composites of degree n are exactly the products of a
    prime of degree at most n/2 with a monic cofactor."""

    def __init__(self, field: FiniteField):
        self.field = field
        self.by_degree: dict[int, list[PrimeMod]] = {}

    def ensure(self, max_degree: int, budget: Optional[int] = None) -> None:
        budget = budget or DEFAULTS.enumeration_budget
        F = self.field
        q = F.q
        for n in range(1, max_degree + 1):
            if n in self.by_degree:
                continue
            if q**n > budget:
                raise BudgetExceededError(
                    f"prime table for degree {n} needs {q**n} slots"
                    f" (budget {budget})"
                )
            total = q**n
            composite = bytearray(total)
            for d in range(1, n // 2 + 1):
                cof_deg = n - d
                cof_total = q**cof_deg
                for prime in self.by_degree[d]:
                    pcs = prime.poly.coeffs
                    for gcode in range(cof_total):
                        c = gcode
                        gcs = []
                        for _ in range(cof_deg):
                            c, r = divmod(c, q)
                            gcs.append(r)
                        gcs.append(1)
                        prod = _mul(F, pcs, gcs)
                        composite[_code_of(q, prod[:-1])] = 1
            found = []
            for code in range(total):
                if not composite[code]:
                    c = code
                    coeffs = []
                    for _ in range(n):
                        c, r = divmod(c, q)
                        coeffs.append(r)
                    coeffs.append(1)
                    found.append(
                        PrimeMod(Poly._raw(F, tuple(coeffs)), _certified=True)
                    )
            expected = count_primes(F, n)
            assert len(found) == expected, (
                f"sieve found {len(found)} primes of degree {n},"
                f" expected {expected}"
            )
            self.by_degree[n] = found


_tables: dict[FiniteField, _PrimeTable] = {}


def _table(field: FiniteField) -> _PrimeTable:
    tab = _tables.get(field)
    if tab is None:
        tab = _PrimeTable(field)
        _tables[field] = tab
    return tab


def enumerate_primes(
    field: FiniteField, n: int, budget: Optional[int] = None
) -> list[PrimeMod]:
    """Monic irreducibles of degree n, in odometer order."""
    if n < 1:
        raise ValueError("degree must be positive")
    tab = _table(field)
    tab.ensure(n, budget)
    return list(tab.by_degree[n])


def primes_up_to(
    field: FiniteField, max_degree: int, budget: Optional[int] = None
) -> list[PrimeMod]:
    """All primes of degree 1..max_degree, ordered by degree then odometer."""
    tab = _table(field)
    tab.ensure(max_degree, budget)
    out = []
    for d in range(1, max_degree + 1):
        out.extend(tab.by_degree[d])
    return out


# ---------------------------------------------------------------------------
# factorization, Euler phi


def factorize(
    a: Poly, budget: Optional[int] = None
) -> tuple[FieldElement, list[tuple[PrimeMod, int]]]:
    """Unit times monic prime powers, by trial division in enumeration order.

    Deliberately simple; it serves as the reference decomposition for the
    faster square-part machinery below.
    """
    if a.is_zero():
        raise ValueError("cannot factor 0")
    F = a.field
    unit = a.leading()
    rem = a.monic()
    out = []
    d = 1
    while 2 * d <= rem.degree:
        for prime in enumerate_primes(F, d, budget):
            if rem.degree < 2 * d:
                break
            mult = 0
            while True:
                q, r = divmod(rem, prime.poly)
                if not r.is_zero():
                    break
                rem = q
                mult += 1
            if mult:
                out.append((prime, mult))
        d += 1
    if rem.degree >= 1:
        out.append((PrimeMod(rem, _certified=True), 1))
    return unit, out


def euler_phi(modulus: Poly, budget: Optional[int] = None) -> int:
    """Number of residues of degree below deg(modulus) coprime to it."""
    if modulus.is_zero() or modulus.degree < 1:
        raise ValueError("phi requires a modulus of positive degree")
    q = modulus.field.q
    total = 1
    for prime, mult in factorize(modulus, budget)[1]:
        d = prime.degree
        total *= q ** (mult * d) - q ** ((mult - 1) * d)
    return total


# ---------------------------------------------------------------------------
# square-free decomposition and distinct-degree splitting (production path
# for scans; cross-checked against ``factorize`` in the tests)


def squarefree_decomposition(
    a: Poly,
) -> tuple[FieldElement, list[tuple[Poly, int]]]:
    """a = unit * prod g_i^(e_i) with the g_i monic, square-free and
    pairwise coprime.  Handles p-th-power parts via coefficient roots."""
    if a.is_zero():
        raise ValueError("cannot decompose 0")
    F = a.field
    unit = a.leading()
    out: list[tuple[Poly, int]] = []

    def rec(v: Poly, mult: int):
        if v.degree == 0:
            return
        d = v.derivative()
        if d.is_zero():
            rec(Poly._raw(F, tuple(_pth_root(F, v.coeffs))), mult * F.p)
            return
        g = poly_gcd(v, d)
        w = v // g
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, g)
            z = w // y
            if z.degree > 0:
                out.append((z, mult * i))
            w = y
            g = g // y
            i += 1
        if g.degree > 0:
            rec(g, mult)

    rec(a.monic(), 1)
    out.sort(key=lambda ge: (ge[1], ge[0].degree, ge[0].coeffs))
    return unit, out


def repeated_radical(a: Poly) -> Poly:
    """Product of the distinct primes whose square divides a (monic)."""
    out = Poly.one(a.field)
    for g, e in squarefree_decomposition(a)[1]:
        if e >= 2:
            out = out * g
    return out


def distinct_degree_profile(a: Poly) -> list[tuple[int, Poly]]:
    """For square-free monic a: [(d, product of the prime factors of degree
    d)], ascending in d."""
    F = a.field
    q = F.q
    rem = a.coeffs
    t_poly = [0, 1]
    h = list(t_poly)
    out = []
    d = 0
    while len(rem) - 1 >= 2 * (d + 1):
        d += 1
        h = _modpow(F, h, q, rem)
        g = _gcd(F, _sub(F, h, t_poly), rem)
        if len(g) > 1:
            out.append((d, Poly._raw(F, tuple(g))))
            rem, r = _divmod(F, rem, g)
            assert not r
            if len(rem) > 1:
                h = _mod(F, h, rem)
    if len(rem) > 1:
        out.append((len(rem) - 1, Poly._raw(F, tuple(rem))))
    return out


# ---------------------------------------------------------------------------
# primes in arithmetic progressions


def count_primes_ap(
    n: int, modulus: Poly, residue: Poly, budget: Optional[int] = None
) -> tuple[int, Fraction, float]:
    """Count primes of degree n congruent to ``residue`` mod ``modulus``.

    Returns (count, expected main term q^n/(n*phi), |count - main term|).
    """
    if modulus.degree < 1:
        raise ValueError("modulus must have positive degree")
    if poly_gcd(modulus, residue).degree != 0:
        raise ValueError("residue must be coprime to the modulus")
    F = modulus.field
    target = (residue % modulus).coeffs
    count = 0
    for prime in enumerate_primes(F, n, budget):
        if (prime.poly % modulus).coeffs == target:
            count += 1
    main = Fraction(F.q**n, n * euler_phi(modulus, budget))
    deviation = float(abs(Fraction(count) - main))
    return count, main, deviation


# ---------------------------------------------------------------------------
# decomposition a = sum_j t^j a_j(t)^p


def frobenius_decompose(a: Poly) -> tuple[Poly, ...]:
    """The unique (a_0, ..., a_{p-1}) with a = sum_j t^j * a_j^p.

    Exists because F_q[t] is free of rank p over the subring of p-th powers;
    coefficients split by exponent residue class and each takes a p-th root
    in the (perfect) coefficient field.
    """
    F = a.field
    p = F.p
    frob_root = F.frob_root
    parts: list[list[int]] = [[] for _ in range(p)]
    for k, c in enumerate(a.coeffs):
        j, i = k % p, k // p
        part = parts[j]
        while len(part) <= i:
            part.append(0)
        part[i] = frob_root(c)
    return tuple(Poly._raw(F, tuple(_strip(part))) for part in parts)


def frobenius_recompose(parts: Sequence[Poly], field: FiniteField) -> Poly:
    out = Poly.zero(field)
    for j, aj in enumerate(parts):
        out = out + Poly._raw(field, tuple(_pth_power(field, aj.coeffs))).shift(j)
    return out
