"""Arithmetic in the coefficient field F_q, q = p^m.

Elements are indexed by integer codes 0..q-1.  The code of an element is the
base-p packing of its coordinate vector over F_p, low degree first, so 0 and 1
are always the additive and multiplicative identities.  Extension fields are
realized as F_p[u] modulo a fixed monic irreducible; when no modulus is given
the least one is chosen (coefficients compared low-to-high degree, then by
residue value), which makes descriptors reproducible across runs.

For small q (at most ``element_table_limit``) all operations are backed by
precomputed tables; larger fields use per-call coordinate arithmetic.
Inverses are computed by the extended Euclidean algorithm on the coordinate
polynomial.  Descriptors are immutable and safe to share between threads.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

from .config import DEFAULTS
from .errors import ParseError


def is_prime_int(n: int) -> bool:
    """Trial-division primality test, enough for characteristics we accept."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Coordinate-polynomial helpers over F_p (plain lists of residues, low degree
# first, no trailing zeros).  Used to build extension-field tables and to
# validate moduli before any descriptor exists.


def _fp_strip(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = (out[i + j] + ca * cb) % p
    return _fp_strip(out)


def _fp_mod(a, mod, p):
    a = list(a)
    inv_lead = pow(mod[-1], p - 2, p)
    dm = len(mod) - 1
    while len(a) > dm:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        if c:
            for j, cm in enumerate(mod):
                a[shift + j] = (a[shift + j] - c * cm) % p
        a.pop()
        _fp_strip(a)
        if not a:
            break
    return a


def _fp_xgcd(a, b, p):
    """Extended Euclid on coordinate polynomials: g, s with s*a = g mod b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    while r1:
        # divide r0 by r1
        q = []
        rem = list(r0)
        inv_lead = pow(r1[-1], p - 2, p)
        while len(rem) >= len(r1) and rem:
            c = (rem[-1] * inv_lead) % p
            shift = len(rem) - len(r1)
            qq = [0] * (shift + 1)
            qq[shift] = c
            q = _fp_strip(
                [
                    (x + y) % p
                    for x, y in itertools.zip_longest(q, qq, fillvalue=0)
                ]
            )
            for j, cm in enumerate(r1):
                rem[shift + j] = (rem[shift + j] - c * cm) % p
            _fp_strip(rem)
        r0, r1 = r1, rem
        qs1 = _fp_mul(q, s1, p)
        new_s = _fp_strip(
            [
                (x - y) % p
                for x, y in itertools.zip_longest(s0, qs1, fillvalue=0)
            ]
        )
        s0, s1 = s1, new_s
    return r0, s0


def _fp_has_root(a, p):
    for r in range(p):
        acc = 0
        for c in reversed(a):
            acc = (acc * r + c) % p
        if acc == 0:
            return True
    return False


def _fp_is_irreducible_small(a, p):
    """Exhaustive factor search, valid for degrees up to 4."""
    deg = len(a) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if _fp_has_root(a, p):
        return False
    if deg <= 3:
        return True
    # degree 4: also rule out products of two quadratics
    for c0 in range(p):
        for c1 in range(p):
            d = _fp_mod(a, [c0, c1, 1], p)
            if not d:
                return False
    return True


def _format_fp_poly(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else f"{c}*"
            terms.append(f"{head}{var}" + (f"^{k}" if k > 1 else ""))
    return "+".join(terms) if terms else "0"


class FieldElement:
    """A value in F_q.  Thin immutable wrapper around an integer code."""

    __slots__ = ("field", "code")

    def __init__(self, field: "FiniteField", code: int):
        self.field = field
        self.code = code

    @property
    def coords(self) -> tuple:
        """Coordinates over F_p, low degree first, length m."""
        return self.field.decode(self.code)

    def is_zero(self) -> bool:
        return self.code == 0

    def _check(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return self.field.element(other)
            return NotImplemented
        if other.field != self.field:
            raise ValueError(
                f"field mismatch: {self.field!r} vs {other.field!r}"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, other.code))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(other.code, self.code))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field, self.field.mul(self.code, self.field.inv(other.code))
        )

    def __pow__(self, e: int):
        if e < 0:
            return FieldElement(
                self.field, self.field.pow_code(self.field.inv(self.code), -e)
            )
        return FieldElement(self.field, self.field.pow_code(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius_root(self) -> "FieldElement":
        """The unique r with r^p equal to this element."""
        return FieldElement(self.field, self.field.frob_root(self.code))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.code == self.field.element(other).code
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.code == other.code
        )

    def __hash__(self):
        return hash((self.field, self.code))

    def __str__(self):
        return self.field.format_code(self.code)

    def __repr__(self):
        return f"FieldElement({self.field.q}, {self})"


class FiniteField:
    """Descriptor for F_q with q = p^m.

    ``modulus`` is a tuple of m+1 residues over F_p (low degree first) when
    m > 1, and None for prime fields.
    """

    def __init__(
        self,
        p: int,
        m: int = 1,
        modulus: Optional[Sequence[int]] = None,
    ):
        if not is_prime_int(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be at least 1")
        q = p**m
        if q > DEFAULTS.field_size_guard:
            raise ValueError(
                f"field size {q} exceeds the guard {DEFAULTS.field_size_guard}"
            )
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            if modulus is not None:
                raise ValueError("a modulus is only meaningful for m > 1")
            self.modulus = None
        else:
            if modulus is None:
                mod = self._least_irreducible(p, m)
            else:
                mod = tuple(c % p for c in modulus)
                if len(mod) != m + 1 or mod[-1] != 1:
                    raise ValueError(
                        f"modulus must be monic of degree {m} over F_{p}"
                    )
                if not self._modulus_irreducible(list(mod), p, m):
                    raise ValueError(
                        f"modulus {_format_fp_poly(mod, 'u')} is reducible"
                        f" over F_{p}"
                    )
            self.modulus = tuple(mod)
        self._build_ops()

    # -- construction -----------------------------------------------------

    @staticmethod
    def _least_irreducible(p, m):
        # order: compare coefficients from degree 0 upward, then by residue
        for tail in itertools.product(range(p), repeat=m):
            cand = list(tail) + [1]
            if FiniteField._modulus_irreducible(cand, p, m):
                return tuple(cand)
        raise AssertionError("no irreducible modulus found")  # unreachable

    @staticmethod
    def _modulus_irreducible(coeffs, p, m):
        if m <= 4:
            return _fp_is_irreducible_small(coeffs, p)
        # higher degrees reuse the generic irreducibility test over F_p
        from .polyring import Poly, is_irreducible

        base = FiniteField(p)
        return is_irreducible(Poly(base, coeffs))

    def _build_ops(self):
        p, m, q = self.p, self.m, self.q
        tabled = q <= DEFAULTS.element_table_limit

        powers = [p**i for i in range(m)]
        self._powers = powers

        def decode(code):
            out = []
            for _ in range(m):
                code, r = divmod(code, p)
                out.append(r)
            return tuple(out)

        def encode(coords):
            c = 0
            for i in range(m - 1, -1, -1):
                c = c * p + coords[i]
            return c

        self._decode = decode
        self._encode = encode

        if p == 2:
            add = lambda a, b: a ^ b  # noqa: E731 (coordinate add is xor)
            neg = lambda a: a  # noqa: E731
            sub = add
        else:

            def add(a, b):
                return encode(
                    [(x + y) % p for x, y in zip(decode(a), decode(b))]
                )

            def sub(a, b):
                return encode(
                    [(x - y) % p for x, y in zip(decode(a), decode(b))]
                )

            def neg(a):
                return encode([(-x) % p for x in decode(a)])

        if m == 1:

            def mul_raw(a, b):
                return (a * b) % p

            def inv_raw(a):
                if a == 0:
                    raise ZeroDivisionError("inversion of zero")
                g, s, _ = _int_xgcd(a, p)
                return s % p

        else:
            mod = list(self.modulus)

            def mul_raw(a, b):
                prod = _fp_mul(list(decode(a)), list(decode(b)), p)
                prod = _fp_mod(prod, mod, p)
                prod += [0] * (m - len(prod))
                return encode(prod)

            def inv_raw(a):
                if a == 0:
                    raise ZeroDivisionError("inversion of zero")
                g, s = _fp_xgcd(_fp_strip(list(decode(a))), mod, p)
                # g is a nonzero constant; scale s by its inverse
                c = pow(g[0], p - 2, p)
                s = [(x * c) % p for x in s]
                s = _fp_mod(s, mod, p)
                s += [0] * (m - len(s))
                return encode(s)

        def pow_raw(a, e):
            if e == 0:
                return 1
            if a == 0:
                return 0
            acc = 1
            base = a
            while e:
                if e & 1:
                    acc = mul_raw(acc, base)
                base = mul_raw(base, base)
                e >>= 1
            return acc

        if tabled:
            if p != 2:
                add_t = [[add(a, b) for b in range(q)] for a in range(q)]
                add = lambda a, b: add_t[a][b]  # noqa: E731
                sub_t = [[sub(a, b) for b in range(q)] for a in range(q)]
                sub = lambda a, b: sub_t[a][b]  # noqa: E731
                neg_t = [neg(a) for a in range(q)]
                neg = lambda a: neg_t[a]  # noqa: E731
            mul_t = [[mul_raw(a, b) for b in range(q)] for a in range(q)]
            inv_t = [0] + [inv_raw(a) for a in range(1, q)]
            frob_t = [pow_raw(a, q // p) for a in range(q)]

            def mul(a, b):
                return mul_t[a][b]

            def inv(a):
                if a == 0:
                    raise ZeroDivisionError("inversion of zero")
                return inv_t[a]

            def frob_root(a):
                return frob_t[a]

            self.mul_table = mul_t
        else:
            mul = mul_raw
            inv = inv_raw

            def frob_root(a):
                return pow_raw(a, q // p)

            self.mul_table = None

        self.add = add
        self.sub = sub
        self.neg = neg
        self.mul = mul
        self.inv = inv
        self.frob_root = frob_root
        self._pow_raw = pow_raw

    # -- element access ----------------------------------------------------

    def pow_code(self, a: int, e: int) -> int:
        return self._pow_raw(a, e)

    def decode(self, code: int) -> tuple:
        return self._decode(code)

    def encode(self, coords: Sequence[int]) -> int:
        coords = [c % self.p for c in coords]
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates")
        return self._encode(coords)

    def element(self, value: int) -> FieldElement:
        """Embed an integer: value mod p as a prime-subfield constant."""
        return FieldElement(self, value % self.p)

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for F_{self.q}")
        return FieldElement(self, code)

    def from_coords(self, coords: Sequence[int]) -> FieldElement:
        return FieldElement(self, self.encode(coords))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def generator_u(self) -> FieldElement:
        """The residue class of u in F_p[u]/(modulus); only for m > 1."""
        if self.m == 1:
            raise ValueError("u is not defined over a prime field")
        return FieldElement(self, self.p)

    def elements(self) -> Iterator[FieldElement]:
        for code in range(self.q):
            yield FieldElement(self, code)

    def format_code(self, code: int) -> str:
        if self.m == 1:
            return str(code)
        return _format_fp_poly(self.decode(code), "u")

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"FiniteField({self.p})"
        return (
            f"FiniteField({self.p}, {self.m},"
            f" modulus={_format_fp_poly(self.modulus, 'u')})"
        )


def _int_xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qq = old_r // r
        old_r, r = r, old_r - qq * r
        old_s, s = s, old_s - qq * s
        old_t, t = t, old_t - qq * t
    return old_r, old_s, old_t


def field_from_order(q: int, modulus_text: Optional[str] = None) -> FiniteField:
    """Build F_q from its order, factoring q as p^m.

    ``modulus_text`` is an expression in u over F_p, e.g. ``"u^2+1"``.
    """
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = None
    for d in range(2, q + 1):
        if q % d == 0:
            p = d
            break
    m = 0
    r = q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    modulus = None
    if modulus_text is not None:
        from .parsing import parse_prime_field_poly

        modulus = parse_prime_field_poly(modulus_text, p, var="u")
    return FiniteField(p, m, modulus)
